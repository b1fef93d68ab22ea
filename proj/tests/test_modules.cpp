#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <random>

#include "ats/modules.hpp"
#include "oracles.hpp"

using namespace ats;

namespace {

Algebra make(const std::string& text) {
    return build_algebra(validate(parse_tree_spec(text)));
}

const char* kEdge = "vertices 2\nedge 1 2\nspecial 2\n";
const char* kExample2 = "vertices 4\nedge 1 2\nedge 2 3\nedge 2 4\nspecial 3 4\n";

}  // namespace

TEST_CASE("projective modules of the edge instance") {
    Algebra a = make(kEdge);
    Module p1 = projective_module(a, 1);
    Module p2 = projective_module(a, 2);
    CHECK(p1.dim() == 3);
    CHECK(p2.dim() == 2);
    CHECK(p1.dim_vector() == std::vector<int>{0, 2, 1});
    CHECK(p2.dim_vector() == std::vector<int>{0, 1, 1});
    CHECK(relations_annihilate(a, p1));
    CHECK(relations_annihilate(a, p2));
}

TEST_CASE("P_2 of Example 2 matches the Cartan column") {
    Algebra a = make(kExample2);
    Module p2 = projective_module(a, 2);
    CHECK(p2.dim() == 5);
    CHECK(p2.dim_vector() == std::vector<int>{0, 1, 2, 1, 1});
    IntMat c = cartan_matrix(a);
    for (int i = 1; i <= 4; ++i) {
        Module p = projective_module(a, i);
        auto dv = p.dim_vector();
        for (int s = 1; s <= 4; ++s) CHECK(dv[s] == c.at(s - 1, i - 1));
    }
}

TEST_CASE("Loewy structure follows the three structure bullets") {
    Algebra a = make(kExample2);
    // i not special: length 3, top = socle = {L_i}, middle = neighbors
    for (int i : {1, 2}) {
        LoewyReport rep = loewy_report(projective_module(a, i));
        CHECK(rep.loewy_length == 3);
        CHECK(rep.top == std::map<int, int>{{i, 1}});
        CHECK(rep.socle == std::map<int, int>{{i, 1}});
        std::map<int, int> mid;
        for (int j : a.inst.adj[i]) mid[j] = 1;
        CHECK(rep.layers[1] == mid);
    }
    // special leaves: length 2, socle = unique neighbor
    for (int s : {3, 4}) {
        LoewyReport rep = loewy_report(projective_module(a, s));
        CHECK(rep.loewy_length == 2);
        CHECK(rep.top == std::map<int, int>{{s, 1}});
        CHECK(rep.socle == std::map<int, int>{{a.inst.adj[s][0], 1}});
    }
    LoewyReport simple = loewy_report(simple_module(a, 1));
    CHECK(simple.loewy_length == 1);
    CHECK(simple.top == simple.socle);
}

TEST_CASE("injective modules") {
    Algebra a = make(kEdge);
    Module i1 = injective_module(a, 1);
    CHECK(i1.dim() == 3);
    CHECK(relations_annihilate(a, i1));
    CHECK(loewy_report(i1).socle == std::map<int, int>{{1, 1}});
    // i not special: P_i is injective
    CHECK(is_isomorphic(projective_module(a, 1), i1) == Tri::Yes);
    // spec'd identification on the fully special edge
    Algebra b = make("vertices 2\nedge 1 2\nspecial 1 2\n");
    CHECK(is_isomorphic(injective_module(b, 1), projective_module(b, 2)) == Tri::Yes);
}

TEST_CASE("hom spaces and the Yoneda dimension") {
    Algebra a = make(kEdge);
    Module p1 = projective_module(a, 1);
    CHECK(hom_space(p1, p1).dim == 2);
    CHECK(hom_space(simple_module(a, 1), simple_module(a, 2)).dim == 0);

    Algebra e2 = make(kExample2);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            Module pi = projective_module(e2, i);
            Module mj = projective_module(e2, j);
            CHECK(hom_space(pi, mj).dim == hom_dim(e2, i, j));
            CHECK(hom_space(pi, mj).dim == mj.dim_vector()[i]);  // Yoneda: dim e_i M
        }
}

TEST_CASE("isomorphism testing basics") {
    Algebra a = make(kEdge);
    Module p1 = projective_module(a, 1);
    Module p2 = projective_module(a, 2);
    CHECK(is_isomorphic(p1, p1) == Tri::Yes);
    CHECK(is_isomorphic(p1, p2) == Tri::No);
    // P_2 (special leaf) is injective only in the S = V case, not here
    CHECK(is_isomorphic(p2, injective_module(a, 1)) == Tri::No);
}

TEST_CASE("self-injectivity matches the criterion without reading S") {
    CHECK(is_self_injective(make("vertices 2\nedge 1 2\nspecial 1 2\n")) == Tri::Yes);
    CHECK(is_self_injective(make("vertices 4\nedge 1 2\nedge 1 3\nedge 1 4\n")) == Tri::Yes);
    CHECK(is_self_injective(make(kEdge)) == Tri::No);
    CHECK(is_self_injective(make(kExample2)) == Tri::No);

    std::mt19937 rng(90125);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        oracle::RawTree t = oracle::random_tree(rng, n);
        Algebra a = make(oracle::tree_text(t));
        bool expect = t.special.empty() || t.special.size() == static_cast<size_t>(n);
        CHECK(is_self_injective(a) == (expect ? Tri::Yes : Tri::No));
    }
}

TEST_CASE("balanced tensor dimension equals hom_dim") {
    Algebra a = make(kExample2);
    CHECK(tensor_dim(a, 2, 2) == 2);
    CHECK(tensor_dim(a, 1, 3) == 0);
    CHECK(tensor_dim(a, 3, 3) == 1);
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) CHECK(tensor_dim(a, j, k) == hom_dim(a, j, k));

    Algebra e = make(kEdge);
    for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k) CHECK(tensor_dim(e, j, k) == hom_dim(e, j, k));
}

TEST_CASE("relations annihilate every constructed module on random instances") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Algebra a = make(oracle::tree_text(oracle::random_tree(rng, n)));
        for (int i = 1; i <= n; ++i) {
            CHECK(relations_annihilate(a, projective_module(a, i)));
            CHECK(relations_annihilate(a, injective_module(a, i)));
            CHECK(relations_annihilate(a, simple_module(a, i)));
        }
    }
}

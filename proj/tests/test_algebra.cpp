#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <random>

#include "ats/algebra.hpp"
#include "oracles.hpp"

using namespace ats;

namespace {

Algebra make(const std::string& text) {
    return build_algebra(validate(parse_tree_spec(text)));
}

const char* kEdge = "vertices 2\nedge 1 2\nspecial 2\n";
const char* kExample2 = "vertices 4\nedge 1 2\nedge 2 3\nedge 2 4\nspecial 3 4\n";

}  // namespace

TEST_CASE("edge instance basis and dimension") {
    Algebra a = make(kEdge);
    CHECK(a.dim() == 5);
    std::vector<std::string> labels;
    for (const auto& b : a.basis) labels.push_back(b.label());
    CHECK(labels == std::vector<std::string>{"e_1", "e_2", "a(1->2)", "a(2->1)", "c_1"});
    CHECK(a.loop_index(2) == -1);  // special leaf: loop dies
    CHECK(a.arrow_index(1, 2) >= 0);
    CHECK(a.arrow_index(2, 2) == -1);
}

TEST_CASE("fixture dimensions match the closed formula and the path oracle") {
    struct Case { std::string text; int dim; };
    for (const auto& [text, dim] : std::vector<Case>{
             {kEdge, 5},
             {"vertices 3\nedge 1 2\nedge 2 3\nspecial 3\n", 9},
             {"vertices 4\nedge 1 2\nedge 2 3\nedge 3 4\nspecial 4\n", 13},
             {kExample2, 12},
             {"vertices 4\nedge 1 2\nedge 1 3\nedge 1 4\n", 14},
         }) {
        Algebra a = make(text);
        int n = a.inst.n, s = static_cast<int>(a.inst.special.size());
        CHECK(a.dim() == dim);
        CHECK(a.dim() == 4 * n - 2 - s);
        oracle::RawTree t{n, {a.inst.edges.begin(), a.inst.edges.end()}, a.inst.special};
        CHECK(oracle::algebra_dim(t) == dim);
    }
}

TEST_CASE("the path oracle flags the rejected degenerate case as infinite") {
    oracle::RawTree t{2, {{1, 2}}, {}};
    CHECK(!oracle::algebra_dim(t).has_value());
}

TEST_CASE("normal form of short words") {
    Algebra a = make(kEdge);
    CHECK(normal_form(a, {}, 1) == LinComb::single(a.idem_index(1)));
    CHECK(normal_form(a, {{1, 2}, {2, 1}}) == LinComb::single(a.loop_index(1)));
    CHECK(normal_form(a, {{2, 1}, {1, 2}}).is_zero());  // loop at the special leaf

    Algebra p = make("vertices 3\nedge 1 2\nedge 2 3\nspecial 3\n");
    CHECK(normal_form(p, {{1, 2}, {2, 3}}).is_zero());  // straight through
    CHECK(normal_form(p, {{1, 2}, {2, 1}}) == LinComb::single(p.loop_index(1)));
    CHECK(normal_form(p, {{3, 2}, {2, 3}}).is_zero());
    // both loops at the middle vertex are the same basis element
    CHECK(normal_form(p, {{2, 1}, {1, 2}}) == normal_form(p, {{2, 3}, {3, 2}}));
    CHECK_THROWS_AS(normal_form(p, {{1, 2}, {1, 2}}), NonComposable);
}

TEST_CASE("words of length three and beyond vanish") {
    Algebra a = make(kExample2);
    CHECK(normal_form(a, {{1, 2}, {2, 1}, {1, 2}}).is_zero());
    CHECK(normal_form(a, {{3, 2}, {2, 3}, {3, 2}}).is_zero());
    CHECK(normal_form(a, {{1, 2}, {2, 1}, {1, 2}, {2, 1}}).is_zero());
}

TEST_CASE("multiplication: identity, orthogonality, loop square") {
    Algebra a = make(kEdge);
    LinComb e1 = LinComb::single(a.idem_index(1));
    LinComb e2 = LinComb::single(a.idem_index(2));
    LinComb loop = LinComb::single(a.loop_index(1));
    CHECK(multiply(a, e1, e1) == e1);
    CHECK(multiply(a, e2, e1).is_zero());
    CHECK(multiply(a, loop, loop).is_zero());
    // e_1 + e_2 is a two-sided identity
    LinComb one;
    one.coeff[a.idem_index(1)] = 1;
    one.coeff[a.idem_index(2)] = 1;
    for (int b = 0; b < a.dim(); ++b) {
        LinComb x = LinComb::single(b);
        CHECK(multiply(a, one, x) == x);
        CHECK(multiply(a, x, one) == x);
    }
}

TEST_CASE("associativity on all basis triples of the fixtures") {
    for (const char* text : {kEdge, kExample2}) {
        Algebra a = make(text);
        int d = a.dim();
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    int xy = a.mult[x][y];
                    int yz = a.mult[y][z];
                    int left = xy < 0 ? -1 : a.mult[xy][z];
                    int right = yz < 0 ? -1 : a.mult[x][yz];
                    REQUIRE(left == right);
                }
    }
}

TEST_CASE("hom_dim agrees with the three-case formula on Example 2") {
    Algebra a = make(kExample2);
    CHECK(hom_dim(a, 2, 2) == 2);
    CHECK(hom_dim(a, 3, 3) == 1);
    CHECK(hom_dim(a, 1, 3) == 0);
    CHECK(hom_dim(a, 1, 2) == 1);
}

TEST_CASE("cartan matrices of the named instances") {
    IntMat c = cartan_matrix(make(kEdge));
    CHECK(c.a == std::vector<long long>{2, 1, 1, 1});

    IntMat c2 = cartan_matrix(make(kExample2));
    CHECK(c2.a == std::vector<long long>{2, 1, 0, 0, 1, 2, 1, 1, 0, 1, 1, 0, 0, 1, 0, 1});

    IntMat c3 = cartan_matrix(make("vertices 2\nedge 1 2\nspecial 1 2\n"));
    CHECK(c3.a == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("row and column sums of the Cartan matrix are projective dimensions") {
    Algebra a = make(kExample2);
    IntMat c = cartan_matrix(a);
    for (int t = 0; t < a.inst.n; ++t) {
        long long col = 0;
        int dim_pt = 0;
        for (int s = 0; s < a.inst.n; ++s) col += c.at(s, t);
        for (const auto& b : a.basis)
            if (b.src == t + 1) ++dim_pt;  // paths starting at t, i.e. b e_t = b
        CHECK(col == dim_pt);
    }
}

TEST_CASE("randomized instances: dimension oracle, hom formula, associativity") {
    std::mt19937 rng(414243);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        oracle::RawTree t = oracle::random_tree(rng, n);
        Algebra a = make(oracle::tree_text(t));
        CHECK(a.dim() == 4 * n - 2 - static_cast<int>(t.special.size()));
        CHECK(oracle::algebra_dim(t) == a.dim());
        IntMat c = cartan_matrix(a);
        CHECK(c == c.transposed());
        for (int l = 1; l <= n; ++l)
            for (int k = 1; k <= n; ++k)
                CHECK(hom_dim(a, l, k) == oracle::hom_dim_formula(t, l, k));
        int d = a.dim();
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    int xy = a.mult[x][y], yz = a.mult[y][z];
                    REQUIRE((xy < 0 ? -1 : a.mult[xy][z]) == (yz < 0 ? -1 : a.mult[x][yz]));
                }
    }
}

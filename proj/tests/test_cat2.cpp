#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include "ats/cat2.hpp"
#include "ats/search.hpp"

using namespace ats;

namespace {

Algebra make(const std::string& text) {
    return build_algebra(validate(parse_tree_spec(text)));
}

const char* kEdge = "vertices 2\nedge 1 2\nspecial 2\n";
const char* kExample2 = "vertices 4\nedge 1 2\nedge 2 3\nedge 2 4\nspecial 3 4\n";

}  // namespace

TEST_CASE("composition of one-morphisms") {
    Algebra a = make(kExample2);
    int n = a.inst.n;
    OneMorphism one = OneMorphism::identity(n);

    for (int i = 1; i <= n; ++i) {
        OneMorphism fii = OneMorphism::functor(n, i, i);
        OneMorphism sq = compose(a, fii, fii);
        OneMorphism expect = fii;
        expect.f.at(i - 1, i - 1) = k_scalar(a, i);
        CHECK(sq == expect);
        CHECK(compose(a, one, fii) == fii);
        CHECK(compose(a, fii, one) == fii);
    }
    // F_12 o F_34 = hom_dim(2,3) F_14 = F_14
    OneMorphism prod = compose(a, OneMorphism::functor(n, 1, 2), OneMorphism::functor(n, 3, 4));
    CHECK(prod == OneMorphism::functor(n, 1, 4));
    // F_13 o F_14 = hom_dim(3,1) F_14 = 0
    OneMorphism zero = compose(a, OneMorphism::functor(n, 1, 3), OneMorphism::functor(n, 1, 4));
    CHECK(zero.id_mult == 0);
    CHECK(zero.f.is_zero());
}

TEST_CASE("composition is associative on the indecomposables") {
    Algebra a = make(kExample2);
    int n = a.inst.n;
    std::vector<OneMorphism> gens{OneMorphism::identity(n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gens.push_back(OneMorphism::functor(n, i, j));
    for (const auto& f : gens)
        for (const auto& g : gens)
            for (const auto& h : gens)
                REQUIRE(compose(a, compose(a, f, g), h) == compose(a, f, compose(a, g, h)));
}

TEST_CASE("cell structure") {
    Algebra a = make(kExample2);
    CellStructure cs = cells(a);
    CHECK(cs.two_sided_cells.size() == 2);
    CHECK(cs.left_cells.size() == 5);
    CHECK(cs.right_cells.size() == 5);
    // the identity is alone in its cells
    bool id_alone = false;
    for (const auto& cell : cs.two_sided_cells)
        if (cell.size() == 1 && cell[0].ident) id_alone = true;
    CHECK(id_alone);
    // each non-identity left cell is {F_ij : i} for a fixed j
    for (const auto& cell : cs.left_cells) {
        if (cell.size() == 1 && cell[0].ident) continue;
        CHECK(cell.size() == 4);
        int j = cell[0].j;
        for (const auto& lab : cell) CHECK(lab.j == j);
    }

    CellStructure ce = cells(make(kEdge));
    CHECK(ce.right_cells.size() == 3);
    for (const auto& cell : ce.right_cells) {
        if (cell.size() == 1 && cell[0].ident) continue;
        CHECK(cell.size() == 2);
        int i = cell[0].i;
        for (const auto& lab : cell) CHECK(lab.i == i);
    }
}

TEST_CASE("cell representation matrices of the edge instance") {
    Algebra a = make(kEdge);
    auto f = cell_rep_matrices(a);
    CHECK(f[0][0].a == std::vector<long long>{2, 1, 0, 0});
    CHECK(f[1][1].a == std::vector<long long>{0, 0, 1, 1});
}

TEST_CASE("cell matrices satisfy the multiplication rule and trace formula") {
    for (const char* text : {kEdge, kExample2}) {
        Algebra a = make(text);
        int n = a.inst.n;
        auto f = cell_rep_matrices(a);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        REQUIRE(f[i][j] * f[k][l] ==
                                f[i][l].scaled(hom_dim(a, j + 1, k + 1)));
        for (int i = 0; i < n; ++i) CHECK(f[i][i].trace() == k_scalar(a, i + 1));
    }
}

TEST_CASE("matrix_of on the cell rep candidate") {
    Algebra a = make(kEdge);
    CandidateRep cell = cell_rep_candidate(a);
    CHECK(cell.r == 2);
    CHECK(cell.cartanB == cartan_matrix(a));
    int n = a.inst.n;

    CHECK(matrix_of(a, OneMorphism::identity(n), cell) == IntMat::identity(2));
    IntMat f11 = matrix_of(a, OneMorphism::functor(n, 1, 1), cell);
    CHECK(f11.a == std::vector<long long>{2, 1, 0, 0});
    CHECK(f11 == rep_matrix(cell, 0, 0));
    CHECK(f11 == cell_rep_matrices(a)[0][0]);

    OneMorphism doubled = OneMorphism::functor(n, 1, 1);
    doubled.f.at(0, 0) = 2;
    CHECK(matrix_of(a, doubled, cell) == f11.scaled(2));

    // multiplicativity under composition
    OneMorphism g = OneMorphism::functor(n, 1, 2);
    OneMorphism h = OneMorphism::functor(n, 2, 1);
    CHECK(matrix_of(a, compose(a, g, h), cell) ==
          matrix_of(a, g, cell) * matrix_of(a, h, cell));
}

TEST_CASE("the cell rep candidate passes every check") {
    for (const char* text : {kEdge, kExample2}) {
        Algebra a = make(text);
        CheckReport rp = check_candidate(a, cell_rep_candidate(a));
        CHECK(rp.composition_ok);
        CHECK(rp.transitive_ok);
        CHECK(rp.faithful);
        CHECK(rp.quasi_idem_ok);
        CHECK(rp.row_col_symmetry_ok);
        CHECK(rp.diag_dichotomy_ok);
        CHECK(rp.structural_checks_ok());
        CHECK(rp.is_cell_tensor);
    }
}

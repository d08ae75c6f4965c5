#include <doctest.h>

#include <random>

#include "augss/grfun.hpp"
#include "helpers.hpp"

using namespace augss;

namespace {

/* coefficients of prod_i (1 + t^{a_i} + ... + t^{(p-1) a_i}) */
std::vector<std::size_t> poincare_series(Scalar p, const std::vector<std::size_t>& alpha) {
    std::vector<std::size_t> poly{1};
    for (std::size_t ai : alpha) {
        std::vector<std::size_t> factor((p - 1) * ai + 1, 0);
        for (Scalar e = 0; e < p; ++e) factor[e * ai] = 1;
        std::vector<std::size_t> next(poly.size() + factor.size() - 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += poly[i] * factor[j];
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

TEST_SUITE("grfun") {

TEST_CASE("translation action") {
    auto A = GroupAlgebra::make(cyclic_group(4));
    FunctionOnG eps = FunctionOnG::indicator(A, 0);
    /* eps.g is the indicator of g^{-1} */
    for (std::size_t g = 0; g < 4; ++g) {
        FunctionOnG moved = translate(eps, AlgebraElement::group_element(A, g));
        CHECK(moved == FunctionOnG::indicator(A, A->group().inverse[g]));
    }
    FunctionOnG psi{A, {1, 0, 1, 0}};
    CHECK(translate(psi, AlgebraElement::unit(A)) == psi);
    FunctionOnG one = FunctionOnG::constant(A, 1);
    for (std::size_t g = 1; g < 4; ++g)
        CHECK(translate(one, AlgebraElement::lambda(A, g)).is_zero());
}

TEST_CASE("filtration degrees") {
    auto A = GroupAlgebra::make(elementary_abelian_group(2, 2));
    CHECK(filtration_degree(FunctionOnG::constant(A, 1)) == 0);
    CHECK(filtration_degree(FunctionOnG::zero(A)) == -1);
    CHECK(filtration_degree(FunctionOnG::indicator(A, 0)) == 2);  // eps survives all of I^2

    for (std::size_t order : {4u, 8u}) {
        auto B = GroupAlgebra::make(cyclic_group(order));
        YBasis Y = y_basis(B);
        for (std::size_t i = 0; i < Y.y.size(); ++i)
            CHECK(filtration_degree(Y.y[i]) == static_cast<int>(Y.alpha[i]));
    }
}

TEST_CASE("y basis digits") {
    auto A = GroupAlgebra::make(cyclic_group(2));
    YBasis YA = y_basis(A);
    CHECK(YA.y[0] == FunctionOnG::indicator(A, 1));

    auto B = GroupAlgebra::make(elementary_abelian_group(2, 2));
    YBasis YB = y_basis(B);
    for (std::size_t g = 0; g < 4; ++g) {
        CHECK(YB.y[0].values[g] == B->jennings().normal_form[g][0]);
        CHECK(YB.y[1].values[g] == B->jennings().normal_form[g][1]);
    }

    /* Z/4 with f_1 = t, f_2 = t^2: y_2 on (e,t,t^2,t^3) = (0,0,1,1) */
    auto C = GroupAlgebra::make(cyclic_group(4));
    YBasis YC = y_basis(C);
    CHECK(YC.y[1].values == std::vector<Scalar>{0, 0, 1, 1});
    CHECK(YC.y[0].values == std::vector<Scalar>{0, 1, 0, 1});
}

TEST_CASE("augmentation image criterion") {
    auto A = GroupAlgebra::make(elementary_abelian_group(2, 2));
    CHECK_FALSE(in_augmentation_image(FunctionOnG::indicator(A, 0)));
    YBasis Y = y_basis(A);
    CHECK(in_augmentation_image(Y.y[0]));
    CHECK(in_augmentation_image(FunctionOnG::constant(A, 1)));

    /* cross-check against the subspace C^0(G).I */
    FunctionOnG eps = FunctionOnG::indicator(A, 0);
    const Subspace& I = A->ideal_power(1);
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t i = 0; i < I.dim(); ++i)
        gens.push_back(translate(eps, AlgebraElement(A, I.basis().row(i))).values);
    Subspace img(2, 4, Matrix::from_rows(2, 4, gens));
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        FunctionOnG f{A, augss::testing::random_element(rng, A).coeffs()};
        CHECK(in_augmentation_image(f) == img.contains(f.values));
    }
}

TEST_CASE("gr_cup structures") {
    /* Z/4: F_2[y1,y2]/(y1^2, y2^2), degrees 1 and 2 */
    auto A = GroupAlgebra::make(cyclic_group(4));
    GradedRing R = gr_cup(A);
    CHECK(R.dims == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(R.monomials.size() == 4);
    std::size_t y1 = R.monomial_index({1, 0});
    std::size_t y2 = R.monomial_index({0, 1});
    CHECK(R.degree[y1] == 1);
    CHECK(R.degree[y2] == 2);
    CHECK(R.product_mono[y1][y1] == GradedRing::zero_product);
    CHECK(R.product_mono[y2][y2] == GradedRing::zero_product);
    CHECK(R.product_mono[y1][y2] == R.monomial_index({1, 1}));

    /* elementary abelian: all generators in degree 1 */
    auto B = GroupAlgebra::make(elementary_abelian_group(3, 2));
    GradedRing RB = gr_cup(B);
    for (std::size_t i = 0; i < 2; ++i) {
        std::vector<Scalar> e(2, 0);
        e[i] = 1;
        CHECK(RB.degree[RB.monomial_index(e)] == 1);
    }

    /* Z/8: one dimension in every degree 0..7 */
    auto C = GroupAlgebra::make(cyclic_group(8));
    CHECK(gr_cup(C).dims == std::vector<std::size_t>(8, 1));
}

TEST_CASE("poincare series matches the Jennings degrees") {
    for (Scalar p : {2u, 3u}) {
        for (const PGroup& g : small_group_catalog(p, p == 2 ? 8 : 9)) {
            auto A = GroupAlgebra::make(g);
            GradedRing R = gr_cup(A);
            CHECK(R.dims == poincare_series(p, A->jennings().alpha));
        }
    }
}

TEST_CASE("Fermat pointwise vs truncation in the graded ring") {
    auto A = GroupAlgebra::make(cyclic_group(9));
    YBasis Y = y_basis(A);
    for (const auto& y : Y.y) CHECK(y.pow(3) == y);  // pointwise y^p = y
    GradedRing R = gr_cup(A);
    for (std::size_t i = 0; i < Y.y.size(); ++i) {
        std::vector<Scalar> e(Y.y.size(), 0);
        e[i] = 1;
        std::size_t yi = R.monomial_index(e);
        e[i] = 2;
        std::size_t yi2 = R.monomial_index(e);
        /* y_i^{p-1} . y_i = y_i^p = 0 in gr */
        CHECK(R.product_mono[yi2][yi] == GradedRing::zero_product);
    }
}

TEST_CASE("twisted Leibniz rule for translation") {
    std::mt19937 rng(11);
    for (Scalar p : {2u, 3u}) {
        auto A = GroupAlgebra::make(p == 2 ? cyclic_group(4) : heisenberg_group(3));
        for (int t = 0; t < 5; ++t) {
            FunctionOnG f{A, augss::testing::random_element(rng, A).coeffs()};
            FunctionOnG h{A, augss::testing::random_element(rng, A).coeffs()};
            for (std::size_t g = 0; g < A->size(); ++g) {
                AlgebraElement lam = AlgebraElement::lambda(A, g);
                FunctionOnG lhs = translate(f.cup(h), lam);
                FunctionOnG rhs = translate(f, lam).cup(translate(h, lam)) +
                                  translate(f, lam).cup(h) + f.cup(translate(h, lam));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("filtration multiplicativity in degree zero") {
    std::mt19937 rng(13);
    auto A = GroupAlgebra::make(cyclic_group(8));
    for (int t = 0; t < 10; ++t) {
        FunctionOnG f{A, augss::testing::random_element(rng, A).coeffs()};
        FunctionOnG h{A, augss::testing::random_element(rng, A).coeffs()};
        int df = filtration_degree(f), dh = filtration_degree(h);
        int dfh = filtration_degree(f.cup(h));
        if (df >= 0 && dh >= 0) CHECK(dfh <= df + dh);
    }
}

TEST_CASE("y_j.(f_i - 1) in degree one") {
    auto A = GroupAlgebra::make(elementary_abelian_group(3, 3));
    YBasis Y = y_basis(A);
    const auto& basis = A->jennings().basis;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) {
            FunctionOnG moved = translate(Y.y[j], AlgebraElement::lambda(A, basis[i]));
            if (i == j)
                CHECK(moved == FunctionOnG::constant(A, 1));
            else
                CHECK(moved.is_zero());
        }
}

TEST_CASE("C^0(G) is free of rank one over the group algebra") {
    for (const PGroup& g : small_group_catalog(2, 8)) {
        auto A = GroupAlgebra::make(g);
        FunctionOnG eps = FunctionOnG::indicator(A, A->group().identity);
        Matrix m(A->p(), A->size(), A->size());
        for (std::size_t x = 0; x < A->size(); ++x) {
            FunctionOnG img = translate(eps, AlgebraElement::group_element(A, x));
            for (std::size_t s = 0; s < A->size(); ++s) m.set(s, x, img.values[s]);
        }
        CHECK(rank(m) == A->size());
    }
}

}  // TEST_SUITE

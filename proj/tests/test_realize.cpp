#include <doctest.h>

#include "augss/realize.hpp"
#include "helpers.hpp"

using namespace augss;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_SUITE("realize") {

TEST_CASE("torus and lens building blocks") {
    FreeComplex T = torus_complex(2, 3);
    for (int m = 0; m <= 3; ++m) CHECK(T.rank(m) == binom(3, m));
    CHECK(homology(T).total() == 8);

    for (Scalar p : {2u, 3u, 5u}) {
        FreeComplex L = lens_complex(p);
        CHECK(L.ranks() == std::vector<std::size_t>{1, 1, 1, 1});
        /* the free complex computes the homology of the total space S^3 */
        CHECK(homology(L).dims == std::vector<std::size_t>{1, 0, 0, 1});
    }
}

TEST_CASE("sphere times torus") {
    for (auto [p, a, r] : {std::tuple<Scalar, std::size_t, std::size_t>{2, 2, 2}, {3, 2, 1}}) {
        FreeComplex S = sphere_times_torus(p, a, r);
        for (int m = S.min_degree(); m <= S.max_degree(); ++m)
            CHECK(S.rank(m) == binom(a, m) + binom(a, m - r - 1));
        CHECK(homology(S).total() == 2u << a);
    }
    CHECK(sphere_times_torus(2, 2, 2).ranks() == std::vector<std::size_t>{1, 2, 1, 1, 2, 1});
}

TEST_CASE("s3 times torus") {
    for (auto [p, a] : {std::pair<Scalar, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
        FreeComplex S = s3_times_torus(p, a);
        for (int m = S.min_degree(); m <= S.max_degree(); ++m) {
            std::size_t expect = 0;
            for (int i = 0; i <= 3; ++i) expect += binom(a - 1, m - i);
            CHECK(S.rank(m) == expect);
        }
        CHECK(homology(S).total() == (1u << a));
    }
    /* a = 1 reduces to the lens complex */
    FreeComplex S1 = s3_times_torus(3, 1);
    CHECK(S1.ranks() == lens_complex(3).ranks());
    CHECK(homology(S1).dims == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("the lens complex is the rank-one cone up to signs") {
    for (Scalar p : {2u, 3u}) {
        KoszulComplex K = build_koszul(p, 1);
        ChainMap ident = s3_cone_identification(K);
        CHECK(ident.commutes());
        CHECK(ident.augmentation_invertible());
    }
}

TEST_CASE("s3 cone identification for higher rank") {
    for (auto [p, a] : {std::pair<Scalar, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
        KoszulComplex K = build_koszul(p, a);
        CHECK_NOTHROW(s3_cone_identification(K));
    }
}

TEST_CASE("choose_automorphism") {
    auto A = GroupAlgebra::make(elementary_abelian_group(2, 2));
    GroupAut id = choose_automorphism(A, {1, 0});
    for (std::size_t g = 0; g < 4; ++g) CHECK(id.perm[g] == g);

    GroupAut phi = choose_automorphism(A, {1, 1});
    CHECK(phi.perm[1] == 3);  // f_1 -> f_1 f_2
    CHECK(phi.perm[2] == 2);  // f_2 -> f_2

    CHECK_THROWS_AS(choose_automorphism(A, {0, 0}), std::invalid_argument);

    auto B = GroupAlgebra::make(elementary_abelian_group(3, 2));
    CHECK_NOTHROW(choose_automorphism(B, {0, 2}));
}

TEST_CASE("realize: boundary cycles give the sphere model") {
    KoszulComplex K = build_koszul(2, 2);
    RealizationResult res = realize_cone(K, cycle_from_mu(K, 2, {0}));
    CHECK(res.verdict == Verdict::Realized);
    CHECK(res.model_name == "S^3 x T^2");
    REQUIRE(res.model.has_value());
    std::size_t total = 0;
    for (std::size_t d : res.cone_homology) total += d;
    CHECK(total == 8);

    /* a nonzero boundary representative goes through the triangular iso */
    KChain b = kchain_basis(K, {1, 2}, K.lambda(1));
    KoszulCycle w = normalize_cycle(K, apply_diff(K, b));
    CHECK(w.class_is_zero());
    CHECK(w.raw.has_value());
    RealizationResult res2 = realize_cone(K, w);
    CHECK(res2.verdict == Verdict::Realized);
    REQUIRE(res2.certificate.has_value());
    CHECK(res2.certificate->commutes());
}

TEST_CASE("realize: unit classes in degree zero give the empty space") {
    for (auto [p, a] : {std::pair<Scalar, std::size_t>{2, 2}, {3, 2}}) {
        KoszulComplex K = build_koszul(p, a);
        RealizationResult res = realize_cone(K, cycle_from_mu(K, 0, {1}));
        CHECK(res.verdict == Verdict::EmptySpace);
        for (std::size_t d : res.cone_homology) CHECK(d == 0);
    }
}

TEST_CASE("realize: degree-one classes give the twisted s3 model") {
    for (auto [p, a] : {std::pair<Scalar, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
        KoszulComplex K = build_koszul(p, a);
        std::vector<Scalar> mu(a, 0);
        mu[0] = 1;
        RealizationResult res = realize_cone(K, cycle_from_mu(K, 1, mu));
        CHECK(res.verdict == Verdict::Realized);
        REQUIRE(res.certificate.has_value());
        CHECK(res.certificate->commutes());
        CHECK(res.certificate->augmentation_invertible());
        CHECK(res.model_homology == res.cone_homology);

        /* a generic class */
        std::vector<Scalar> mu2(a, 1);
        RealizationResult res2 = realize_cone(K, cycle_from_mu(K, 1, mu2));
        CHECK(res2.verdict == Verdict::Realized);
        REQUIRE(res2.certificate.has_value());
    }
}

TEST_CASE("realize: high-degree classes are obstructed") {
    KoszulComplex K = build_koszul(2, 3);
    RealizationResult res = realize_cone(K, cycle_from_mu(K, 2, {1, 0, 1}));
    CHECK(res.verdict == Verdict::NotRealizable);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->subset == std::vector<std::size_t>{1, 2});
}

TEST_CASE("nonempty verdicts respect the Carlsson bound") {
    for (auto [p, a] : {std::pair<Scalar, std::size_t>{2, 2}, {3, 2}}) {
        KoszulComplex K = build_koszul(p, a);
        for (std::size_t r = 0; r <= 1; ++r) {
            std::size_t count = K.subsets[r].size();
            std::size_t total = 1;
            for (std::size_t i = 0; i < count; ++i) total *= p;
            for (std::size_t code = 0; code < total; ++code) {
                std::vector<Scalar> mu(count);
                std::size_t c = code;
                for (std::size_t i = 0; i < count; ++i) {
                    mu[i] = c % p;
                    c /= p;
                }
                RealizationResult res = realize_cone(K, cycle_from_mu(K, r, mu));
                if (res.verdict == Verdict::EmptySpace) continue;
                std::size_t h = 0;
                for (std::size_t d : res.cone_homology) h += d;
                CHECK(h >= (1u << a));
            }
        }
    }
}

}  // TEST_SUITE

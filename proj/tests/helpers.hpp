#pragma once

#include <random>

#include "augss/complex.hpp"
#include "augss/koszul.hpp"

namespace augss::testing {

/* the 6-term F_2(Z/2)^2 cochain complex with differentials
   (l1;l2), (l2 l1), (l1l2), (l1;l2), (l2 l1) in degrees 0..5 */
inline FreeComplex example36() {
    AlgebraPtr A = GroupAlgebra::make(elementary_abelian_group(2, 2));
    AlgebraElement l1 = AlgebraElement::lambda(A, 1);
    AlgebraElement l2 = AlgebraElement::lambda(A, 2);
    auto col = [&](const AlgebraElement& a, const AlgebraElement& b) {
        AlgMatrix m(A, 2, 1);
        m.at(0, 0) = a;
        m.at(1, 0) = b;
        return m;
    };
    auto row = [&](const AlgebraElement& a, const AlgebraElement& b) {
        AlgMatrix m(A, 1, 2);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        return m;
    };
    AlgMatrix mid(A, 1, 1);
    mid.at(0, 0) = l1 * l2;
    std::vector<AlgMatrix> diffs{col(l1, l2), row(l2, l1), mid, col(l1, l2), row(l2, l1)};
    return FreeComplex(A, Direction::cochain, 0, {1, 2, 1, 1, 2, 1}, std::move(diffs));
}

inline AlgebraElement random_element(std::mt19937& rng, const AlgebraPtr& A) {
    std::uniform_int_distribution<Scalar> coef(0, A->p() - 1);
    std::vector<Scalar> c(A->size());
    for (auto& x : c) x = coef(rng);
    return AlgebraElement(A, std::move(c));
}

/* random x with x.u = 0, the left annihilator of u */
inline AlgebraElement random_left_annihilator(std::mt19937& rng, const AlgebraElement& u) {
    Subspace ker = kernel(u.right_mult_matrix());
    const AlgebraPtr& A = u.algebra();
    if (ker.dim() == 0) return AlgebraElement::zero(A);
    std::uniform_int_distribution<Scalar> coef(0, A->p() - 1);
    AlgebraElement out = AlgebraElement::zero(A);
    for (std::size_t i = 0; i < ker.dim(); ++i)
        out = out + AlgebraElement(A, ker.basis().row(i)).scaled(coef(rng));
    return out;
}

/* random bounded free cochain complex with d.d = 0: a staircase of
   annihilating pairs plus a random row-echelon style basis change */
inline FreeComplex random_cochain_complex(std::mt19937& rng, const AlgebraPtr& A,
                                          std::size_t degrees = 4, std::size_t max_rank = 2) {
    std::uniform_int_distribution<std::size_t> rk(1, max_rank);
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < degrees; ++i) ranks.push_back(rk(rng));

    std::vector<AlgMatrix> diffs;
    AlgebraElement prev = AlgebraElement::zero(A);
    for (std::size_t i = 0; i + 1 < degrees; ++i) {
        AlgMatrix d(A, ranks[i + 1], ranks[i]);
        /* one nonzero staircase entry per differential keeps d.d = 0 easy */
        AlgebraElement u = i == 0 ? [&] {
            AlgebraElement x = random_element(rng, A);
            return x - AlgebraElement::unit(A).scaled(x.augmentation());
        }()
                                  : random_left_annihilator(rng, prev);
        d.at(0, 0) = u;
        prev = u;
        diffs.push_back(std::move(d));
    }
    FreeComplex base(A, Direction::cochain, 0, ranks, std::move(diffs));

    /* conjugate by random unipotent basis changes to spread entries */
    std::vector<AlgMatrix> blocks;
    for (std::size_t i = 0; i < degrees; ++i) {
        AlgMatrix s = AlgMatrix::identity(A, ranks[i]);
        std::uniform_int_distribution<std::size_t> idx(0, ranks[i] - 1);
        std::size_t r1 = idx(rng), c1 = idx(rng);
        if (r1 != c1) {
            AlgebraElement x = random_element(rng, A);
            s.at(r1, c1) = s.at(r1, c1) + x;
        }
        blocks.push_back(std::move(s));
    }
    /* S_{q+1} d S_q^{-1}: compute the inverse by unipotent reversal */
    auto invert = [&](const AlgMatrix& s) {
        AlgMatrix inv = AlgMatrix::identity(A, s.rows);
        for (std::size_t r = 0; r < s.rows; ++r)
            for (std::size_t c = 0; c < s.cols; ++c)
                if (r != c && !s.at(r, c).is_zero()) inv.at(r, c) = inv.at(r, c) - s.at(r, c);
        return inv;
    };
    std::vector<AlgMatrix> twisted;
    for (std::size_t i = 0; i + 1 < degrees; ++i)
        twisted.push_back(blocks[i + 1] * base.diff_at(i) * invert(blocks[i]));
    return FreeComplex(A, Direction::cochain, 0, ranks, std::move(twisted));
}

}  // namespace augss::testing

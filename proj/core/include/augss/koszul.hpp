#pragma once

#include "augss/complex.hpp"

namespace augss {

/* The Koszul complex of F_p(Z/p)^a with respect to (lambda_1..lambda_a).
   Degree-m basis {z_s | s subset of {1..a}, |s| = m}, subsets ordered
   lexicographically; d(z_s) = sum_i (-1)^i lambda_{s_i} z_{s minus s_i}. */
struct KoszulComplex {
    AlgebraPtr A;
    std::size_t a = 0;
    FreeComplex complex;  // chain, degrees 0..a
    std::vector<std::vector<std::vector<std::size_t>>> subsets;  // per degree

    std::size_t subset_index(const std::vector<std::size_t>& s) const;
    AlgebraElement lambda(std::size_t i) const;  // f_i - 1, i in 1..a
};

KoszulComplex build_koszul(Scalar p, std::size_t a);

/* chain in K_m as coefficients over the z_s basis */
struct KChain {
    int degree = 0;
    std::vector<AlgebraElement> c;

    bool is_zero() const;
    KChain operator+(const KChain& rhs) const;
    KChain operator-(const KChain& rhs) const;
    KChain scaled(Scalar s) const;
    bool operator==(const KChain& rhs) const;
};

KChain kchain_zero(const KoszulComplex& K, int degree);
KChain kchain_basis(const KoszulComplex& K, const std::vector<std::size_t>& s,
                    const AlgebraElement& coeff);
KChain apply_diff(const KoszulComplex& K, const KChain& x);
bool is_cycle(const KoszulComplex& K, const KChain& x);

/* exterior product with shuffle signs, bilinear over F_pG */
KChain wedge(const KoszulComplex& K, const KChain& x, const KChain& y);

/* coordinates of [c] in the exterior basis {[lambda_s^{p-1} z_s]} */
std::vector<Scalar> homology_class(const KoszulComplex& K, const KChain& cycle);

/* degree-r cycle in normal form: w = sum_s mu_s lambda_{s_1}^{p-1}...z_s */
struct KoszulCycle {
    std::size_t r = 0;
    std::vector<Scalar> mu;          // indexed by r-subsets in lexicographic order
    std::optional<KChain> raw;        // original cycle, if it differed
    std::optional<KChain> correction; // b with raw = normal + d(b)

    bool class_is_zero() const;
};

KChain normal_chain(const KoszulComplex& K, const KoszulCycle& w);
KoszulCycle normalize_cycle(const KoszulComplex& K, const KChain& cycle);
KoszulCycle cycle_from_mu(const KoszulComplex& K, std::size_t r, std::vector<Scalar> mu);

/* chain-level mapping cone of multiplication by the normal form of w */
FreeComplex build_cone(const KoszulComplex& K, const KoszulCycle& w);
/* multiplication by w as a chain map shift(K, r) -> K */
ChainMap multiplication_map(const KoszulComplex& K, const KChain& w);

/* cochain dual of the cone with the explicit w* block
   z_t^* -> sum_{s in t} (shuffle sign) mu_s (z_{t-s})^* . lambda_s^{p-1}... */
FreeComplex dual_cone(const KoszulComplex& K, const KoszulCycle& w);
FreeComplex dual_koszul(const KoszulComplex& K);

/* class of lambda^{p-1} z for a solution of dz = lambda, with the closed-form
   coordinates cross-checked projectively (the reported unit scales them) */
struct PowerCycleClass {
    std::vector<Scalar> coords;      // computed homology class
    std::vector<Scalar> predicted;   // mu_i from lambda + I^2
    Scalar unit;                     // coords = unit * predicted when nonzero
};
PowerCycleClass class_of_power_cycle(const KoszulComplex& K, const AlgebraElement& lambda);

/* Phi: phi^* K -> K built from one linear solve of phi^{-1}(lambda_i) =
   sum_j a_ji lambda_j, extended by exterior powers; rho(phi) is the induced
   action on H_1, asserted to equal the matrix of phi^{-1} on I/I^2 */
ChainMap phi_iso(const KoszulComplex& K, const GroupAut& phi);
Matrix aut_action(const KoszulComplex& K, const GroupAut& phi);

/* coordinates of u + I^2 in the lambda basis of I/I^2 (elementary abelian) */
std::vector<Scalar> ideal_class_coords(const KoszulComplex& K, const AlgebraElement& u);

/* automorphism of (Z/p)^a from an invertible exponent matrix */
GroupAut aut_from_matrix(const AlgebraPtr& A, const Matrix& M);

}  // namespace augss

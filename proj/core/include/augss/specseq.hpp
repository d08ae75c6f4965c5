#pragma once

#include "augss/complex.hpp"
#include "augss/grfun.hpp"

#include <map>

namespace augss {

/* Free cochain complex with the two coinciding filtrations
   F^k C^q = {x | x.I^{k+1} = 0} = C^q . I^{L-k}; equality is asserted. */
struct FilteredComplex {
    FreeComplex C;
    ExpandedComplex E;
    std::vector<std::vector<Subspace>> F;  // [q - min][k + 1], k = -1 .. L

    const AlgebraPtr& algebra() const { return C.algebra(); }
    std::size_t L() const { return C.algebra()->L(); }
    int min_q() const { return C.min_degree(); }
    int max_q() const { return C.max_degree(); }
    /* F^k C^q with clamping: k < 0 gives 0, k >= L gives everything */
    const Subspace& level(int q, long k) const;
    /* expanded differential leaving degree q; empty rows when q = max */
    const Matrix* diff_from(int q) const;
};

FilteredComplex filter(const FreeComplex& c);

struct PageCell {
    std::size_t dim = 0;
    Matrix reps;       // dim x ambient; canonical representative cocycles
    Matrix projector;  // coordinates of Z_r vectors modulo B_r
    Subspace Z, B;
    Matrix d;          // d_r into cell (k-r, q+1); rows = target dim
};

struct PageTable {
    std::size_t r = 0;
    int min_q = 0, max_q = 0;
    std::size_t L = 0;
    std::vector<std::vector<PageCell>> cells;  // [k][q - min_q]

    const PageCell& cell(std::size_t k, int q) const;
    bool in_range(std::size_t k, int q) const;
    std::vector<Scalar> coords(std::size_t k, int q, const std::vector<Scalar>& v) const;
    std::size_t dim(std::size_t k, int q) const;
};

/* E_r with differentials, canonical representatives, d_r . d_r = 0 asserted */
PageTable page(const FilteredComplex& FC, std::size_t r);

struct E1Decomposition {
    std::vector<Matrix> quotient_diffs;  // the complex C/C.I (augmented entries)
    std::vector<std::size_t> h_dims;     // dim H^q(C/C.I)
    std::vector<Matrix> h_reps;          // representatives, rows in F^{rank_q}
    std::vector<std::vector<std::vector<Scalar>>> monomials;  // per k: exponent tuples
    /* per (k, q - min): matrix of [c](x)[m] -> [c.m] from H^q (x) I^k/I^{k+1}
       to E_1^{L-k,q} coordinates; all verified bijective */
    std::map<std::pair<std::size_t, int>, Matrix> iso;
};

E1Decomposition e1_decomposition(const FilteredComplex& FC);

/* induced action of right multiplication by g-1 on page r, in page
   coordinates: per (k, q), a matrix E_r^{k,q} -> E_r^{k-deg,q} */
struct DerivationAction {
    std::size_t deg = 0;
    std::map<std::pair<std::size_t, int>, Matrix> maps;
};
DerivationAction derivation(const FilteredComplex& FC, const PageTable& pt, std::size_t g);

struct ConvergenceReport {
    std::vector<std::size_t> einf_totals;  // per q
    std::vector<std::size_t> h_dims;       // per q
    bool converged = false;
};
ConvergenceReport einfty_check(const FilteredComplex& FC);

/* d_1(y_j) as a formal sum over degree-1 symbols a_i with polynomial
   coefficients in the y-monomial basis of gr_cup */
struct D1Expression {
    std::vector<std::size_t> alpha;
    std::vector<std::size_t> one_indices;  // the i with alpha(i) = 1
    GradedRing gr;
    /* terms[j][ii]: coefficients over gr.monomials of a_{one_indices[ii]}'s
       polynomial in d_1(y_j) */
    std::vector<std::vector<std::vector<Scalar>>> terms;

    std::string pretty(std::size_t j) const;
};

/* d_1(y_j) = a_j for alpha(j) = 1; higher degrees by induction on alpha(j),
   solving against the injective joint derivation map */
D1Expression d1_solver(const AlgebraPtr& A);

}  // namespace augss

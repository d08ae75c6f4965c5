#pragma once

#include "augss/pgroup.hpp"

namespace augss {

/* Element of C^0(G) = F_p^G under pointwise multiplication. */
struct FunctionOnG {
    AlgebraPtr A;
    std::vector<Scalar> values;

    static FunctionOnG zero(const AlgebraPtr& A);
    static FunctionOnG constant(const AlgebraPtr& A, Scalar c);
    static FunctionOnG indicator(const AlgebraPtr& A, std::size_t g);

    bool is_zero() const;
    FunctionOnG operator+(const FunctionOnG& rhs) const;
    FunctionOnG operator-(const FunctionOnG& rhs) const;
    FunctionOnG cup(const FunctionOnG& rhs) const;  // pointwise product
    FunctionOnG scaled(Scalar c) const;
    FunctionOnG pow(std::size_t e) const;
    bool operator==(const FunctionOnG& rhs) const;
};

/* right module action (psi.x)(s) = sum_g x(g) psi(g s) */
FunctionOnG translate(const FunctionOnG& psi, const AlgebraElement& x);

/* least k with psi.I^{k+1} = 0; the zero function reports -1 */
int filtration_degree(const FunctionOnG& psi);

/* true iff sum_g psi(g) = 0; equals membership in C^0(G).I */
bool in_augmentation_image(const FunctionOnG& psi);

struct YBasis {
    std::vector<FunctionOnG> y;      // y_i reads the i-th Jennings digit
    std::vector<std::size_t> alpha;  // filtration degrees
};

/* digits off the Jennings normal form; verifies the closed group-ring
   formula y_i = eps.((f_a^{-1}-1)^{p-1} ... f_i^{-1}(1-f_i^{-1})^{p-2} ...) */
YBasis y_basis(const AlgebraPtr& A);

struct GradedRing {
    std::size_t L = 0;
    std::vector<std::size_t> dims;  // dim gr^k for k = 0..L
    /* monomial basis ordered by (degree, lexicographic exponents) */
    std::vector<std::vector<Scalar>> monomials;
    std::vector<std::size_t> degree;           // of each monomial
    std::vector<std::vector<Scalar>> classes;  // coords of [y^x] in gr^{deg x}
    /* structure constants against the monomial basis: [y^x][y^x'] is a single
       monomial or zero_product (verified against the filtration quotients) */
    static constexpr std::size_t zero_product = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> product_mono;

    std::size_t monomial_index(const std::vector<Scalar>& exps) const;
};

/* associated graded ring of C^0(G) under F^k = C^0(G).I^{L-k}; asserts the
   truncated polynomial structure (monomial bases per degree, y_i^p = 0,
   nonzero top class) */
GradedRing gr_cup(const AlgebraPtr& A);

}  // namespace augss

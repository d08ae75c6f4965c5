#pragma once

#include "augss/koszul.hpp"
#include "augss/specseq.hpp"

#include <variant>

namespace augss {

/* The H^1(BG)-action on E_1^{0,*} forced by the page-1 differential:
   x = c.N maps to x u a_i := d_1([c . lambda_1^{p-1} ... lambda_i^{p-2} ...]).
   Each matrix is normalized so its first nonzero entry is 1 (the identity
   holds up to one unit per multiindex). */
struct ForcedAction {
    int min_q = 0, max_q = 0;
    std::size_t a = 0;
    /* act[i][q - min_q]: E_1^{0,q} -> E_1^{0,q+1} */
    std::vector<std::vector<Matrix>> act;
    std::vector<std::size_t> e1_zero_dims;  // dim E_1^{0,q}

    const Matrix& action(std::size_t i, int q) const;
};

ForcedAction forced_ai_action(const FilteredComplex& FC, const PageTable& E1);
ForcedAction forced_ai_action(const FreeComplex& D);

struct ObstructionWitness {
    Scalar p = 2;
    std::size_t a = 0, r = 0;
    std::vector<std::size_t> subset;  // first s with mu_s != 0
    Scalar mu = 0;
    std::size_t page = 0;  // r(p-1)
    std::vector<Scalar> product_class;               // class of (z_s^*.prod, 0) on page r(p-1)
    std::vector<std::vector<Scalar>> factor_classes; // per i in s, on page r(p-1)
    std::vector<Scalar> d_image;                     // d_{r(p-1)} of the product class
    std::vector<Scalar> target_class;                // class of (0, z_empty^*.N)
    Scalar unit = 1;                                 // d_image = unit * target_class
    std::string verdict;
};

struct NoObstruction {
    std::string reason;
};

using ObstructionResult = std::variant<ObstructionWitness, NoObstruction>;

/* The Leibniz-rule contradiction for Cone(w), w a nonzero class of degree
   >= 2: the product of permanent cycles supports a nonzero d_{r(p-1)}. */
ObstructionResult leibniz_obstruction(const KoszulComplex& K, const KoszulCycle& w);

struct AnnihilatorIdeal {
    std::size_t a = 0;
    std::size_t top_degree = 0;
    /* per degree d: basis of the annihilator in coefficients over the
       degree-d monomials in the a_i (exponent tuples, lexicographic) */
    std::vector<std::vector<std::vector<Scalar>>> degree_basis;
    std::vector<std::vector<std::vector<Scalar>>> monomials;  // per degree
    /* minimal generators as (degree, coefficient vector) */
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> generators;
    bool unit_ideal = false;
};

/* degreewise kernel of the forced action (p = 2, elementary abelian) */
AnnihilatorIdeal annihilator_ideal(const FreeComplex& D);

std::string polynomial_string(const AnnihilatorIdeal& ideal, std::size_t degree,
                              const std::vector<Scalar>& coeffs);

}  // namespace augss

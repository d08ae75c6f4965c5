#pragma once

#include <memory>
#include <string>
#include <vector>

#include "augss/linalg.hpp"

namespace augss {

/* Finite p-group given by an explicit multiplication table. Element 0 is
   the identity for all built-in constructors. */
struct PGroup {
    Scalar p = 2;
    std::size_t size = 1;
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> mul;  // mul[g][h] = g*h
    std::vector<std::size_t> inverse;
    std::string name;

    std::size_t rank_a() const;  // a with size = p^a
    void validate() const;       // group law + prime power order
};

/* Structured constructors; element order is lexicographic in the
   constructor's generator exponents with the first generator varying
   fastest. Table groups keep the given order. */
PGroup trivial_group(Scalar p);
PGroup cyclic_group(std::size_t order);
PGroup elementary_abelian_group(Scalar p, std::size_t rank);
PGroup product_group(const PGroup& A, const PGroup& B);
PGroup table_group(Scalar p, std::vector<std::vector<std::size_t>> table);
/* <a, b | a^n = 1, b^m = a^s, b a b^-1 = a^k>, order n*m */
PGroup metacyclic_group(std::size_t n, std::size_t m, std::size_t s, std::size_t k);
/* order p^3, elements (x,y,z) with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy') */
PGroup heisenberg_group(Scalar p);
/* G / <z> for a central element z */
PGroup central_quotient(const PGroup& g, std::size_t z);
/* subgroup of S_points generated by the given permutations, as a table */
PGroup perm_group(Scalar p, std::size_t points,
                  const std::vector<std::vector<std::size_t>>& gens);

/* All isomorphism classes of p-groups of order <= max_order, for the small
   orders exercised by the test suites (p=2: up to 16, p=3: up to 27). */
std::vector<PGroup> small_group_catalog(Scalar p, std::size_t max_order);

/* Group automorphism as a permutation of element indices. */
struct GroupAut {
    std::vector<std::size_t> perm;
};
bool is_automorphism(const PGroup& g, const GroupAut& phi);
GroupAut aut_compose(const GroupAut& f, const GroupAut& g);  // f after g
GroupAut aut_inverse(const GroupAut& f);

struct IdealChain {
    std::vector<Subspace> powers;  // I^0, I^1, ..., I^{L+1} = 0
    std::size_t L = 0;             // largest k with I^k != 0
};

struct JenningsData {
    std::vector<std::vector<std::size_t>> subgroups;  // G_1 .. G_{L+1}, sorted element lists
    std::vector<std::size_t> basis;                   // f_1, ..., f_a
    std::vector<std::size_t> alpha;                   // degrees, nondecreasing
    std::vector<std::vector<Scalar>> normal_form;     // element -> exponents (x_1..x_a)
};

class GroupAlgebra;
using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

/* Element of F_pG as a coefficient vector over the group elements. */
class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr A, std::vector<Scalar> coeffs);

    static AlgebraElement zero(const AlgebraPtr& A);
    static AlgebraElement unit(const AlgebraPtr& A);
    static AlgebraElement group_element(const AlgebraPtr& A, std::size_t g);
    static AlgebraElement lambda(const AlgebraPtr& A, std::size_t g);  // g - 1
    static AlgebraElement norm(const AlgebraPtr& A);                   // sum of all g

    const AlgebraPtr& algebra() const { return A_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar operator[](std::size_t g) const { return c_[g]; }

    bool is_zero() const;
    Scalar augmentation() const;
    AlgebraElement bar() const;  // u(g) -> u(g^{-1})

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const AlgebraElement& rhs) const;  // convolution
    AlgebraElement scaled(Scalar c) const;
    AlgebraElement pow(std::size_t e) const;
    bool operator==(const AlgebraElement& rhs) const;

    /* matrix of v -> this·v resp. v -> v·this on the regular module */
    Matrix left_mult_matrix() const;
    Matrix right_mult_matrix() const;

    /* inverse of a unit (nonzero augmentation); throws on non-units */
    AlgebraElement inverse() const;

  private:
    AlgebraPtr A_;
    std::vector<Scalar> c_;
};

/* F_pG for a finite p-group G, with the augmentation ideal power chain and
   the Jennings filtration computed and verified on construction. */
class GroupAlgebra : public std::enable_shared_from_this<GroupAlgebra> {
  public:
    static AlgebraPtr make(PGroup g);

    const PGroup& group() const { return group_; }
    Scalar p() const { return group_.p; }
    std::size_t size() const { return group_.size; }
    std::size_t L() const { return ideals_.L; }
    const IdealChain& ideals() const { return ideals_; }
    const JenningsData& jennings() const { return jennings_; }

    /* I^k as a subspace; k beyond L+1 gives the zero subspace */
    const Subspace& ideal_power(std::size_t k) const;

    /* {x | y·x = 0 for all y in I^k} */
    Subspace annihilator(std::size_t k) const;

    /* largest i with g-1 in I^i (0 for g = identity, by convention) */
    std::size_t jennings_degree(std::size_t g) const;

    /* prod_i (f_i - 1)^{x_i} over the Jennings basis */
    AlgebraElement jennings_monomial(const std::vector<Scalar>& exps) const;

    /* element with Jennings normal form exps */
    std::size_t element_from_exponents(const std::vector<Scalar>& exps) const;

    bool same_as(const GroupAlgebra& other) const;  // identical p and table

  private:
    GroupAlgebra() = default;
    void build();

    PGroup group_;
    IdealChain ideals_;
    JenningsData jennings_;
    Subspace zero_space_;
};

/* count of exponent tuples x in {0..p-1}^a with sum alpha(i) x_i = k */
std::size_t jennings_monomial_count(const JenningsData& j, Scalar p, std::size_t k);

}  // namespace augss

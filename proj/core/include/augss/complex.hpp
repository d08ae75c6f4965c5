#pragma once

#include "augss/pgroup.hpp"

namespace augss {

enum class Direction { chain, cochain };

/* Matrix with F_pG entries. Acts on a free right module by
   d(e_j) = sum_i e_i . m_ij, so coordinates transform by left
   multiplication with the entries. */
struct AlgMatrix {
    AlgebraPtr alg;
    std::size_t rows = 0, cols = 0;
    std::vector<AlgebraElement> e;

    AlgMatrix() = default;
    AlgMatrix(const AlgebraPtr& A, std::size_t rows, std::size_t cols);

    const AlgebraElement& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
    AlgebraElement& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }

    AlgMatrix operator*(const AlgMatrix& rhs) const;  // composite of module maps
    AlgMatrix operator+(const AlgMatrix& rhs) const;
    AlgMatrix scaled(Scalar c) const;
    bool is_zero() const;
    bool operator==(const AlgMatrix& rhs) const;

    /* F_p matrix of the induced map on regular-module coordinates,
       basis {e_i . g} ordered by (i, element index) */
    Matrix expand() const;
    /* matrix of augmentations; invertibility over F_p detects invertibility
       over the local ring F_pG */
    Matrix augmented() const;

    static AlgMatrix identity(const AlgebraPtr& A, std::size_t n);
};

struct ExpandedComplex {
    Scalar p = 2;
    Direction dir = Direction::cochain;
    int min_deg = 0;
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;  // same indexing as FreeComplex::diff
};

struct HomologyRecord {
    int min_deg = 0;
    std::vector<std::size_t> dims;
    std::vector<Matrix> reps;  // rows are representative (co)cycles in expanded coordinates
    std::size_t total() const;
};

/* Bounded complex of free right F_pG-modules with validated d.d = 0.
   Chain complexes have differentials lowering the degree, cochain
   complexes raising it. */
class FreeComplex {
  public:
    FreeComplex() = default;
    FreeComplex(AlgebraPtr A, Direction dir, int min_deg, std::vector<std::size_t> ranks,
                std::vector<AlgMatrix> diffs, bool validate = true);

    const AlgebraPtr& algebra() const { return A_; }
    Direction direction() const { return dir_; }
    int min_degree() const { return min_; }
    int max_degree() const { return min_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int deg) const;
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /* differential with source degree deg (empty matrix if out of range);
       for chains this maps deg -> deg-1, for cochains deg -> deg+1 */
    const AlgMatrix& diff_from(int deg) const;
    std::size_t diff_count() const { return diffs_.size(); }
    /* diffs_[i] couples degrees (min+i, min+i+1); chain: down, cochain: up */
    const AlgMatrix& diff_at(std::size_t i) const { return diffs_[i]; }

    bool operator==(const FreeComplex& rhs) const;

  private:
    AlgebraPtr A_;
    Direction dir_ = Direction::cochain;
    int min_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<AlgMatrix> diffs_;
    AlgMatrix empty_;
};

void validate(const FreeComplex& c);  // d.d = 0, reported with degrees

/* Degreewise map of complexes (same direction, degree 0). */
struct ChainMap {
    FreeComplex domain, codomain;
    std::vector<AlgMatrix> blocks;  // blocks[i]: degree domain.min+i

    const AlgMatrix& block_at(int deg) const;
    bool commutes() const;              // d f = f d
    bool augmentation_invertible() const;  // degreewise unit determinant
    ChainMap compose(const ChainMap& inner) const;  // this after inner
};

ChainMap identity_map(const FreeComplex& c);

FreeComplex dualize(const FreeComplex& c);
FreeComplex shift(const FreeComplex& c, int r);
/* mapping cone of a chain map f: C -> D;
   Cone_m = D_m + C_{m-1}, d(x,y) = (d x - f y, -d y) */
FreeComplex cone(const ChainMap& f);
FreeComplex tensor(const FreeComplex& c, const FreeComplex& d);
ExpandedComplex expand(const FreeComplex& c);
HomologyRecord homology(const FreeComplex& c);
FreeComplex restrict_scalars(const FreeComplex& c, const GroupAut& phi);
ChainMap restrict_scalars(const ChainMap& f, const GroupAut& phi);

struct MinimizeResult {
    FreeComplex complex;
    std::vector<std::size_t> profile;  // minimal ranks per degree
};
/* Gaussian cancellation of unit entries over the local ring F_pG */
MinimizeResult minimize(const FreeComplex& c);

/* the complex with the same shape over the target algebra; requires the
   multiplication tables to agree entrywise */
FreeComplex relabel_algebra(const FreeComplex& c, const AlgebraPtr& target);

}  // namespace augss

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace augss {

using Scalar = std::uint32_t;

bool is_prime(Scalar n);

/* Arithmetic in the prime field F_p; the modulus is carried at runtime. */
struct PrimeField {
    Scalar p;

    explicit PrimeField(Scalar p_);

    Scalar add(Scalar a, Scalar b) const { return (a + b) % p; }
    Scalar sub(Scalar a, Scalar b) const { return (a + p - b % p) % p; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
    Scalar inv(Scalar a) const;
    Scalar pow(Scalar a, std::uint64_t e) const;
    /* reduce a possibly negative integer into [0, p) */
    Scalar reduce(long long v) const;
};

/* Dense row-major matrix over F_p. */
class Matrix {
  public:
    Matrix() : p_(2), rows_(0), cols_(0) {}
    Matrix(Scalar p, std::size_t rows, std::size_t cols);

    static Matrix identity(Scalar p, std::size_t n);
    static Matrix from_rows(Scalar p, std::size_t cols,
                            const std::vector<std::vector<Scalar>>& rows);

    Scalar p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = v % p_; }

    std::vector<Scalar> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Scalar>& r);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const = default;

    Matrix transpose() const;
    Matrix scaled(Scalar c) const;
    bool is_zero() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;  // m·x

  private:
    Scalar p_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/* Reduced row-echelon form; pivot choice is the first nonzero entry
   scanning left-to-right, top-to-bottom. */
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/* First solution of m·x = b in RREF order (free variables set to zero). */
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

std::optional<Matrix> inverse(const Matrix& m);

/* Subspace of F_p^n in canonical form: the basis rows are in RREF, so two
   equal subspaces have identical representations. */
class Subspace {
  public:
    Subspace() = default;
    Subspace(Scalar p, std::size_t ambient_dim, const Matrix& spanning_rows);

    static Subspace zero(Scalar p, std::size_t ambient_dim);
    static Subspace full(Scalar p, std::size_t ambient_dim);

    Scalar p() const { return p_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    /* coordinates of v in the RREF basis; empty if v is not a member */
    std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

    bool operator==(const Subspace& rhs) const = default;

  private:
    Scalar p_ = 2;
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace kernel(const Matrix& m);  // right null space {x | m·x = 0}
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace preimage(const Matrix& m, const Subspace& v);  // {x | m·x in v}

/* Data of v/u: canonical representatives and the linear map assigning to
   each vector of v its coordinates in the complement; kills exactly u. */
struct QuotientMap {
    std::size_t dim = 0;
    Matrix reps;       // dim x n, representative rows (a subset of v's RREF basis)
    Matrix projector;  // dim x n; for x in v, projector·x = coordinates mod u

    std::vector<Scalar> coords(const std::vector<Scalar>& x) const { return projector.apply(x); }
};

QuotientMap quotient(const Subspace& v, const Subspace& u);

}  // namespace augss

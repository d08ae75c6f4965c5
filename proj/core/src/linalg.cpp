#include "augss/linalg.hpp"

#include <stdexcept>

namespace augss {

bool is_prime(Scalar n) {
    if (n < 2) return false;
    for (Scalar d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(Scalar p_) : p(p_) {
    if (!is_prime(p_)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
    Scalar r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Scalar PrimeField::inv(Scalar a) const {
    a %= p;
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p - 2);
}

Scalar PrimeField::reduce(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    return static_cast<Scalar>(m);
}

Matrix::Matrix(Scalar p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Scalar p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Scalar p, std::size_t cols,
                         const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(std::size_t i, const std::vector<Scalar>& r) {
    for (std::size_t j = 0; j < cols_; ++j) set(i, j, r[j]);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw std::invalid_argument("Matrix::*: shape mismatch");
    Matrix out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.data_[i * rhs.cols_ + j] =
                    (out.data_[i * rhs.cols_ + j] + a * rhs.at(k, j)) % p_;
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        throw std::invalid_argument("Matrix::+: shape mismatch");
    Matrix out(p_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + rhs.data_[i]) % p_;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::scaled(Scalar c) const {
    Matrix out = *this;
    for (auto& v : out.data_) v = (v * c) % p_;
    return out;
}

bool Matrix::is_zero() const {
    for (Scalar v : data_)
        if (v) return false;
    return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<Scalar> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = (acc + at(i, j) * x[j]) % p_;
        out[i] = acc;
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.p() != b.p()) throw std::invalid_argument("hstack: shape mismatch");
    Matrix out(a.p(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || a.p() != b.p()) throw std::invalid_argument("vstack: shape mismatch");
    Matrix out(a.p(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
    return out;
}

RrefResult rref(Matrix m) {
    PrimeField F(m.p());
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m.at(i, col)) { sel = i; break; }
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Scalar t = m.at(r, j);
                m.set(r, j, m.at(sel, j));
                m.set(sel, j, t);
            }
        Scalar inv = F.inv(m.at(r, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(r, j, F.mul(m.at(r, j), inv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Scalar f = m.at(i, col);
            if (!f) continue;
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.set(i, j, F.sub(m.at(i, j), F.mul(f, m.at(r, j))));
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix rhs(m.p(), m.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs.set(i, 0, b[i]);
    RrefResult R = rref(hstack(m, rhs));
    for (std::size_t i = 0; i < R.rank; ++i)
        if (R.pivots[i] == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols(), 0);
    for (std::size_t i = 0; i < R.rank; ++i) x[R.pivots[i]] = R.mat.at(i, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    RrefResult R = rref(hstack(m, Matrix::identity(m.p(), n)));
    for (std::size_t i = 0; i < n; ++i)
        if (i >= R.pivots.size() || R.pivots[i] != i) return std::nullopt;
    Matrix out(m.p(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, R.mat.at(i, n + j));
    return out;
}

Subspace::Subspace(Scalar p, std::size_t ambient_dim, const Matrix& spanning_rows)
    : p_(p), ambient_(ambient_dim) {
    if (spanning_rows.cols() != ambient_dim && spanning_rows.rows() != 0)
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    RrefResult R = rref(spanning_rows.rows() ? spanning_rows : Matrix(p, 0, ambient_dim));
    Matrix b(p, R.rank, ambient_dim);
    for (std::size_t i = 0; i < R.rank; ++i) b.set_row(i, R.mat.row(i));
    basis_ = std::move(b);
    pivots_ = std::move(R.pivots);
}

Subspace Subspace::zero(Scalar p, std::size_t ambient_dim) {
    return Subspace(p, ambient_dim, Matrix(p, 0, ambient_dim));
}

Subspace Subspace::full(Scalar p, std::size_t ambient_dim) {
    return Subspace(p, ambient_dim, Matrix::identity(p, ambient_dim));
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector size mismatch");
    PrimeField F(p_);
    std::vector<Scalar> rem = v;
    std::vector<Scalar> c(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        Scalar f = rem[pivots_[i]] % p_;
        c[i] = f;
        if (!f) continue;
        for (std::size_t j = 0; j < ambient_; ++j) rem[j] = F.sub(rem[j], F.mul(f, basis_.at(i, j)));
    }
    for (Scalar x : rem)
        if (x % p_) return std::nullopt;
    return c;
}

bool Subspace::contains(const std::vector<Scalar>& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace row_space(const Matrix& m) { return Subspace(m.p(), m.cols(), m); }

Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace kernel(const Matrix& m) {
    PrimeField F(m.p());
    RrefResult R = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : R.pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(m.cols(), 0);
        x[f] = 1;
        for (std::size_t i = 0; i < R.rank; ++i) x[R.pivots[i]] = F.neg(R.mat.at(i, f));
        rows.push_back(std::move(x));
    }
    return Subspace(m.p(), m.cols(), Matrix::from_rows(m.p(), m.cols(), rows));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p())
        throw std::invalid_argument("intersect: ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.p(), u.ambient_dim());
    /* x = U^T a = V^T b; solve [U^T | -V^T] (a,b)^T = 0 and map back the a-part */
    Matrix ut = u.basis().transpose();
    Matrix vt = v.basis().transpose().scaled(u.p() - 1);
    Subspace K = kernel(hstack(ut, vt));
    Matrix gens(u.p(), K.dim(), u.ambient_dim());
    for (std::size_t i = 0; i < K.dim(); ++i) {
        std::vector<Scalar> full = K.basis().row(i);
        std::vector<Scalar> a(full.begin(), full.begin() + u.dim());
        gens.set_row(i, ut.apply(a));
    }
    return Subspace(u.p(), u.ambient_dim(), gens);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p())
        throw std::invalid_argument("sum: ambient mismatch");
    return Subspace(u.p(), u.ambient_dim(), vstack(u.basis(), v.basis()));
}

Subspace preimage(const Matrix& m, const Subspace& v) {
    if (v.ambient_dim() != m.rows()) throw std::invalid_argument("preimage: dimension mismatch");
    if (v.dim() == 0) return kernel(m);
    /* m·x = B^T y  <=>  [m | -B^T](x, y)^T = 0, then project to the x-part */
    Matrix bt = v.basis().transpose().scaled(m.p() - 1);
    Subspace K = kernel(hstack(m, bt));
    Matrix gens(m.p(), K.dim(), m.cols());
    for (std::size_t i = 0; i < K.dim(); ++i) {
        std::vector<Scalar> full = K.basis().row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) gens.set(i, j, full[j]);
    }
    return Subspace(m.p(), m.cols(), gens);
}

QuotientMap quotient(const Subspace& v, const Subspace& u) {
    if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p())
        throw std::invalid_argument("quotient: ambient mismatch");
    if (!v.contains(u)) throw std::invalid_argument("quotient: u is not contained in v");

    /* complement = rows of v's RREF basis whose pivots are not pivots of u */
    std::vector<bool> upiv(v.ambient_dim(), false);
    for (std::size_t c : u.pivots()) upiv[c] = true;
    std::vector<std::vector<Scalar>> comp;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!upiv[v.pivots()[i]]) comp.push_back(v.basis().row(i));

    QuotientMap Q;
    Q.dim = comp.size();
    Q.reps = Matrix::from_rows(v.p(), v.ambient_dim(), comp);

    /* left inverse of M^T where M's rows are basis(u) followed by the complement */
    Matrix M = vstack(u.basis(), Q.reps);
    std::size_t n = v.ambient_dim(), dv = M.rows();
    RrefResult R = rref(hstack(M.transpose(), Matrix::identity(v.p(), n)));
    Matrix S(v.p(), Q.dim, n);
    for (std::size_t i = 0; i < Q.dim; ++i)
        for (std::size_t j = 0; j < n; ++j) S.set(i, j, R.mat.at(u.dim() + i, dv + j));
    Q.projector = std::move(S);
    return Q;
}

}  // namespace augss

#include "augss/complex.hpp"

#include <stdexcept>
#include <string>

namespace augss {

AlgMatrix::AlgMatrix(const AlgebraPtr& A, std::size_t r, std::size_t c)
    : alg(A), rows(r), cols(c), e(r * c, AlgebraElement::zero(A)) {}

AlgMatrix AlgMatrix::identity(const AlgebraPtr& A, std::size_t n) {
    AlgMatrix m(A, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = AlgebraElement::unit(A);
    return m;
}

AlgMatrix AlgMatrix::operator*(const AlgMatrix& rhs) const {
    if (cols != rhs.rows) throw std::invalid_argument("AlgMatrix::*: shape mismatch");
    const AlgebraPtr& A = alg ? alg : rhs.alg;
    if (!A) return AlgMatrix();
    AlgMatrix out(A, rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j)
                out.at(i, j) = out.at(i, j) + at(i, k) * rhs.at(k, j);
        }
    return out;
}

AlgMatrix AlgMatrix::operator+(const AlgMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw std::invalid_argument("AlgMatrix::+: shape");
    AlgMatrix out = *this;
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] = out.e[i] + rhs.e[i];
    return out;
}

AlgMatrix AlgMatrix::scaled(Scalar c) const {
    AlgMatrix out = *this;
    for (auto& x : out.e) x = x.scaled(c);
    return out;
}

bool AlgMatrix::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

bool AlgMatrix::operator==(const AlgMatrix& rhs) const {
    return rows == rhs.rows && cols == rhs.cols && e == rhs.e;
}

Matrix AlgMatrix::expand() const {
    if (!alg) return Matrix(2, 0, 0);
    const AlgebraPtr& A = alg;
    std::size_t n = A->size();
    Matrix out(A->p(), rows * n, cols * n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (at(i, j).is_zero()) continue;
            Matrix block = at(i, j).left_mult_matrix();
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) out.set(i * n + x, j * n + y, block.at(x, y));
        }
    return out;
}

Matrix AlgMatrix::augmented() const {
    if (!alg) return Matrix(2, rows, cols);
    Matrix out(alg->p(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.set(i, j, at(i, j).augmentation());
    return out;
}

std::size_t HomologyRecord::total() const {
    std::size_t t = 0;
    for (std::size_t d : dims) t += d;
    return t;
}

FreeComplex::FreeComplex(AlgebraPtr A, Direction dir, int min_deg,
                         std::vector<std::size_t> ranks, std::vector<AlgMatrix> diffs,
                         bool do_validate)
    : A_(std::move(A)), dir_(dir), min_(min_deg), ranks_(std::move(ranks)),
      diffs_(std::move(diffs)) {
    if (!ranks_.empty() && diffs_.size() + 1 != ranks_.size())
        throw std::invalid_argument("FreeComplex: need one differential per adjacent pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        std::size_t down = dir_ == Direction::chain ? ranks_[i] : ranks_[i + 1];
        std::size_t up = dir_ == Direction::chain ? ranks_[i + 1] : ranks_[i];
        if (diffs_[i].rows != down || diffs_[i].cols != up)
            throw std::invalid_argument("FreeComplex: differential " + std::to_string(i) +
                                        " has wrong shape");
    }
    if (do_validate) validate(*this);
}

std::size_t FreeComplex::rank(int deg) const {
    if (deg < min_ || deg > max_degree()) return 0;
    return ranks_[deg - min_];
}

const AlgMatrix& FreeComplex::diff_from(int deg) const {
    long i = dir_ == Direction::chain ? deg - min_ - 1 : deg - min_;
    if (i < 0 || i >= static_cast<long>(diffs_.size())) return empty_;
    return diffs_[i];
}

bool FreeComplex::operator==(const FreeComplex& rhs) const {
    if (!A_ || !rhs.A_) return !A_ && !rhs.A_;
    return A_->same_as(*rhs.A_) && dir_ == rhs.dir_ && min_ == rhs.min_ &&
           ranks_ == rhs.ranks_ && diffs_ == rhs.diffs_;
}

void validate(const FreeComplex& c) {
    for (std::size_t i = 0; i + 1 < c.diff_count(); ++i) {
        AlgMatrix comp = c.direction() == Direction::chain
                             ? c.diff_at(i) * c.diff_at(i + 1)
                             : c.diff_at(i + 1) * c.diff_at(i);
        for (std::size_t r = 0; r < comp.rows; ++r)
            for (std::size_t s = 0; s < comp.cols; ++s)
                if (!comp.at(r, s).is_zero())
                    throw std::invalid_argument(
                        "FreeComplex: d.d != 0 between degrees " +
                        std::to_string(c.min_degree() + static_cast<int>(i)) + ".." +
                        std::to_string(c.min_degree() + static_cast<int>(i) + 2) +
                        " at entry (" + std::to_string(r) + "," + std::to_string(s) + ")");
    }
}

const AlgMatrix& ChainMap::block_at(int deg) const {
    static const AlgMatrix empty;
    long i = deg - domain.min_degree();
    if (i < 0 || i >= static_cast<long>(blocks.size())) return empty;
    return blocks[i];
}

namespace {

AlgMatrix block_or_zero(const AlgebraPtr& A, const AlgMatrix& m, std::size_t rows,
                        std::size_t cols) {
    if (m.rows == rows && m.cols == cols && !m.e.empty()) return m;
    return AlgMatrix(A, rows, cols);
}

int parity_sign(long v) { return ((v % 2) + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

bool ChainMap::commutes() const {
    const AlgebraPtr& A = domain.algebra();
    int lo = std::min(domain.min_degree(), codomain.min_degree()) - 1;
    int hi = std::max(domain.max_degree(), codomain.max_degree()) + 1;
    for (int q = lo; q <= hi; ++q) {
        int qt = domain.direction() == Direction::chain ? q - 1 : q + 1;
        AlgMatrix dD = block_or_zero(A, codomain.diff_from(q), codomain.rank(qt), codomain.rank(q));
        AlgMatrix fq = block_or_zero(A, block_at(q), codomain.rank(q), domain.rank(q));
        AlgMatrix dC = block_or_zero(A, domain.diff_from(q), domain.rank(qt), domain.rank(q));
        AlgMatrix ft = block_or_zero(A, block_at(qt), codomain.rank(qt), domain.rank(qt));
        if (!((dD * fq) + (ft * dC).scaled(A->p() - 1)).is_zero()) return false;
    }
    return true;
}

bool ChainMap::augmentation_invertible() const {
    for (int q = domain.min_degree(); q <= domain.max_degree(); ++q) {
        if (domain.rank(q) != codomain.rank(q)) return false;
        if (domain.rank(q) == 0) continue;
        Matrix m = block_at(q).augmented();
        if (m.rows() != domain.rank(q) || rank(m) != domain.rank(q)) return false;
    }
    return true;
}

ChainMap ChainMap::compose(const ChainMap& inner) const {
    if (!(inner.codomain == domain)) throw std::invalid_argument("ChainMap::compose: mismatch");
    ChainMap out;
    out.domain = inner.domain;
    out.codomain = codomain;
    const AlgebraPtr& A = domain.algebra();
    for (int q = inner.domain.min_degree(); q <= inner.domain.max_degree(); ++q) {
        AlgMatrix a = block_or_zero(A, block_at(q), codomain.rank(q), domain.rank(q));
        AlgMatrix b = block_or_zero(A, inner.block_at(q), domain.rank(q), inner.domain.rank(q));
        out.blocks.push_back(a * b);
    }
    return out;
}

ChainMap identity_map(const FreeComplex& c) {
    ChainMap f;
    f.domain = c;
    f.codomain = c;
    for (int q = c.min_degree(); q <= c.max_degree(); ++q)
        f.blocks.push_back(AlgMatrix::identity(c.algebra(), c.rank(q)));
    return f;
}

FreeComplex dualize(const FreeComplex& c) {
    const AlgebraPtr& A = c.algebra();
    const PGroup& G = A->group();
    for (std::size_t g = 0; g < G.size; ++g)
        for (std::size_t h = 0; h < G.size; ++h)
            if (G.mul[g][h] != G.mul[h][g])
                throw std::invalid_argument("dualize: algebra is not commutative");

    Direction dual_dir = c.direction() == Direction::chain ? Direction::cochain : Direction::chain;
    std::vector<AlgMatrix> diffs;
    for (std::size_t i = 0; i < c.diff_count(); ++i) {
        const AlgMatrix& M = c.diff_at(i);
        /* dual of f -> -(-1)^{|f|} f.d; entries conjugated, matrix transposed */
        long fdeg = c.direction() == Direction::chain ? c.min_degree() + static_cast<long>(i)
                                                      : c.min_degree() + static_cast<long>(i) + 1;
        Scalar sgn = parity_sign(fdeg) == 1 ? A->p() - 1 : 1;
        AlgMatrix N(A, M.cols, M.rows);
        for (std::size_t r = 0; r < M.rows; ++r)
            for (std::size_t s = 0; s < M.cols; ++s) N.at(s, r) = M.at(r, s).bar().scaled(sgn);
        diffs.push_back(std::move(N));
    }
    return FreeComplex(A, dual_dir, c.min_degree(), c.ranks(), std::move(diffs));
}

FreeComplex shift(const FreeComplex& c, int r) {
    std::vector<AlgMatrix> diffs;
    for (std::size_t i = 0; i < c.diff_count(); ++i)
        diffs.push_back(parity_sign(r) == 1 ? c.diff_at(i)
                                            : c.diff_at(i).scaled(c.algebra()->p() - 1));
    return FreeComplex(c.algebra(), c.direction(), c.min_degree() + r, c.ranks(),
                       std::move(diffs));
}

FreeComplex cone(const ChainMap& f) {
    const FreeComplex& C = f.domain;
    const FreeComplex& D = f.codomain;
    if (C.direction() != Direction::chain || D.direction() != Direction::chain)
        throw std::invalid_argument("cone: expected chain complexes");
    if (!f.commutes()) throw std::invalid_argument("cone: f is not a chain map");
    const AlgebraPtr& A = C.algebra();
    const Scalar minus = A->p() - 1;

    int lo = std::min(D.min_degree(), C.min_degree() + 1);
    int hi = std::max(D.max_degree(), C.max_degree() + 1);
    std::vector<std::size_t> ranks;
    for (int m = lo; m <= hi; ++m) ranks.push_back(D.rank(m) + C.rank(m - 1));

    std::vector<AlgMatrix> diffs;
    for (int m = lo + 1; m <= hi; ++m) {
        std::size_t rD = D.rank(m), rC = C.rank(m - 1);
        std::size_t tD = D.rank(m - 1), tC = C.rank(m - 2);
        AlgMatrix block(A, tD + tC, rD + rC);
        AlgMatrix dD = block_or_zero(A, D.diff_from(m), tD, rD);
        AlgMatrix fm = block_or_zero(A, f.block_at(m - 1), tD, rC);
        AlgMatrix dC = block_or_zero(A, C.diff_from(m - 1), tC, rC);
        for (std::size_t i = 0; i < tD; ++i)
            for (std::size_t j = 0; j < rD; ++j) block.at(i, j) = dD.at(i, j);
        for (std::size_t i = 0; i < tD; ++i)
            for (std::size_t j = 0; j < rC; ++j) block.at(i, rD + j) = fm.at(i, j).scaled(minus);
        for (std::size_t i = 0; i < tC; ++i)
            for (std::size_t j = 0; j < rC; ++j)
                block.at(tD + i, rD + j) = dC.at(i, j).scaled(minus);
        diffs.push_back(std::move(block));
    }
    return FreeComplex(A, Direction::chain, lo, std::move(ranks), std::move(diffs));
}

FreeComplex tensor(const FreeComplex& C, const FreeComplex& D) {
    if (C.direction() != D.direction()) throw std::invalid_argument("tensor: mixed directions");
    AlgebraPtr A = GroupAlgebra::make(product_group(C.algebra()->group(), D.algebra()->group()));
    std::size_t nC = C.algebra()->size();

    auto embed = [&](const AlgebraElement& u, const AlgebraElement& v) {
        std::vector<Scalar> c(A->size(), 0);
        for (std::size_t g = 0; g < u.coeffs().size(); ++g) {
            if (!u[g]) continue;
            for (std::size_t h = 0; h < v.coeffs().size(); ++h)
                c[g + nC * h] = (u[g] * v[h]) % A->p();
        }
        return AlgebraElement(A, std::move(c));
    };
    AlgebraElement unitC = AlgebraElement::unit(C.algebra());
    AlgebraElement unitD = AlgebraElement::unit(D.algebra());

    int lo = C.min_degree() + D.min_degree();
    int hi = C.max_degree() + D.max_degree();
    /* basis of degree m: (q, i, j) with q the C-degree, ordered by q, i, j */
    auto base_offset = [&](int m, int q, std::size_t i, std::size_t j) {
        std::size_t off = 0;
        for (int q2 = std::max(C.min_degree(), m - D.max_degree()); q2 < q; ++q2)
            off += C.rank(q2) * D.rank(m - q2);
        return off + i * D.rank(m - q) + j;
    };
    auto total_rank = [&](int m) {
        std::size_t r = 0;
        for (int q = C.min_degree(); q <= C.max_degree(); ++q) r += C.rank(q) * D.rank(m - q);
        return r;
    };

    std::vector<std::size_t> ranks;
    for (int m = lo; m <= hi; ++m) ranks.push_back(total_rank(m));

    bool chain = C.direction() == Direction::chain;
    std::vector<AlgMatrix> diffs;
    for (int mi = 0; mi + 1 <= hi - lo; ++mi) {
        int m_src = chain ? lo + mi + 1 : lo + mi;  // source degree of this differential
        int m_tgt = chain ? lo + mi : lo + mi + 1;
        AlgMatrix block(A, total_rank(m_tgt), total_rank(m_src));
        for (int q = std::max(C.min_degree(), m_src - D.max_degree());
             q <= std::min(C.max_degree(), m_src - D.min_degree()); ++q) {
            int dq = m_src - q;
            const AlgMatrix& dC = C.diff_from(q);
            const AlgMatrix& dD = D.diff_from(dq);
            int qC_tgt = chain ? q - 1 : q + 1;
            int qD_tgt = chain ? dq - 1 : dq + 1;
            for (std::size_t i = 0; i < C.rank(q); ++i)
                for (std::size_t j = 0; j < D.rank(dq); ++j) {
                    std::size_t src = base_offset(m_src, q, i, j);
                    /* dx (x) y */
                    if (dC.rows) {
                        for (std::size_t i2 = 0; i2 < C.rank(qC_tgt); ++i2) {
                            const AlgebraElement& u = dC.at(i2, i);
                            if (u.is_zero()) continue;
                            std::size_t dst = base_offset(m_tgt, qC_tgt, i2, j);
                            block.at(dst, src) = block.at(dst, src) + embed(u, unitD);
                        }
                    }
                    /* (-1)^{|x|} x (x) dy */
                    if (dD.rows) {
                        Scalar sgn = parity_sign(q) == 1 ? 1 : A->p() - 1;
                        for (std::size_t j2 = 0; j2 < D.rank(qD_tgt); ++j2) {
                            const AlgebraElement& v = dD.at(j2, j);
                            if (v.is_zero()) continue;
                            std::size_t dst = base_offset(m_tgt, q, i, j2);
                            block.at(dst, src) = block.at(dst, src) + embed(unitC, v).scaled(sgn);
                        }
                    }
                }
        }
        diffs.push_back(std::move(block));
    }
    return FreeComplex(A, C.direction(), lo, std::move(ranks), std::move(diffs));
}

ExpandedComplex expand(const FreeComplex& c) {
    ExpandedComplex out;
    out.p = c.algebra()->p();
    out.dir = c.direction();
    out.min_deg = c.min_degree();
    std::size_t n = c.algebra()->size();
    for (std::size_t r : c.ranks()) out.dims.push_back(r * n);
    for (std::size_t i = 0; i < c.diff_count(); ++i) {
        Matrix m = c.diff_at(i).expand();
        if (m.rows() == 0 && m.cols() == 0) {
            std::size_t down = c.direction() == Direction::chain ? out.dims[i] : out.dims[i + 1];
            std::size_t up = c.direction() == Direction::chain ? out.dims[i + 1] : out.dims[i];
            m = Matrix(out.p, down, up);
        }
        out.diffs.push_back(std::move(m));
    }
    return out;
}

HomologyRecord homology(const FreeComplex& c) {
    ExpandedComplex E = expand(c);
    HomologyRecord H;
    H.min_deg = c.min_degree();
    int span = static_cast<int>(E.dims.size());
    for (int i = 0; i < span; ++i) {
        std::size_t dim = E.dims[i];
        /* index of the differentials leaving/entering this slot */
        long leave = E.dir == Direction::chain ? i - 1 : i;
        long enter = E.dir == Direction::chain ? i : i - 1;
        Subspace cycles = Subspace::full(E.p, dim);
        if (leave >= 0 && leave < static_cast<long>(E.diffs.size()))
            cycles = kernel(E.diffs[leave]);
        Subspace boundaries = Subspace::zero(E.p, dim);
        if (enter >= 0 && enter < static_cast<long>(E.diffs.size()))
            boundaries = column_space(E.diffs[enter]);
        QuotientMap q = quotient(cycles, boundaries);
        H.dims.push_back(q.dim);
        H.reps.push_back(q.reps);
    }
    return H;
}

FreeComplex restrict_scalars(const FreeComplex& c, const GroupAut& phi) {
    if (!is_automorphism(c.algebra()->group(), phi))
        throw std::invalid_argument("restrict_scalars: not an automorphism");
    const AlgebraPtr& A = c.algebra();
    std::vector<AlgMatrix> diffs;
    for (std::size_t i = 0; i < c.diff_count(); ++i) {
        AlgMatrix m = c.diff_at(i);
        for (auto& u : m.e) {
            std::vector<Scalar> nc(A->size());
            for (std::size_t h = 0; h < A->size(); ++h) nc[h] = u[phi.perm[h]];
            u = AlgebraElement(A, std::move(nc));
        }
        diffs.push_back(std::move(m));
    }
    return FreeComplex(A, c.direction(), c.min_degree(), c.ranks(), std::move(diffs));
}

ChainMap restrict_scalars(const ChainMap& f, const GroupAut& phi) {
    ChainMap out;
    out.domain = restrict_scalars(f.domain, phi);
    out.codomain = restrict_scalars(f.codomain, phi);
    const AlgebraPtr& A = f.domain.algebra();
    for (AlgMatrix m : f.blocks) {
        for (auto& u : m.e) {
            std::vector<Scalar> nc(A->size());
            for (std::size_t h = 0; h < A->size(); ++h) nc[h] = u[phi.perm[h]];
            u = AlgebraElement(A, std::move(nc));
        }
        out.blocks.push_back(std::move(m));
    }
    return out;
}

namespace {

AlgMatrix erase_row_col(const AlgebraPtr& A, const AlgMatrix& m, long row, long col) {
    std::size_t nr = m.rows - (row >= 0 ? 1 : 0);
    std::size_t nc = m.cols - (col >= 0 ? 1 : 0);
    AlgMatrix out(A, nr, nc);
    std::size_t io = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (static_cast<long>(i) == row) continue;
        std::size_t jo = 0;
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (static_cast<long>(j) == col) continue;
            out.at(io, jo) = m.at(i, j);
            ++jo;
        }
        ++io;
    }
    return out;
}

}  // namespace

MinimizeResult minimize(const FreeComplex& c) {
    const AlgebraPtr& A = c.algebra();
    std::vector<std::size_t> ranks = c.ranks();
    std::vector<AlgMatrix> diffs;
    for (std::size_t i = 0; i < c.diff_count(); ++i) diffs.push_back(c.diff_at(i));

    bool chain = c.direction() == Direction::chain;
    for (;;) {
        /* lowest degree first, then row-major */
        std::size_t t = diffs.size();
        std::size_t pi = 0, pj = 0;
        for (std::size_t d = 0; d < diffs.size() && t == diffs.size(); ++d)
            for (std::size_t i = 0; i < diffs[d].rows && t == diffs.size(); ++i)
                for (std::size_t j = 0; j < diffs[d].cols; ++j)
                    if (diffs[d].at(i, j).augmentation() != 0) {
                        t = d;
                        pi = i;
                        pj = j;
                        break;
                    }
        if (t == diffs.size()) break;

        AlgebraElement uinv = diffs[t].at(pi, pj).inverse();
        AlgMatrix& M = diffs[t];
        AlgMatrix next(A, M.rows ? M.rows - 1 : 0, M.cols ? M.cols - 1 : 0);
        {
            std::size_t io = 0;
            for (std::size_t i = 0; i < M.rows; ++i) {
                if (i == pi) continue;
                std::size_t jo = 0;
                for (std::size_t j = 0; j < M.cols; ++j) {
                    if (j == pj) continue;
                    next.at(io, jo) =
                        M.at(i, j) - M.at(i, pj) * uinv * M.at(pi, j);
                    ++jo;
                }
                ++io;
            }
        }
        diffs[t] = std::move(next);

        /* the source module loses basis vector pj, the target loses pi */
        std::size_t src_slot = chain ? t + 1 : t;
        std::size_t tgt_slot = chain ? t : t + 1;
        ranks[src_slot] -= 1;
        ranks[tgt_slot] -= 1;
        if (chain) {
            if (t + 1 < diffs.size()) diffs[t + 1] = erase_row_col(A, diffs[t + 1], pj, -1);
            if (t >= 1) diffs[t - 1] = erase_row_col(A, diffs[t - 1], -1, pi);
        } else {
            if (t >= 1) diffs[t - 1] = erase_row_col(A, diffs[t - 1], pj, -1);
            if (t + 1 < diffs.size()) diffs[t + 1] = erase_row_col(A, diffs[t + 1], -1, pi);
        }
    }

    /* trim zero ranks at the ends */
    int min_deg = c.min_degree();
    while (!ranks.empty() && ranks.front() == 0) {
        ranks.erase(ranks.begin());
        if (!diffs.empty()) diffs.erase(diffs.begin());
        ++min_deg;
    }
    while (!ranks.empty() && ranks.back() == 0) {
        ranks.pop_back();
        if (!diffs.empty()) diffs.pop_back();
    }
    MinimizeResult out;
    out.profile = ranks;
    out.complex = FreeComplex(A, c.direction(), min_deg, std::move(ranks), std::move(diffs));
    return out;
}

FreeComplex relabel_algebra(const FreeComplex& c, const AlgebraPtr& target) {
    if (!(c.algebra()->p() == target->p() && c.algebra()->group().mul == target->group().mul))
        throw std::invalid_argument("relabel_algebra: multiplication tables differ");
    std::vector<AlgMatrix> diffs;
    for (std::size_t i = 0; i < c.diff_count(); ++i) {
        AlgMatrix m(target, c.diff_at(i).rows, c.diff_at(i).cols);
        for (std::size_t k = 0; k < m.e.size(); ++k)
            m.e[k] = AlgebraElement(target, c.diff_at(i).e[k].coeffs());
        diffs.push_back(std::move(m));
    }
    return FreeComplex(target, c.direction(), c.min_degree(), c.ranks(), std::move(diffs));
}

}  // namespace augss

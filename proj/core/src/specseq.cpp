#include "augss/specseq.hpp"

#include <stdexcept>

namespace augss {

namespace {

Subspace free_times_ideal(const FreeComplex& C, int q, const Subspace& ideal) {
    /* C^q . J for an ideal subspace J: spanned by e_i.v over basis v of J */
    std::size_t n = C.algebra()->size(), rk = C.rank(q);
    Scalar p = C.algebra()->p();
    Matrix gens(p, rk * ideal.dim(), rk * n);
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t v = 0; v < ideal.dim(); ++v)
            for (std::size_t g = 0; g < n; ++g)
                gens.set(i * ideal.dim() + v, i * n + g, ideal.basis().at(v, g));
    return Subspace(p, rk * n, gens);
}

Matrix block_diag_right_mult(const AlgebraPtr& A, const AlgebraElement& u, std::size_t rk) {
    std::size_t n = A->size();
    Matrix R = u.right_mult_matrix();
    Matrix out(A->p(), rk * n, rk * n);
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) out.set(i * n + x, i * n + y, R.at(x, y));
    return out;
}

}  // namespace

const Subspace& FilteredComplex::level(int q, long k) const {
    if (q < min_q() || q > max_q())
        throw std::invalid_argument("FilteredComplex::level: degree out of range");
    const auto& row = F[q - min_q()];
    long kk = k + 1;
    if (kk < 0) kk = 0;
    if (kk >= static_cast<long>(row.size())) kk = static_cast<long>(row.size()) - 1;
    return row[kk];
}

const Matrix* FilteredComplex::diff_from(int q) const {
    if (q < min_q() || q >= max_q()) return nullptr;
    return &E.diffs[q - min_q()];
}

FilteredComplex filter(const FreeComplex& c) {
    if (c.direction() != Direction::cochain)
        throw std::invalid_argument("filter: expected a cochain complex");
    FilteredComplex FC;
    FC.C = c;
    FC.E = expand(c);
    const AlgebraPtr& A = c.algebra();
    const std::size_t L = A->L();
    const std::size_t n = A->size();

    for (int q = c.min_degree(); q <= c.max_degree(); ++q) {
        std::vector<Subspace> row;
        std::size_t rk = c.rank(q);
        row.push_back(Subspace::zero(A->p(), rk * n));  // F^{-1} = 0
        for (std::size_t k = 0; k <= L; ++k) {
            Subspace form1 = free_times_ideal(c, q, A->ideal_power(L - k));
            /* annihilator form {x | x.lambda = 0 for all lambda in I^{k+1}} */
            const Subspace& ik1 = A->ideal_power(k + 1);
            Subspace form2 = Subspace::full(A->p(), rk * n);
            if (ik1.dim() > 0) {
                Matrix stacked(A->p(), 0, rk * n);
                for (std::size_t i = 0; i < ik1.dim(); ++i) {
                    Matrix R = block_diag_right_mult(A, AlgebraElement(A, ik1.basis().row(i)), rk);
                    stacked = stacked.rows() == 0 ? R : vstack(stacked, R);
                }
                form2 = kernel(stacked);
            }
            if (!(form1 == form2))
                throw std::logic_error("filter: the two filtration forms disagree (Hill)");
            row.push_back(std::move(form1));
        }
        FC.F.push_back(std::move(row));
    }
    return FC;
}

const PageCell& PageTable::cell(std::size_t k, int q) const {
    if (!in_range(k, q)) throw std::invalid_argument("PageTable: cell out of range");
    return cells[k][q - min_q];
}

bool PageTable::in_range(std::size_t k, int q) const {
    return k <= L && q >= min_q && q <= max_q;
}

std::size_t PageTable::dim(std::size_t k, int q) const {
    return in_range(k, q) ? cell(k, q).dim : 0;
}

std::vector<Scalar> PageTable::coords(std::size_t k, int q, const std::vector<Scalar>& v) const {
    const PageCell& c = cell(k, q);
    if (!c.Z.contains(v)) throw std::invalid_argument("PageTable: vector is not in Z_r");
    return c.projector.apply(v);
}

PageTable page(const FilteredComplex& FC, std::size_t r) {
    PageTable pt;
    pt.r = r;
    pt.min_q = FC.min_q();
    pt.max_q = FC.max_q();
    pt.L = FC.L();
    const Scalar p = FC.E.p;

    for (std::size_t k = 0; k <= pt.L; ++k) {
        std::vector<PageCell> col;
        for (int q = pt.min_q; q <= pt.max_q; ++q) {
            PageCell cell;
            const Subspace& Fk = FC.level(q, k);
            const Matrix* d = FC.diff_from(q);
            Subspace Zr = Fk;
            if (d) Zr = intersect(Fk, preimage(*d, FC.level(q + 1, static_cast<long>(k) - r)));
            /* numerator of the page on the lower filtration level */
            Subspace Bup = FC.level(q, static_cast<long>(k) - 1);
            Subspace B1 = Bup;
            if (d) B1 = intersect(Bup, preimage(*d, FC.level(q + 1, static_cast<long>(k) - r)));
            /* d(F^{k+r-1} C^{q-1}) within F^k */
            Subspace B2 = Subspace::zero(p, Fk.ambient_dim());
            const Matrix* din = FC.diff_from(q - 1);
            if (din) {
                const Subspace& Fsrc = FC.level(q - 1, static_cast<long>(k) + r - 1);
                Matrix img(p, Fsrc.dim(), Fk.ambient_dim());
                for (std::size_t i = 0; i < Fsrc.dim(); ++i)
                    img.set_row(i, din->apply(Fsrc.basis().row(i)));
                B2 = intersect(row_space(img), Fk);
            }
            Subspace Br = sum(B1, B2);
            QuotientMap Q = quotient(Zr, Br);
            cell.dim = Q.dim;
            cell.reps = Q.reps;
            cell.projector = Q.projector;
            cell.Z = std::move(Zr);
            cell.B = std::move(Br);
            col.push_back(std::move(cell));
        }
        pt.cells.push_back(std::move(col));
    }

    /* induced differentials d_r: (k,q) -> (k-r, q+1) */
    for (std::size_t k = 0; k <= pt.L; ++k)
        for (int q = pt.min_q; q <= pt.max_q; ++q) {
            PageCell& cell = pt.cells[k][q - pt.min_q];
            long kt = static_cast<long>(k) - static_cast<long>(r);
            std::size_t tdim = 0;
            if (kt >= 0 && q + 1 <= pt.max_q) tdim = pt.cells[kt][q + 1 - pt.min_q].dim;
            Matrix dmat(p, tdim, cell.dim);
            const Matrix* d = FC.diff_from(q);
            if (tdim && d) {
                const PageCell& target = pt.cells[kt][q + 1 - pt.min_q];
                for (std::size_t j = 0; j < cell.dim; ++j) {
                    std::vector<Scalar> dc = d->apply(cell.reps.row(j));
                    if (!target.Z.contains(dc))
                        throw std::logic_error("page: dc is not in the target Z_r");
                    std::vector<Scalar> co = target.projector.apply(dc);
                    for (std::size_t i = 0; i < tdim; ++i) dmat.set(i, j, co[i]);
                }
            }
            cell.d = std::move(dmat);
        }

    /* d_r . d_r = 0 */
    for (std::size_t k = 0; k <= pt.L; ++k)
        for (int q = pt.min_q; q < pt.max_q; ++q) {
            const PageCell& c1 = pt.cells[k][q - pt.min_q];
            long kt = static_cast<long>(k) - static_cast<long>(r);
            if (kt < 0 || c1.d.rows() == 0) continue;
            const PageCell& c2 = pt.cells[kt][q + 1 - pt.min_q];
            if (c2.d.rows() == 0) continue;
            if (!(c2.d * c1.d).is_zero()) throw std::logic_error("page: d_r . d_r != 0");
        }
    return pt;
}

E1Decomposition e1_decomposition(const FilteredComplex& FC) {
    const AlgebraPtr& A = FC.algebra();
    const Scalar p = A->p();
    const std::size_t L = FC.L();
    E1Decomposition out;

    /* the quotient complex C/C.I over F_p */
    for (std::size_t i = 0; i < FC.C.diff_count(); ++i)
        out.quotient_diffs.push_back(FC.C.diff_at(i).augmented());
    for (int q = FC.min_q(); q <= FC.max_q(); ++q) {
        std::size_t rk = FC.C.rank(q);
        Subspace cycles = Subspace::full(p, rk);
        long leave = q - FC.min_q();
        if (leave < static_cast<long>(out.quotient_diffs.size())) cycles = kernel(out.quotient_diffs[leave]);
        Subspace bnds = Subspace::zero(p, rk);
        long enter = q - FC.min_q() - 1;
        if (enter >= 0) bnds = column_space(out.quotient_diffs[enter]);
        QuotientMap Q = quotient(cycles, bnds);
        out.h_dims.push_back(Q.dim);
        out.h_reps.push_back(Q.reps);
    }

    /* Jennings monomial bases of I^k/I^{k+1} */
    const JenningsData& J = A->jennings();
    const std::size_t a = J.basis.size();
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < a; ++i) tuples *= p;
    out.monomials.assign(L + 1, {});
    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<Scalar> x(a);
        std::size_t tt = t, deg = 0;
        for (std::size_t i = 0; i < a; ++i) {
            x[i] = tt % p;
            tt /= p;
            deg += x[i] * J.alpha[i];
        }
        if (deg <= L) out.monomials[deg].push_back(std::move(x));
    }

    PageTable E1 = page(FC, 1);
    std::size_t n = A->size();
    for (std::size_t k = 0; k <= L; ++k) {
        for (int q = FC.min_q(); q <= FC.max_q(); ++q) {
            const PageCell& cell = E1.cell(L - k, q);
            std::size_t hd = out.h_dims[q - FC.min_q()];
            std::size_t mc = out.monomials[k].size();
            Matrix iso(p, cell.dim, hd * mc);
            for (std::size_t hi = 0; hi < hd; ++hi) {
                /* lift the class to C^q: coefficient c_i at the identity slot */
                std::vector<Scalar> lift(FC.C.rank(q) * n, 0);
                for (std::size_t i = 0; i < FC.C.rank(q); ++i)
                    lift[i * n + A->group().identity] =
                        out.h_reps[q - FC.min_q()].at(hi, i);
                for (std::size_t mi = 0; mi < mc; ++mi) {
                    AlgebraElement mono = A->jennings_monomial(out.monomials[k][mi]);
                    Matrix R = block_diag_right_mult(A, mono, FC.C.rank(q));
                    std::vector<Scalar> v = R.apply(lift);
                    if (!cell.Z.contains(v))
                        throw std::logic_error("e1_decomposition: image is not a page cocycle");
                    std::vector<Scalar> co = cell.projector.apply(v);
                    for (std::size_t ri = 0; ri < cell.dim; ++ri)
                        iso.set(ri, hi * mc + mi, co[ri]);
                }
            }
            if (cell.dim != hd * mc || (cell.dim && rank(iso) != cell.dim))
                throw std::logic_error("e1_decomposition: E1 is not H(C/C.I) (x) gr I");
            out.iso[{k, q}] = std::move(iso);
        }
    }
    return out;
}

DerivationAction derivation(const FilteredComplex& FC, const PageTable& pt, std::size_t g) {
    const AlgebraPtr& A = FC.algebra();
    DerivationAction act;
    act.deg = A->jennings_degree(g);
    AlgebraElement lam = AlgebraElement::lambda(A, g);
    for (std::size_t k = 0; k <= pt.L; ++k)
        for (int q = pt.min_q; q <= pt.max_q; ++q) {
            const PageCell& cell = pt.cells[k][q - pt.min_q];
            long kt = static_cast<long>(k) - static_cast<long>(act.deg);
            std::size_t tdim = kt >= 0 ? pt.cells[kt][q - pt.min_q].dim : 0;
            Matrix m(FC.E.p, tdim, cell.dim);
            if (tdim && cell.dim) {
                Matrix R = block_diag_right_mult(A, lam, FC.C.rank(q));
                const PageCell& target = pt.cells[kt][q - pt.min_q];
                for (std::size_t j = 0; j < cell.dim; ++j) {
                    std::vector<Scalar> v = R.apply(cell.reps.row(j));
                    if (!target.Z.contains(v))
                        throw std::logic_error("derivation: image leaves the page cocycles");
                    std::vector<Scalar> co = target.projector.apply(v);
                    for (std::size_t i = 0; i < tdim; ++i) m.set(i, j, co[i]);
                }
            }
            act.maps[{k, q}] = std::move(m);
        }
    return act;
}

ConvergenceReport einfty_check(const FilteredComplex& FC) {
    ConvergenceReport rep;
    PageTable einf = page(FC, FC.L() + 1);
    HomologyRecord H = homology(FC.C);
    for (int q = FC.min_q(); q <= FC.max_q(); ++q) {
        std::size_t total = 0;
        for (std::size_t k = 0; k <= FC.L(); ++k) total += einf.dim(k, q);
        rep.einf_totals.push_back(total);
        rep.h_dims.push_back(H.dims[q - FC.min_q()]);
    }
    rep.converged = rep.einf_totals == rep.h_dims;
    return rep;
}

std::string D1Expression::pretty(std::size_t j) const {
    if (j >= terms.size()) return "0";
    std::string s;
    for (std::size_t ii = 0; ii < one_indices.size(); ++ii) {
        const auto& poly = terms[j][ii];
        for (std::size_t m = 0; m < poly.size(); ++m) {
            if (!poly[m]) continue;
            if (!s.empty()) s += " + ";
            if (poly[m] != 1) s += std::to_string(poly[m]) + "*";
            s += "a" + std::to_string(one_indices[ii] + 1);
            const auto& exps = gr.monomials[m];
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (!exps[i]) continue;
                s += "*y" + std::to_string(i + 1);
                if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
            }
        }
    }
    return s.empty() ? "0" : s;
}

D1Expression d1_solver(const AlgebraPtr& A) {
    const Scalar p = A->p();
    const JenningsData& J = A->jennings();
    const std::size_t a = J.basis.size();

    D1Expression out;
    out.alpha = J.alpha;
    out.gr = gr_cup(A);
    for (std::size_t i = 0; i < a; ++i)
        if (J.alpha[i] == 1) out.one_indices.push_back(i);

    YBasis Y = y_basis(A);
    const std::size_t nm = out.gr.monomials.size();

    /* evaluation matrix of all monomials, used to express functions */
    const std::size_t n = A->size();
    Matrix V(p, n, nm);
    {
        for (std::size_t m = 0; m < nm; ++m) {
            FunctionOnG f = FunctionOnG::constant(A, 1);
            for (std::size_t i = 0; i < a; ++i) f = f.cup(Y.y[i].pow(out.gr.monomials[m][i]));
            for (std::size_t g = 0; g < n; ++g) V.set(g, m, f.values[g]);
        }
    }
    auto express = [&](const FunctionOnG& f) {
        auto sol = solve(V, f.values);
        if (!sol) throw std::logic_error("d1_solver: function outside the monomial span");
        return *sol;
    };
    auto degree_part = [&](const std::vector<Scalar>& coeffs, std::size_t d) {
        std::vector<Scalar> outv(nm, 0);
        for (std::size_t m = 0; m < nm; ++m)
            if (out.gr.degree[m] == d) outv[m] = coeffs[m];
        return outv;
    };

    /* derivation matrices T_i: gr^d -> gr^{d-1} for alpha(i) = 1 generators */
    auto derivation_on_monomial = [&](std::size_t mono, std::size_t i1) {
        FunctionOnG f = FunctionOnG::constant(A, 1);
        for (std::size_t i = 0; i < a; ++i) f = f.cup(Y.y[i].pow(out.gr.monomials[mono][i]));
        FunctionOnG moved = translate(f, AlgebraElement::lambda(A, J.basis[i1]));
        std::vector<Scalar> coeffs = express(moved);
        for (std::size_t m = 0; m < nm; ++m)
            if (coeffs[m] && out.gr.degree[m] >= out.gr.degree[mono])
                throw std::logic_error("d1_solver: derivation does not lower the degree");
        return degree_part(coeffs, out.gr.degree[mono] - 1);
    };

    out.terms.assign(a, std::vector<std::vector<Scalar>>(out.one_indices.size(),
                                                         std::vector<Scalar>(nm, 0)));
    for (std::size_t j = 0; j < a; ++j) {
        if (J.alpha[j] == 1) {
            /* d_1(y_j) = a_j (x) 1 */
            std::size_t ii = 0;
            while (out.one_indices[ii] != j) ++ii;
            std::size_t one_mono = out.gr.monomial_index(std::vector<Scalar>(a, 0));
            out.terms[j][ii][one_mono] = 1;
            continue;
        }
        const std::size_t d = J.alpha[j];
        const std::size_t nones = out.one_indices.size();
        PrimeField Fp(p);
        /* rhs[i'][i]: coefficient polynomial of a_i in d_1(q_{i'}), where
           q_{i'} is the top graded part of y_j.(f_{i'}-1) */
        std::vector<std::vector<std::vector<Scalar>>> rhs(
            nones, std::vector<std::vector<Scalar>>(nones, std::vector<Scalar>(nm, 0)));
        for (std::size_t i2 = 0; i2 < nones; ++i2) {
            FunctionOnG psi =
                translate(Y.y[j], AlgebraElement::lambda(A, J.basis[out.one_indices[i2]]));
            std::vector<Scalar> coeffs = express(psi);
            for (std::size_t m = 0; m < nm; ++m)
                if (coeffs[m] && out.gr.degree[m] > d - 1)
                    throw std::logic_error("d1_solver: y_j.(f_i-1) not in lower filtration");
            /* d_1(q_{i'}) by the Leibniz rule and the induction hypothesis */
            for (std::size_t m = 0; m < nm; ++m) {
                if (!coeffs[m] || out.gr.degree[m] != d - 1) continue;
                const auto& x = out.gr.monomials[m];
                for (std::size_t l = 0; l < a; ++l) {
                    if (!x[l]) continue;
                    std::vector<Scalar> xm = x;
                    xm[l] -= 1;
                    std::size_t rest = out.gr.monomial_index(xm);
                    Scalar factor = Fp.mul(coeffs[m], x[l] % p);
                    for (std::size_t ii = 0; ii < nones; ++ii)
                        for (std::size_t m2 = 0; m2 < nm; ++m2) {
                            Scalar c = out.terms[l][ii][m2];
                            if (!c) continue;
                            std::size_t pm = out.gr.product_mono[m2][rest];
                            if (pm == GradedRing::zero_product) continue;
                            rhs[i2][ii][pm] = Fp.add(rhs[i2][ii][pm], Fp.mul(c, factor));
                        }
                }
            }
        }

        /* unknown r_{ij} in gr^{d-1}; equations r_{ij}.(f_{i'}-1) = rhs[i'][i]
           stacked over i', injective by the filtration argument */
        std::vector<std::size_t> rows_d1, rows_d2;  // monomials of degree d-1, d-2
        for (std::size_t m = 0; m < nm; ++m) {
            if (out.gr.degree[m] == d - 1) rows_d1.push_back(m);
            if (d >= 2 && out.gr.degree[m] == d - 2) rows_d2.push_back(m);
        }
        Matrix T(p, rows_d2.size() * nones, rows_d1.size());
        for (std::size_t c2 = 0; c2 < rows_d1.size(); ++c2)
            for (std::size_t i2 = 0; i2 < nones; ++i2) {
                std::vector<Scalar> der = derivation_on_monomial(rows_d1[c2], out.one_indices[i2]);
                for (std::size_t r2 = 0; r2 < rows_d2.size(); ++r2)
                    T.set(i2 * rows_d2.size() + r2, c2, der[rows_d2[r2]]);
            }
        for (std::size_t ii = 0; ii < nones; ++ii) {
            std::vector<Scalar> b(rows_d2.size() * nones, 0);
            for (std::size_t i2 = 0; i2 < nones; ++i2)
                for (std::size_t r2 = 0; r2 < rows_d2.size(); ++r2)
                    b[i2 * rows_d2.size() + r2] = rhs[i2][ii][rows_d2[r2]];
            auto sol = solve(T, b);
            if (!sol) throw std::logic_error("d1_solver: inconsistent induction system");
            for (std::size_t c2 = 0; c2 < rows_d1.size(); ++c2)
                out.terms[j][ii][rows_d1[c2]] = (*sol)[c2];
        }
    }
    return out;
}

}  // namespace augss

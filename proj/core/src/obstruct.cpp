#include "augss/obstruct.hpp"

#include <stdexcept>

namespace augss {

namespace {

void check_elementary_abelian(const AlgebraPtr& A) {
    for (std::size_t d : A->jennings().alpha)
        if (d != 1) throw std::invalid_argument("expected an elementary abelian group");
}

Matrix normalize_first_nonzero(Matrix m) {
    PrimeField F(m.p());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) return m.scaled(F.inv(m.at(i, j)));
    return m;
}

/* coefficient at I^{L-1}-level: prod_j lambda_j^{p-1} with exponent p-2 at i */
AlgebraElement near_norm(const AlgebraPtr& A, std::size_t a, std::size_t i) {
    AlgebraElement u = AlgebraElement::unit(A);
    std::size_t g = 1;
    for (std::size_t j = 1; j <= a; ++j) {
        AlgebraElement lam = AlgebraElement::lambda(A, g);
        u = u * lam.pow(j == i ? A->p() - 2 : A->p() - 1);
        g *= A->p();
    }
    return u;
}

bool is_zero_vec(const std::vector<Scalar>& v) {
    for (Scalar x : v)
        if (x) return false;
    return true;
}

/* v = unit * w; nullopt if not proportional or degenerate */
std::optional<Scalar> proportionality(const std::vector<Scalar>& v,
                                      const std::vector<Scalar>& w, Scalar p) {
    PrimeField F(p);
    Scalar unit = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!w[i]) {
            if (v[i]) return std::nullopt;
            continue;
        }
        Scalar u = F.mul(v[i], F.inv(w[i]));
        if (!unit) unit = u;
        else if (unit != u) return std::nullopt;
    }
    if (!unit) return std::nullopt;
    return unit;
}

}  // namespace

const Matrix& ForcedAction::action(std::size_t i, int q) const {
    return act.at(i).at(q - min_q);
}

ForcedAction forced_ai_action(const FilteredComplex& FC, const PageTable& E1) {
    const AlgebraPtr& A = FC.algebra();
    check_elementary_abelian(A);
    const std::size_t a = A->group().rank_a();
    const std::size_t L = A->L();
    const Scalar p = A->p();

    ForcedAction out;
    out.min_q = FC.min_q();
    out.max_q = FC.max_q();
    out.a = a;
    for (int q = FC.min_q(); q <= FC.max_q(); ++q)
        out.e1_zero_dims.push_back(E1.dim(0, q));

    AlgebraElement N = AlgebraElement::norm(A);
    out.act.assign(a, {});
    for (std::size_t i = 1; i <= a; ++i) {
        for (int q = FC.min_q(); q <= FC.max_q(); ++q) {
            const PageCell& top = E1.cell(L, q);
            const PageCell& zero = E1.cell(0, q);
            std::size_t tdim = q + 1 <= FC.max_q() ? E1.dim(0, q + 1) : 0;
            if (zero.dim == 0 || tdim == 0) {
                out.act[i - 1].push_back(Matrix(p, tdim, zero.dim));
                continue;
            }
            /* N-isomorphism E_1^{L,q} -> E_1^{0,q} */
            Matrix Niso(p, zero.dim, top.dim);
            {
                Matrix R = [&] {
                    std::size_t rk = FC.C.rank(q), n = A->size();
                    Matrix Rm = N.right_mult_matrix();
                    Matrix big(p, rk * n, rk * n);
                    for (std::size_t b = 0; b < rk; ++b)
                        for (std::size_t x = 0; x < n; ++x)
                            for (std::size_t y = 0; y < n; ++y)
                                big.set(b * n + x, b * n + y, Rm.at(x, y));
                    return big;
                }();
                for (std::size_t j = 0; j < top.dim; ++j) {
                    std::vector<Scalar> v = R.apply(top.reps.row(j));
                    if (!zero.Z.contains(v))
                        throw std::logic_error("forced_ai_action: c.N leaves the page");
                    std::vector<Scalar> co = zero.projector.apply(v);
                    for (std::size_t r2 = 0; r2 < zero.dim; ++r2) Niso.set(r2, j, co[r2]);
                }
            }
            auto Ninv = inverse(Niso);
            if (!Ninv) throw std::logic_error("forced_ai_action: N-map is not an isomorphism");

            /* multiply by the near-norm monomial, land in E_1^{1,q}, apply d_1 */
            AlgebraElement m_i = near_norm(A, a, i);
            const PageCell& one = E1.cell(1, q);
            Matrix comp(p, tdim, top.dim);
            {
                std::size_t rk = FC.C.rank(q), n = A->size();
                Matrix Rm = m_i.right_mult_matrix();
                Matrix big(p, rk * n, rk * n);
                for (std::size_t b = 0; b < rk; ++b)
                    for (std::size_t x = 0; x < n; ++x)
                        for (std::size_t y = 0; y < n; ++y)
                            big.set(b * n + x, b * n + y, Rm.at(x, y));
                for (std::size_t j = 0; j < top.dim; ++j) {
                    std::vector<Scalar> v = big.apply(top.reps.row(j));
                    if (!one.Z.contains(v))
                        throw std::logic_error("forced_ai_action: c.m_i leaves the page");
                    std::vector<Scalar> co = one.projector.apply(v);
                    std::vector<Scalar> dv = one.d.apply(co);  // into E_1^{0,q+1}
                    for (std::size_t r2 = 0; r2 < tdim; ++r2) comp.set(r2, j, dv[r2]);
                }
            }
            out.act[i - 1].push_back(normalize_first_nonzero(comp * *Ninv));
        }
    }
    return out;
}

ForcedAction forced_ai_action(const FreeComplex& D) {
    FilteredComplex FC = filter(D);
    PageTable E1 = page(FC, 1);
    return forced_ai_action(FC, E1);
}

namespace {

/* expanded vector of a dual-cone cochain supported on one basis slot;
   degree-m basis: z_t^* of K^m first, then the K^{m-r-1} summand */
std::vector<Scalar> cone_vector(const KoszulComplex& K, const FreeComplex& D, int m,
                                bool second, const std::vector<std::size_t>& subset,
                                const AlgebraElement& coeff, std::size_t r) {
    std::size_t n = K.A->size();
    std::vector<Scalar> v(D.rank(m) * n, 0);
    int sub_deg = second ? m - static_cast<int>(r) - 1 : m;
    if (sub_deg < 0 || sub_deg > static_cast<int>(K.a))
        throw std::invalid_argument("cone_vector: degree out of range");
    std::size_t base = 0;
    if (second && m >= 0 && m <= static_cast<int>(K.a)) base = K.subsets[m].size();
    std::size_t idx = base + K.subset_index(subset);
    for (std::size_t g = 0; g < n; ++g) v[idx * n + g] = coeff[g];
    return v;
}

}  // namespace

ObstructionResult leibniz_obstruction(const KoszulComplex& K, const KoszulCycle& w) {
    const Scalar p = K.A->p();
    if (w.class_is_zero()) return NoObstruction{"class zero"};
    if (w.r <= 1) return NoObstruction{"degree < 2"};

    const std::size_t r = w.r;
    const std::size_t R = r * (p - 1);
    const std::size_t a = K.a;
    FreeComplex D = dual_cone(K, w);
    FilteredComplex FC = filter(D);
    PageTable E1 = page(FC, 1);
    PageTable ER = page(FC, R);

    /* first subset with a nonzero coefficient */
    std::size_t si = 0;
    while (!w.mu[si]) ++si;
    const auto& s = K.subsets[r][si];
    Scalar mu = w.mu[si];

    ObstructionWitness out;
    out.p = p;
    out.a = a;
    out.r = r;
    out.subset = s;
    out.mu = mu;
    out.page = R;

    /* (a) factor classes (z_{{i}}^* . prod_{j != i} lambda_j^{p-1}, 0):
       cocycles on the nose, nonzero on page R, with vanishing earlier images */
    for (std::size_t i : s) {
        AlgebraElement c = AlgebraElement::unit(K.A);
        for (std::size_t j = 1; j <= a; ++j)
            if (j != i) c = c * K.lambda(j).pow(p - 1);
        std::vector<Scalar> v = cone_vector(K, D, 1, false, {i}, c, r);
        for (std::size_t q = 1; q < R; ++q) {
            PageTable Eq = q == 1 ? E1 : page(FC, q);
            std::vector<Scalar> co = Eq.coords(p - 1, 1, v);
            if (!is_zero_vec(Eq.cell(p - 1, 1).d.apply(co)))
                throw std::logic_error("leibniz_obstruction: factor supports a differential");
        }
        std::vector<Scalar> co = ER.coords(p - 1, 1, v);
        if (is_zero_vec(co))
            throw std::logic_error("leibniz_obstruction: factor class dies before page R");
        out.factor_classes.push_back(co);
    }

    /* (b) the forced product: following a_i-composites from (z_empty^*.N, 0)
       reaches (z_s^*.N, 0) projectively */
    {
        ForcedAction fa = forced_ai_action(FC, E1);
        AlgebraElement N = AlgebraElement::norm(K.A);
        std::vector<Scalar> cls =
            E1.coords(0, 0, cone_vector(K, D, 0, false, {}, N, r));
        int q = 0;
        for (std::size_t i : s) {
            cls = fa.action(i - 1, q).apply(cls);
            ++q;
        }
        std::vector<Scalar> target =
            E1.coords(0, static_cast<int>(r),
                      cone_vector(K, D, static_cast<int>(r), false, s, N, r));
        auto unit = proportionality(cls, target, p);
        if (!unit)
            throw std::logic_error("leibniz_obstruction: forced product misses (z_s^*.N, 0)");
    }

    /* (c) the product class supports d_R hitting (0, z_empty^*.N) */
    AlgebraElement cprod = AlgebraElement::unit(K.A);
    for (std::size_t i = 1; i <= a; ++i) {
        bool in_s = false;
        for (std::size_t x : s) in_s = in_s || x == i;
        if (!in_s) cprod = cprod * K.lambda(i).pow(p - 1);
    }
    std::vector<Scalar> P =
        cone_vector(K, D, static_cast<int>(r), false, s, cprod, r);
    out.product_class = ER.coords(R, static_cast<int>(r), P);
    if (is_zero_vec(out.product_class))
        throw std::logic_error("leibniz_obstruction: product class dies before page R");
    std::vector<Scalar> dP = ER.cell(R, static_cast<int>(r)).d.apply(out.product_class);
    out.d_image = dP;
    if (is_zero_vec(dP)) throw std::logic_error("leibniz_obstruction: d_R of the product is zero");

    std::vector<Scalar> target = ER.coords(
        0, static_cast<int>(r) + 1,
        cone_vector(K, D, static_cast<int>(r) + 1, true, {}, AlgebraElement::norm(K.A), r));
    if (is_zero_vec(target))
        throw std::logic_error("leibniz_obstruction: (0, z_empty^*.N) dies before page R");
    out.target_class = target;
    auto unit = proportionality(dP, target, p);
    if (!unit) throw std::logic_error("leibniz_obstruction: d_R image is not (0, z_empty^*.N)");
    /* the cochain-level identity pins the unit to plus or minus mu_s */
    if (*unit != mu && *unit != (p - mu % p) % p)
        throw std::logic_error("leibniz_obstruction: unit is not plus or minus mu_s");
    out.unit = *unit;
    out.verdict = "not realizable: the class of (z_s^*.prod, 0) is a product of permanent "
                  "cycles but supports a nonzero d_" + std::to_string(R);
    return out;
}

AnnihilatorIdeal annihilator_ideal(const FreeComplex& D) {
    const AlgebraPtr& A = D.algebra();
    if (A->p() != 2) throw std::invalid_argument("annihilator_ideal: p = 2 only");
    check_elementary_abelian(A);
    const std::size_t a = A->group().rank_a();

    FilteredComplex FC = filter(D);
    PageTable E1 = page(FC, 1);
    ForcedAction fa = forced_ai_action(FC, E1);

    AnnihilatorIdeal out;
    out.a = a;
    std::size_t span = static_cast<std::size_t>(D.max_degree() - D.min_degree() + 1);
    out.top_degree = span + 1;

    /* V = direct sum of E_1^{0,q}; operators as dim(V) x dim(V) matrices */
    std::vector<std::size_t> offset(span + 1, 0);
    for (std::size_t qi = 0; qi < span; ++qi)
        offset[qi + 1] = offset[qi] + fa.e1_zero_dims[qi];
    std::size_t dimV = offset[span];

    std::vector<Matrix> ops;  // per generator
    for (std::size_t i = 0; i < a; ++i) {
        Matrix m(2, dimV, dimV);
        for (std::size_t qi = 0; qi + 1 < span; ++qi) {
            const Matrix& block = fa.act[i][qi];
            for (std::size_t r2 = 0; r2 < block.rows(); ++r2)
                for (std::size_t c2 = 0; c2 < block.cols(); ++c2)
                    m.set(offset[qi + 1] + r2, offset[qi] + c2, block.at(r2, c2));
        }
        ops.push_back(std::move(m));
    }

    /* monomials of each degree, lexicographic exponents */
    auto monomials_of_degree = [&](std::size_t d) {
        std::vector<std::vector<Scalar>> outm;
        std::vector<Scalar> cur(a, 0);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
            if (pos + 1 == a) {
                cur[pos] = static_cast<Scalar>(left);
                outm.push_back(cur);
                return;
            }
            for (std::size_t e = left + 1; e-- > 0;) {
                cur[pos] = static_cast<Scalar>(left - e);
                self(self, pos + 1, e);
            }
        };
        if (a == 0) {
            if (d == 0) outm.push_back({});
            return outm;
        }
        rec(rec, 0, d);
        /* a_1-leading monomials first */
        std::sort(outm.begin(), outm.end(),
                  [](const auto& x, const auto& y) { return x > y; });
        return outm;
    };

    std::vector<Subspace> ann_spans;   // per degree, in monomial coefficients
    std::vector<Subspace> ideal_part;  // degree-d part of the ideal generated so far
    for (std::size_t d = 0; d <= out.top_degree; ++d) {
        auto mons = monomials_of_degree(d);
        out.monomials.push_back(mons);
        /* kernel of c -> sum_m c_m Op(mon_m) */
        Matrix sys(2, dimV * dimV, mons.size());
        for (std::size_t m = 0; m < mons.size(); ++m) {
            Matrix op = Matrix::identity(2, dimV);
            for (std::size_t i = 0; i < a; ++i)
                for (Scalar e = 0; e < mons[m][i]; ++e) op = ops[i] * op;
            for (std::size_t r2 = 0; r2 < dimV; ++r2)
                for (std::size_t c2 = 0; c2 < dimV; ++c2)
                    sys.set(r2 * dimV + c2, m, op.at(r2, c2));
        }
        Subspace ker = dimV ? kernel(sys) : Subspace::full(2, mons.size());
        out.degree_basis.push_back({});
        for (std::size_t i = 0; i < ker.dim(); ++i)
            out.degree_basis.back().push_back(ker.basis().row(i));
        if (d == 0 && ker.dim()) out.unit_ideal = true;

        /* degree-d part of the ideal generated by lower-degree members */
        Subspace prev_total = d == 0 ? Subspace::zero(2, 1)
                                     : sum(ideal_part[d - 1], ann_spans[d - 1]);
        Subspace gen_d = Subspace::zero(2, mons.size());
        if (d > 0 && prev_total.dim()) {
            std::vector<std::vector<Scalar>> rows;
            auto prev_mons = out.monomials[d - 1];
            for (std::size_t i = 0; i < a; ++i)
                for (std::size_t b = 0; b < prev_total.dim(); ++b) {
                    std::vector<Scalar> row(mons.size(), 0);
                    for (std::size_t m = 0; m < prev_mons.size(); ++m) {
                        Scalar c = prev_total.basis().at(b, m);
                        if (!c) continue;
                        std::vector<Scalar> shifted = prev_mons[m];
                        shifted[i] += 1;
                        for (std::size_t m2 = 0; m2 < mons.size(); ++m2)
                            if (mons[m2] == shifted) row[m2] = (row[m2] + c) % 2;
                    }
                    rows.push_back(std::move(row));
                }
            gen_d = Subspace(2, mons.size(), Matrix::from_rows(2, mons.size(), rows));
        }
        ideal_part.push_back(gen_d);
        ann_spans.push_back(ker);

        /* minimal generators: annihilator elements not induced from below */
        if (!ker.contains(gen_d))
            throw std::logic_error("annihilator_ideal: ideal escapes the annihilator");
        QuotientMap q = quotient(ker, gen_d);
        for (std::size_t i = 0; i < q.dim; ++i)
            out.generators.push_back({d, q.reps.row(i)});
    }
    return out;
}

std::string polynomial_string(const AnnihilatorIdeal& ideal, std::size_t degree,
                              const std::vector<Scalar>& coeffs) {
    std::string s;
    const auto& mons = ideal.monomials[degree];
    for (std::size_t m = 0; m < mons.size(); ++m) {
        if (!coeffs[m]) continue;
        if (!s.empty()) s += " + ";
        if (coeffs[m] != 1) s += std::to_string(coeffs[m]) + "*";
        bool any = false;
        for (std::size_t i = 0; i < mons[m].size(); ++i) {
            if (!mons[m][i]) continue;
            if (any) s += "*";
            s += "a" + std::to_string(i + 1);
            if (mons[m][i] > 1) s += "^" + std::to_string(mons[m][i]);
            any = true;
        }
        if (!any) s += "1";
    }
    return s.empty() ? "0" : s;
}

}  // namespace augss

#include "augss/grfun.hpp"

#include <stdexcept>

namespace augss {

FunctionOnG FunctionOnG::zero(const AlgebraPtr& A) {
    return {A, std::vector<Scalar>(A->size(), 0)};
}

FunctionOnG FunctionOnG::constant(const AlgebraPtr& A, Scalar c) {
    return {A, std::vector<Scalar>(A->size(), c % A->p())};
}

FunctionOnG FunctionOnG::indicator(const AlgebraPtr& A, std::size_t g) {
    std::vector<Scalar> v(A->size(), 0);
    v.at(g) = 1;
    return {A, std::move(v)};
}

bool FunctionOnG::is_zero() const {
    for (Scalar v : values)
        if (v % A->p()) return false;
    return true;
}

FunctionOnG FunctionOnG::operator+(const FunctionOnG& rhs) const {
    FunctionOnG out{A, values};
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = (values[i] + rhs.values[i]) % A->p();
    return out;
}

FunctionOnG FunctionOnG::operator-(const FunctionOnG& rhs) const {
    FunctionOnG out{A, values};
    for (std::size_t i = 0; i < values.size(); ++i)
        out.values[i] = (values[i] + A->p() - rhs.values[i] % A->p()) % A->p();
    return out;
}

FunctionOnG FunctionOnG::cup(const FunctionOnG& rhs) const {
    FunctionOnG out{A, values};
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = (values[i] * rhs.values[i]) % A->p();
    return out;
}

FunctionOnG FunctionOnG::scaled(Scalar c) const {
    FunctionOnG out{A, values};
    for (auto& v : out.values) v = (v * c) % A->p();
    return out;
}

FunctionOnG FunctionOnG::pow(std::size_t e) const {
    FunctionOnG out = constant(A, 1);
    for (std::size_t i = 0; i < e; ++i) out = out.cup(*this);
    return out;
}

bool FunctionOnG::operator==(const FunctionOnG& rhs) const {
    return A->same_as(*rhs.A) && values == rhs.values;
}

FunctionOnG translate(const FunctionOnG& psi, const AlgebraElement& x) {
    if (!psi.A->same_as(*x.algebra())) throw std::invalid_argument("translate: group mismatch");
    const PGroup& G = psi.A->group();
    std::vector<Scalar> out(G.size, 0);
    for (std::size_t s = 0; s < G.size; ++s) {
        Scalar acc = 0;
        for (std::size_t g = 0; g < G.size; ++g)
            acc = (acc + x[g] * psi.values[G.mul[g][s]]) % G.p;
        out[s] = acc;
    }
    return {psi.A, std::move(out)};
}

int filtration_degree(const FunctionOnG& psi) {
    if (psi.is_zero()) return -1;
    const AlgebraPtr& A = psi.A;
    for (std::size_t k = 0; k <= A->L(); ++k) {
        const Subspace& ik1 = A->ideal_power(k + 1);
        bool killed = true;
        for (std::size_t i = 0; i < ik1.dim() && killed; ++i) {
            AlgebraElement lam(A, ik1.basis().row(i));
            killed = translate(psi, lam).is_zero();
        }
        if (killed) return static_cast<int>(k);
    }
    throw std::logic_error("filtration_degree: not killed by I^{L+1}");
}

bool in_augmentation_image(const FunctionOnG& psi) {
    Scalar s = 0;
    for (Scalar v : psi.values) s = (s + v) % psi.A->p();
    return s == 0;
}

YBasis y_basis(const AlgebraPtr& A) {
    const JenningsData& J = A->jennings();
    const PGroup& G = A->group();
    const std::size_t a = J.basis.size();
    YBasis out;
    out.alpha = J.alpha;
    for (std::size_t i = 0; i < a; ++i) {
        std::vector<Scalar> v(G.size);
        for (std::size_t g = 0; g < G.size; ++g) v[g] = J.normal_form[g][i];
        out.y.push_back({A, std::move(v)});
    }

    /* closed group-ring formula, evaluated against the digit definition */
    FunctionOnG eps = FunctionOnG::indicator(A, G.identity);
    const Scalar p = A->p();
    for (std::size_t i = 0; i < a; ++i) {
        AlgebraElement prod = AlgebraElement::unit(A);
        for (std::size_t jj = a; jj-- > 0;) {
            std::size_t finv = G.inverse[J.basis[jj]];
            AlgebraElement fi = AlgebraElement::group_element(A, finv);
            AlgebraElement factor;
            if (jj == i) {
                /* f_i^{-1} (1 - f_i^{-1})^{p-2} */
                factor = fi * (AlgebraElement::unit(A) - fi).pow(p - 2);
            } else {
                factor = (fi - AlgebraElement::unit(A)).pow(p - 1);
            }
            prod = prod * factor;
        }
        if (!(translate(eps, prod) == out.y[i]))
            throw std::logic_error("y_basis: closed formula disagrees with digits");
        if (filtration_degree(out.y[i]) != static_cast<int>(J.alpha[i]))
            throw std::logic_error("y_basis: filtration degree of y_i is not alpha(i)");
    }
    return out;
}

std::size_t GradedRing::monomial_index(const std::vector<Scalar>& exps) const {
    for (std::size_t i = 0; i < monomials.size(); ++i)
        if (monomials[i] == exps) return i;
    throw std::invalid_argument("GradedRing: unknown monomial");
}

GradedRing gr_cup(const AlgebraPtr& A) {
    const PGroup& G = A->group();
    const std::size_t n = G.size, L = A->L();
    const Scalar p = A->p();
    const JenningsData& J = A->jennings();
    const std::size_t a = J.basis.size();
    YBasis Y = y_basis(A);

    /* F^k = C^0(G).I^{L-k} = {eps.v | v in I^{L-k}}, cross-checked against
       the annihilator form {psi | psi.I^{k+1} = 0} */
    FunctionOnG eps = FunctionOnG::indicator(A, G.identity);
    std::vector<Subspace> F;
    for (std::size_t k = 0; k <= L; ++k) {
        const Subspace& ik = A->ideal_power(L - k);
        std::vector<std::vector<Scalar>> gens;
        for (std::size_t i = 0; i < ik.dim(); ++i)
            gens.push_back(translate(eps, AlgebraElement(A, ik.basis().row(i))).values);
        Subspace fk(p, n, Matrix::from_rows(p, n, gens));

        const Subspace& ik1 = A->ideal_power(k + 1);
        Matrix stacked(p, 0, n);
        for (std::size_t i = 0; i < ik1.dim(); ++i) {
            AlgebraElement lam(A, ik1.basis().row(i));
            /* translate is psi -> psi.lam; as a matrix on values: row s picks
               up lam[g] at column g*s */
            Matrix tm(p, n, n);
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t g = 0; g < n; ++g) {
                    std::size_t gs = G.mul[g][s];
                    tm.set(s, gs, (tm.at(s, gs) + lam[g]) % p);
                }
            stacked = stacked.rows() == 0 ? tm : vstack(stacked, tm);
        }
        Subspace ann = ik1.dim() == 0 ? Subspace::full(p, n) : kernel(stacked);
        if (!(fk == ann)) throw std::logic_error("gr_cup: the two filtration forms disagree");
        F.push_back(std::move(fk));
    }

    GradedRing R;
    R.L = L;
    R.dims.resize(L + 1);
    for (std::size_t k = 0; k <= L; ++k) {
        std::size_t lower = k == 0 ? 0 : F[k - 1].dim();
        R.dims[k] = F[k].dim() - lower;
    }

    /* monomial list ordered by (degree, lexicographic exponents) */
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < a; ++i) tuples *= p;
    std::vector<std::vector<Scalar>> all;
    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<Scalar> x(a);
        std::size_t tt = t;
        for (std::size_t i = a; i-- > 0;) {
            /* decode so that iteration order is lexicographic in (x_1..x_a) */
            x[i] = tt % p;
            tt /= p;
        }
        all.push_back(std::move(x));
    }
    for (std::size_t k = 0; k <= L; ++k)
        for (const auto& x : all) {
            std::size_t deg = 0;
            for (std::size_t i = 0; i < a; ++i) deg += x[i] * J.alpha[i];
            if (deg == k) {
                R.monomials.push_back(x);
                R.degree.push_back(k);
            }
        }

    /* quotient maps gr^k = F^k / F^{k-1} */
    std::vector<QuotientMap> gr;
    for (std::size_t k = 0; k <= L; ++k)
        gr.push_back(quotient(F[k], k == 0 ? Subspace::zero(p, n) : F[k - 1]));

    auto monomial_fn = [&](const std::vector<Scalar>& x) {
        FunctionOnG f = FunctionOnG::constant(A, 1);
        for (std::size_t i = 0; i < a; ++i) f = f.cup(Y.y[i].pow(x[i]));
        return f;
    };

    /* classes of monomials; the degree-k monomials must form a basis of gr^k */
    R.classes.resize(R.monomials.size());
    for (std::size_t k = 0; k <= L; ++k) {
        std::vector<std::vector<Scalar>> coords;
        for (std::size_t m = 0; m < R.monomials.size(); ++m) {
            if (R.degree[m] != k) continue;
            FunctionOnG f = monomial_fn(R.monomials[m]);
            if (!F[k].contains(f.values)) throw std::logic_error("gr_cup: monomial outside F^k");
            R.classes[m] = gr[k].coords(f.values);
            coords.push_back(R.classes[m]);
        }
        if (coords.size() != R.dims[k])
            throw std::logic_error("gr_cup: monomial count differs from dim gr^k");
        if (!coords.empty()) {
            Matrix M = Matrix::from_rows(p, gr[k].dim, coords);
            if (rank(M) != coords.size())
                throw std::logic_error("gr_cup: monomials are not independent in gr^k");
        }
    }

    /* top class y_1^{p-1}...y_a^{p-1} is nonzero in gr^L */
    {
        std::vector<Scalar> top(a, p - 1);
        FunctionOnG f = monomial_fn(top);
        bool nonzero = false;
        for (Scalar c : gr[L].coords(f.values))
            if (c) nonzero = true;
        if (!nonzero && L > 0) throw std::logic_error("gr_cup: top monomial vanishes in gr^L");
    }

    /* structure constants, with the truncated polynomial prediction verified
       against the filtration quotients */
    R.product_mono.assign(R.monomials.size(),
                          std::vector<std::size_t>(R.monomials.size(), GradedRing::zero_product));
    for (std::size_t m1 = 0; m1 < R.monomials.size(); ++m1)
        for (std::size_t m2 = 0; m2 < R.monomials.size(); ++m2) {
            std::size_t k = R.degree[m1] + R.degree[m2];
            std::vector<Scalar> sum(a);
            bool truncated = k > L;
            for (std::size_t i = 0; i < a; ++i) {
                sum[i] = R.monomials[m1][i] + R.monomials[m2][i];
                if (sum[i] >= p) truncated = true;
            }
            if (k > L) continue;
            FunctionOnG f = monomial_fn(R.monomials[m1]).cup(monomial_fn(R.monomials[m2]));
            std::vector<Scalar> c = gr[k].coords(f.values);
            std::vector<Scalar> expected(gr[k].dim, 0);
            if (!truncated) {
                std::size_t mi = R.monomial_index(sum);
                expected = R.classes[mi];
                R.product_mono[m1][m2] = mi;
            }
            if (c != expected)
                throw std::logic_error("gr_cup: product differs from truncated polynomial ring");
        }
    return R;
}

}  // namespace augss

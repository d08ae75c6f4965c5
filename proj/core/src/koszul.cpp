#include "augss/koszul.hpp"

#include <stdexcept>

namespace augss {

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t a, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    /* lexicographic order of increasing element lists */
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (cur.size() == m) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = next; v <= a; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/* sign of z_s ^ z_t = sign * z_{s u t}; 0 if they intersect */
int shuffle_sign(const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
    std::size_t inversions = 0;
    for (std::size_t x : s)
        for (std::size_t y : t) {
            if (x == y) return 0;
            if (x > y) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::size_t> merge_subsets(const std::vector<std::size_t>& s,
                                       const std::vector<std::size_t>& t) {
    std::vector<std::size_t> u;
    u.reserve(s.size() + t.size());
    std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
    return u;
}

}  // namespace

std::size_t KoszulComplex::subset_index(const std::vector<std::size_t>& s) const {
    const auto& list = subsets.at(s.size());
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == s) return i;
    throw std::invalid_argument("KoszulComplex: unknown subset");
}

AlgebraElement KoszulComplex::lambda(std::size_t i) const {
    if (i < 1 || i > a) throw std::invalid_argument("KoszulComplex: generator out of range");
    std::size_t g = 1;
    for (std::size_t k = 1; k < i; ++k) g *= A->p();
    return AlgebraElement::lambda(A, g);
}

KoszulComplex build_koszul(Scalar p, std::size_t a) {
    KoszulComplex K;
    K.A = GroupAlgebra::make(elementary_abelian_group(p, a));
    K.a = a;
    for (std::size_t m = 0; m <= a; ++m) K.subsets.push_back(subsets_of_size(a, m));

    std::vector<std::size_t> ranks;
    for (std::size_t m = 0; m <= a; ++m) ranks.push_back(K.subsets[m].size());
    std::vector<AlgMatrix> diffs;
    for (std::size_t m = 0; m + 1 <= a; ++m) {
        AlgMatrix d(K.A, ranks[m], ranks[m + 1]);
        for (std::size_t col = 0; col < K.subsets[m + 1].size(); ++col) {
            const auto& s = K.subsets[m + 1][col];
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<std::size_t> rest = s;
                rest.erase(rest.begin() + i);
                std::size_t row = 0;
                for (; row < K.subsets[m].size(); ++row)
                    if (K.subsets[m][row] == rest) break;
                AlgebraElement lam = K.lambda(s[i]);
                /* d(z_s) = sum_i (-1)^i lambda_{s_i} z_{s minus s_i}, i from 1 */
                Scalar sgn = (i + 1) % 2 == 0 ? 1 : p - 1;
                d.at(row, col) = d.at(row, col) + lam.scaled(sgn);
            }
        }
        diffs.push_back(std::move(d));
    }
    K.complex = FreeComplex(K.A, Direction::chain, 0, std::move(ranks), std::move(diffs));
    return K;
}

bool KChain::is_zero() const {
    for (const auto& u : c)
        if (!u.is_zero()) return false;
    return true;
}

KChain KChain::operator+(const KChain& rhs) const {
    if (degree != rhs.degree || c.size() != rhs.c.size())
        throw std::invalid_argument("KChain::+: degree mismatch");
    KChain out = *this;
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] = out.c[i] + rhs.c[i];
    return out;
}

KChain KChain::operator-(const KChain& rhs) const {
    if (degree != rhs.degree || c.size() != rhs.c.size())
        throw std::invalid_argument("KChain::-: degree mismatch");
    KChain out = *this;
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] = out.c[i] - rhs.c[i];
    return out;
}

KChain KChain::scaled(Scalar s) const {
    KChain out = *this;
    for (auto& u : out.c) u = u.scaled(s);
    return out;
}

bool KChain::operator==(const KChain& rhs) const { return degree == rhs.degree && c == rhs.c; }

KChain kchain_zero(const KoszulComplex& K, int degree) {
    std::size_t n = degree >= 0 && degree <= static_cast<int>(K.a) ? K.subsets[degree].size() : 0;
    return {degree, std::vector<AlgebraElement>(n, AlgebraElement::zero(K.A))};
}

KChain kchain_basis(const KoszulComplex& K, const std::vector<std::size_t>& s,
                    const AlgebraElement& coeff) {
    KChain out = kchain_zero(K, static_cast<int>(s.size()));
    out.c[K.subset_index(s)] = coeff;
    return out;
}

KChain apply_diff(const KoszulComplex& K, const KChain& x) {
    KChain out = kchain_zero(K, x.degree - 1);
    if (x.degree <= 0 || x.degree > static_cast<int>(K.a)) return out;
    const AlgMatrix& d = K.complex.diff_from(x.degree);
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j)
            if (!d.at(i, j).is_zero()) out.c[i] = out.c[i] + d.at(i, j) * x.c[j];
    return out;
}

bool is_cycle(const KoszulComplex& K, const KChain& x) { return apply_diff(K, x).is_zero(); }

KChain wedge(const KoszulComplex& K, const KChain& x, const KChain& y) {
    int deg = x.degree + y.degree;
    if (deg > static_cast<int>(K.a)) return kchain_zero(K, deg > (int)K.a ? (int)K.a : deg);
    KChain out = kchain_zero(K, deg);
    for (std::size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i].is_zero()) continue;
        const auto& s = K.subsets[x.degree][i];
        for (std::size_t j = 0; j < y.c.size(); ++j) {
            if (y.c[j].is_zero()) continue;
            const auto& t = K.subsets[y.degree][j];
            int sgn = shuffle_sign(s, t);
            if (sgn == 0) continue;
            std::size_t idx = K.subset_index(merge_subsets(s, t));
            AlgebraElement term = x.c[i] * y.c[j];
            if (sgn < 0) term = term.scaled(K.A->p() - 1);
            out.c[idx] = out.c[idx] + term;
        }
    }
    return out;
}

namespace {

std::vector<Scalar> expand_kchain(const KoszulComplex& K, const KChain& x) {
    std::size_t n = K.A->size();
    std::vector<Scalar> v(x.c.size() * n, 0);
    for (std::size_t i = 0; i < x.c.size(); ++i)
        for (std::size_t g = 0; g < n; ++g) v[i * n + g] = x.c[i][g];
    return v;
}

KChain kchain_from_expanded(const KoszulComplex& K, int degree, const std::vector<Scalar>& v) {
    KChain out = kchain_zero(K, degree);
    std::size_t n = K.A->size();
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        std::vector<Scalar> c(n);
        for (std::size_t g = 0; g < n; ++g) c[g] = v[i * n + g];
        out.c[i] = AlgebraElement(K.A, std::move(c));
    }
    return out;
}

/* lambda_{s_1}^{p-1} ... lambda_{s_r}^{p-1} z_s */
KChain exterior_generator(const KoszulComplex& K, const std::vector<std::size_t>& s) {
    AlgebraElement u = AlgebraElement::unit(K.A);
    for (std::size_t i : s) u = u * K.lambda(i).pow(K.A->p() - 1);
    return kchain_basis(K, s, u);
}

}  // namespace

std::vector<Scalar> homology_class(const KoszulComplex& K, const KChain& cycle) {
    if (!is_cycle(K, cycle)) throw std::invalid_argument("homology_class: not a cycle");
    std::size_t r = cycle.degree;
    std::size_t n = K.A->size();
    const auto& rsubs = K.subsets[r];
    Matrix gens(K.A->p(), rsubs.size() * n, rsubs.size());
    for (std::size_t s = 0; s < rsubs.size(); ++s) {
        std::vector<Scalar> v = expand_kchain(K, exterior_generator(K, rsubs[s]));
        for (std::size_t i = 0; i < v.size(); ++i) gens.set(i, s, v[i]);
    }
    Matrix system = gens;
    if (r + 1 <= K.a) {
        ExpandedComplex E = expand(K.complex);
        system = hstack(gens, E.diffs[r]);  // diffs[r]: K_{r+1} -> K_r
    }
    auto sol = solve(system, expand_kchain(K, cycle));
    if (!sol) throw std::logic_error("homology_class: generators + boundaries do not span");
    return std::vector<Scalar>(sol->begin(), sol->begin() + rsubs.size());
}

bool KoszulCycle::class_is_zero() const {
    for (Scalar m : mu)
        if (m) return false;
    return true;
}

KChain normal_chain(const KoszulComplex& K, const KoszulCycle& w) {
    KChain out = kchain_zero(K, static_cast<int>(w.r));
    for (std::size_t s = 0; s < w.mu.size(); ++s) {
        if (!w.mu[s]) continue;
        out = out + exterior_generator(K, K.subsets[w.r][s]).scaled(w.mu[s]);
    }
    return out;
}

KoszulCycle normalize_cycle(const KoszulComplex& K, const KChain& cycle) {
    KoszulCycle w;
    w.r = static_cast<std::size_t>(cycle.degree);
    w.mu = homology_class(K, cycle);
    KChain normal = normal_chain(K, w);
    KChain diff = cycle - normal;
    if (!diff.is_zero()) {
        w.raw = cycle;
        if (cycle.degree + 1 <= static_cast<int>(K.a)) {
            ExpandedComplex E = expand(K.complex);
            auto b = solve(E.diffs[cycle.degree], expand_kchain(K, diff));
            if (!b) throw std::logic_error("normalize_cycle: correction does not exist");
            w.correction = kchain_from_expanded(K, cycle.degree + 1, *b);
        } else {
            throw std::logic_error("normalize_cycle: nonzero difference in top degree");
        }
    }
    return w;
}

KoszulCycle cycle_from_mu(const KoszulComplex& K, std::size_t r, std::vector<Scalar> mu) {
    if (r > K.a) throw std::invalid_argument("cycle_from_mu: degree out of range");
    if (mu.size() != K.subsets[r].size()) throw std::invalid_argument("cycle_from_mu: bad mu size");
    KoszulCycle w;
    w.r = r;
    for (auto& m : mu) m %= K.A->p();
    w.mu = std::move(mu);
    return w;
}

ChainMap multiplication_map(const KoszulComplex& K, const KChain& w) {
    std::size_t r = static_cast<std::size_t>(w.degree);
    ChainMap f;
    f.domain = shift(K.complex, static_cast<int>(r));
    f.codomain = K.complex;
    for (int m = f.domain.min_degree(); m <= f.domain.max_degree(); ++m) {
        std::size_t src = f.domain.rank(m), dst = K.complex.rank(m);
        AlgMatrix block(K.A, dst, src);
        int q = m - static_cast<int>(r);
        if (q >= 0 && q <= static_cast<int>(K.a)) {
            for (std::size_t j = 0; j < src; ++j) {
                KChain img = wedge(K, w, kchain_basis(K, K.subsets[q][j],
                                                      AlgebraElement::unit(K.A)));
                for (std::size_t i = 0; i < dst; ++i) block.at(i, j) = img.c[i];
            }
        }
        f.blocks.push_back(std::move(block));
    }
    return f;
}

FreeComplex build_cone(const KoszulComplex& K, const KoszulCycle& w) {
    KChain wn = w.raw ? *w.raw : normal_chain(K, w);
    return cone(multiplication_map(K, wn));
}

FreeComplex dual_koszul(const KoszulComplex& K) {
    /* transpose with the sign -(-1)^m, entries kept (commutative algebra,
       matching the displayed dual basis convention) */
    std::vector<AlgMatrix> diffs;
    for (std::size_t m = 0; m + 1 <= K.a; ++m) {
        const AlgMatrix& M = K.complex.diff_at(m);  // K_{m+1} -> K_m
        Scalar sgn = m % 2 == 0 ? K.A->p() - 1 : 1;  // -(-1)^m
        AlgMatrix N(K.A, M.cols, M.rows);
        for (std::size_t i = 0; i < M.rows; ++i)
            for (std::size_t j = 0; j < M.cols; ++j) N.at(j, i) = M.at(i, j).scaled(sgn);
        diffs.push_back(std::move(N));
    }
    return FreeComplex(K.A, Direction::cochain, 0, K.complex.ranks(), std::move(diffs));
}

FreeComplex dual_cone(const KoszulComplex& K, const KoszulCycle& w) {
    FreeComplex Kdual = dual_koszul(K);
    const std::size_t r = w.r;
    const int a = static_cast<int>(K.a);
    const int top = a + static_cast<int>(r) + 1;
    const Scalar p = K.A->p();

    auto rank1 = [&](int m) { return m >= 0 && m <= a ? K.subsets[m].size() : 0; };
    std::vector<std::size_t> ranks;
    for (int m = 0; m <= top; ++m)
        ranks.push_back(rank1(m) + rank1(m - static_cast<int>(r) - 1));

    std::vector<AlgMatrix> diffs;
    for (int m = 0; m < top; ++m) {
        std::size_t sc = rank1(m), sc2 = rank1(m - r - 1);
        std::size_t tc = rank1(m + 1), tc2 = rank1(m - r);
        AlgMatrix block(K.A, tc + tc2, sc + sc2);
        auto put_dual = [&](int deg, std::size_t roff, std::size_t coff) {
            /* delta_K: K^deg -> K^{deg+1} */
            if (deg < 0 || deg >= a) return;
            const AlgMatrix& D = Kdual.diff_at(deg);
            for (std::size_t i = 0; i < D.rows; ++i)
                for (std::size_t j = 0; j < D.cols; ++j) block.at(roff + i, coff + j) = D.at(i, j);
        };
        put_dual(m, 0, 0);
        put_dual(m - r - 1, tc, sc);
        /* (-1)^m w*: first summand K^m -> second summand K^{m-r} */
        if (m - static_cast<int>(r) >= 0 && m <= a) {
            Scalar msign = m % 2 == 0 ? 1 : p - 1;
            for (std::size_t col = 0; col < K.subsets[m].size(); ++col) {
                const auto& t = K.subsets[m][col];
                for (std::size_t si = 0; si < K.subsets[r].size(); ++si) {
                    if (!w.mu[si]) continue;
                    const auto& s = K.subsets[r][si];
                    /* need s subset of t */
                    std::vector<std::size_t> rest;
                    if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
                    std::set_difference(t.begin(), t.end(), s.begin(), s.end(),
                                        std::back_inserter(rest));
                    int sgn = shuffle_sign(s, rest);
                    AlgebraElement u = AlgebraElement::unit(K.A);
                    for (std::size_t i : s) u = u * K.lambda(i).pow(p - 1);
                    u = u.scaled((w.mu[si] * msign) % p);
                    if (sgn < 0) u = u.scaled(p - 1);
                    std::size_t row = tc + K.subset_index(rest);
                    block.at(row, col) = block.at(row, col) + u;
                }
            }
        }
        diffs.push_back(std::move(block));
    }
    return FreeComplex(K.A, Direction::cochain, 0, std::move(ranks), std::move(diffs));
}

std::vector<Scalar> ideal_class_coords(const KoszulComplex& K, const AlgebraElement& u) {
    const std::size_t n = K.A->size();
    const Subspace& I2 = K.A->ideal_power(2);
    Matrix system(K.A->p(), n, K.a + I2.dim());
    for (std::size_t i = 1; i <= K.a; ++i) {
        AlgebraElement lam = K.lambda(i);
        for (std::size_t g = 0; g < n; ++g) system.set(g, i - 1, lam[g]);
    }
    for (std::size_t j = 0; j < I2.dim(); ++j)
        for (std::size_t g = 0; g < n; ++g) system.set(g, K.a + j, I2.basis().at(j, g));
    auto sol = solve(system, u.coeffs());
    if (!sol) throw std::invalid_argument("ideal_class_coords: element is not in I");
    return std::vector<Scalar>(sol->begin(), sol->begin() + K.a);
}

PowerCycleClass class_of_power_cycle(const KoszulComplex& K, const AlgebraElement& lambda) {
    if (lambda.augmentation() != 0)
        throw std::invalid_argument("class_of_power_cycle: element is not in I");
    ExpandedComplex E = expand(K.complex);
    auto z = solve(E.diffs[0], lambda.coeffs());  // d z = lambda in K_0
    if (!z) throw std::logic_error("class_of_power_cycle: dz = lambda unsolvable");
    KChain zc = kchain_from_expanded(K, 1, *z);
    AlgebraElement lp = lambda.pow(K.A->p() - 1);
    for (auto& u : zc.c) u = lp * u;
    PowerCycleClass out;
    out.coords = homology_class(K, zc);
    out.predicted = ideal_class_coords(K, lambda);
    for (auto& v : out.predicted) v %= K.A->p();
    /* projective comparison; the (-1)^i convention in d(z_s) contributes a
       global unit to the solved chain */
    PrimeField F(K.A->p());
    out.unit = 1;
    Scalar found = 0;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        if (out.predicted[i]) {
            found = F.mul(out.coords[i], F.inv(out.predicted[i]));
            break;
        }
    if (found) out.unit = found;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        if (out.coords[i] != F.mul(out.unit, out.predicted[i]))
            throw std::logic_error("class_of_power_cycle: closed form fails projectively");
    return out;
}

GroupAut aut_from_matrix(const AlgebraPtr& A, const Matrix& M) {
    const std::size_t a = A->group().rank_a();
    const Scalar p = A->p();
    if (M.rows() != a || M.cols() != a || rank(M) != a)
        throw std::invalid_argument("aut_from_matrix: matrix is not invertible");
    GroupAut phi;
    phi.perm.resize(A->size());
    for (std::size_t g = 0; g < A->size(); ++g) {
        std::vector<Scalar> x(a);
        std::size_t gg = g;
        for (std::size_t i = 0; i < a; ++i) {
            x[i] = gg % p;
            gg /= p;
        }
        std::vector<Scalar> y = M.apply(x);
        std::size_t idx = 0, base = 1;
        for (std::size_t i = 0; i < a; ++i) {
            idx += (y[i] % p) * base;
            base *= p;
        }
        phi.perm[g] = idx;
    }
    if (!is_automorphism(A->group(), phi))
        throw std::logic_error("aut_from_matrix: result is not an automorphism");
    return phi;
}

ChainMap phi_iso(const KoszulComplex& K, const GroupAut& phi) {
    if (!is_automorphism(K.A->group(), phi)) throw std::invalid_argument("phi_iso: not an automorphism");
    const std::size_t n = K.A->size();
    GroupAut phinv = aut_inverse(phi);

    auto apply_inv = [&](const AlgebraElement& u) {
        std::vector<Scalar> c(n);
        for (std::size_t h = 0; h < n; ++h) c[h] = u[phi.perm[h]];
        return AlgebraElement(K.A, std::move(c));
    };

    /* solve phi^{-1}(lambda_i) = sum_j a_ji lambda_j; one fixed linear solve */
    Matrix system(K.A->p(), n, K.a * n);
    for (std::size_t j = 0; j < K.a; ++j) {
        Matrix Lj = K.lambda(j + 1).left_mult_matrix();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) system.set(r, j * n + c, Lj.at(r, c));
    }
    std::vector<std::vector<AlgebraElement>> aji(K.a);
    for (std::size_t i = 0; i < K.a; ++i) {
        auto sol = solve(system, apply_inv(K.lambda(i + 1)).coeffs());
        if (!sol) throw std::logic_error("phi_iso: lambda_i not in the ideal generated by lambdas");
        for (std::size_t j = 0; j < K.a; ++j)
            aji[i].push_back(AlgebraElement(
                K.A, std::vector<Scalar>(sol->begin() + j * n, sol->begin() + (j + 1) * n)));
    }

    ChainMap f;
    f.domain = restrict_scalars(K.complex, phi);
    f.codomain = K.complex;
    for (std::size_t m = 0; m <= K.a; ++m) {
        std::size_t rk = K.subsets[m].size();
        AlgMatrix block(K.A, rk, rk);
        for (std::size_t col = 0; col < rk; ++col) {
            const auto& s = K.subsets[m][col];
            KChain img = kchain_basis(K, {}, AlgebraElement::unit(K.A));
            for (std::size_t i : s) {
                KChain zi = kchain_zero(K, 1);
                for (std::size_t j = 0; j < K.a; ++j) zi.c[j] = aji[i - 1][j];
                img = wedge(K, img, zi);
            }
            for (std::size_t row = 0; row < rk; ++row) block.at(row, col) = img.c[row];
        }
        f.blocks.push_back(std::move(block));
    }
    if (!f.commutes()) throw std::logic_error("phi_iso: Phi does not commute with differentials");
    if (!f.augmentation_invertible()) throw std::logic_error("phi_iso: Phi is not invertible");
    (void)phinv;
    return f;
}

Matrix aut_action(const KoszulComplex& K, const GroupAut& phi) {
    ChainMap Phi = phi_iso(K, phi);
    const Scalar p = K.A->p();
    Matrix rho(p, K.a, K.a);
    for (std::size_t i = 0; i < K.a; ++i) {
        AlgebraElement lam_inv = [&] {
            std::vector<Scalar> c(K.A->size());
            AlgebraElement l = K.lambda(i + 1);
            for (std::size_t h = 0; h < K.A->size(); ++h) c[h] = l[phi.perm[h]];
            return AlgebraElement(K.A, std::move(c));
        }();
        AlgebraElement lp = lam_inv.pow(p - 1);
        /* Phi(lambda_i^{p-1} z_i) = phi^{-1}(lambda_i)^{p-1} Phi(z_i) */
        KChain img = kchain_zero(K, 1);
        const AlgMatrix& B1 = Phi.blocks[1];
        for (std::size_t j = 0; j < K.a; ++j) img.c[j] = lp * B1.at(j, i);
        std::vector<Scalar> cls = homology_class(K, img);
        for (std::size_t j = 0; j < K.a; ++j) rho.set(j, i, cls[j]);
        /* the diagram of the action: rho(phi) equals phi^{-1} on I/I^2 */
        std::vector<Scalar> expected = ideal_class_coords(K, lam_inv);
        for (std::size_t j = 0; j < K.a; ++j)
            if (cls[j] != expected[j])
                throw std::logic_error("aut_action: rho does not match phi^{-1} on I/I^2");
    }
    return rho;
}

}  // namespace augss

#include "augss/pgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace augss {

std::size_t PGroup::rank_a() const {
    std::size_t a = 0, n = size;
    while (n > 1) {
        if (n % p) throw std::invalid_argument("PGroup: order is not a power of p");
        n /= p;
        ++a;
    }
    return a;
}

void PGroup::validate() const {
    if (!is_prime(p)) throw std::invalid_argument("PGroup: p is not prime");
    rank_a();
    if (mul.size() != size) throw std::invalid_argument("PGroup: bad table size");
    for (const auto& row : mul) {
        if (row.size() != size) throw std::invalid_argument("PGroup: bad table row");
        for (std::size_t v : row)
            if (v >= size) throw std::invalid_argument("PGroup: table entry out of range");
    }
    for (std::size_t g = 0; g < size; ++g)
        if (mul[identity][g] != g || mul[g][identity] != g)
            throw std::invalid_argument("PGroup: identity fails");
    if (inverse.size() != size) throw std::invalid_argument("PGroup: bad inverse table");
    for (std::size_t g = 0; g < size; ++g)
        if (mul[g][inverse[g]] != identity || mul[inverse[g]][g] != identity)
            throw std::invalid_argument("PGroup: inverses fail");
    for (std::size_t g = 0; g < size; ++g)
        for (std::size_t h = 0; h < size; ++h)
            for (std::size_t k = 0; k < size; ++k)
                if (mul[mul[g][h]][k] != mul[g][mul[h][k]])
                    throw std::invalid_argument("PGroup: associativity fails");
}

namespace {

std::vector<std::size_t> inverses_from_table(const std::vector<std::vector<std::size_t>>& mul,
                                             std::size_t identity) {
    std::vector<std::size_t> inv(mul.size(), 0);
    for (std::size_t g = 0; g < mul.size(); ++g) {
        bool found = false;
        for (std::size_t h = 0; h < mul.size(); ++h)
            if (mul[g][h] == identity && mul[h][g] == identity) {
                inv[g] = h;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("group table: missing inverse");
    }
    return inv;
}

PGroup finish(Scalar p, std::vector<std::vector<std::size_t>> mul, std::string name) {
    PGroup g;
    g.p = p;
    g.size = mul.size();
    g.identity = 0;
    g.mul = std::move(mul);
    g.inverse = inverses_from_table(g.mul, 0);
    g.name = std::move(name);
    g.validate();
    return g;
}

Scalar smallest_prime_factor(std::size_t n) {
    for (Scalar d = 2; static_cast<std::size_t>(d) * d <= n; ++d)
        if (n % d == 0) return d;
    return static_cast<Scalar>(n);
}

}  // namespace

PGroup trivial_group(Scalar p) { return finish(p, {{0}}, "C1"); }

PGroup cyclic_group(std::size_t order) {
    if (order == 0) throw std::invalid_argument("cyclic_group: order zero");
    if (order == 1) throw std::invalid_argument("cyclic_group: use trivial_group");
    Scalar p = smallest_prime_factor(order);
    std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) mul[i][j] = (i + j) % order;
    return finish(p, std::move(mul), "C" + std::to_string(order));
}

PGroup elementary_abelian_group(Scalar p, std::size_t rank) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < rank; ++i) n *= p;
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            std::size_t out = 0, base = 1, gg = g, hh = h;
            for (std::size_t i = 0; i < rank; ++i) {
                out += ((gg % p + hh % p) % p) * base;
                gg /= p;
                hh /= p;
                base *= p;
            }
            mul[g][h] = out;
        }
    std::string name = rank == 0 ? "C1" : "C" + std::to_string(p) + "^" + std::to_string(rank);
    return finish(p, std::move(mul), name);
}

PGroup product_group(const PGroup& A, const PGroup& B) {
    if (A.p != B.p) throw std::invalid_argument("product_group: different primes");
    std::size_t n = A.size * B.size;
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            std::size_t ga = g % A.size, gb = g / A.size;
            std::size_t ha = h % A.size, hb = h / A.size;
            mul[g][h] = A.mul[ga][ha] + A.size * B.mul[gb][hb];
        }
    return finish(A.p, std::move(mul), A.name + "x" + B.name);
}

PGroup table_group(Scalar p, std::vector<std::vector<std::size_t>> table) {
    std::size_t n = table.size();
    std::size_t id = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g)
            ok = table[e][g] == g && table[g][e] == g;
        if (ok) { id = e; break; }
    }
    if (id == n) throw std::invalid_argument("table_group: no identity element");
    PGroup g;
    g.p = p;
    g.size = n;
    g.identity = id;
    g.mul = std::move(table);
    g.inverse = inverses_from_table(g.mul, id);
    g.name = "table" + std::to_string(n);
    g.validate();
    return g;
}

PGroup metacyclic_group(std::size_t n, std::size_t m, std::size_t s, std::size_t k) {
    if (n == 0 || m == 0) throw std::invalid_argument("metacyclic_group: zero parameter");
    std::size_t order = n * m;
    Scalar p = smallest_prime_factor(order);
    /* powers of k modulo n */
    std::vector<std::size_t> kp(m + 1, 1 % n);
    for (std::size_t j = 1; j <= m; ++j) kp[j] = (kp[j - 1] * k) % n;
    if (kp[m] != 1 % n) throw std::invalid_argument("metacyclic_group: k^m != 1 (mod n)");
    if ((s * k) % n != s % n) throw std::invalid_argument("metacyclic_group: s*k != s (mod n)");
    auto idx = [&](std::size_t i, std::size_t j) { return i + n * j; };
    std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < m; ++j2) {
                    std::size_t e = (i + i2 * kp[j]) % n;
                    std::size_t f = j + j2;
                    if (f >= m) {
                        e = (e + s) % n;
                        f -= m;
                    }
                    mul[idx(i, j)][idx(i2, j2)] = idx(e, f);
                }
    std::string name = "MC(" + std::to_string(n) + "," + std::to_string(m) + "," +
                       std::to_string(s) + "," + std::to_string(k) + ")";
    return finish(p, std::move(mul), name);
}

PGroup heisenberg_group(Scalar p) {
    std::size_t n = static_cast<std::size_t>(p) * p * p;
    auto idx = [&](std::size_t x, std::size_t y, std::size_t z) { return x + p * y + p * p * z; };
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            std::size_t x = g % p, y = (g / p) % p, z = g / (p * p);
            std::size_t x2 = h % p, y2 = (h / p) % p, z2 = h / (p * p);
            mul[g][h] = idx((x + x2) % p, (y + y2) % p, (z + z2 + x * y2) % p);
        }
    return finish(p, std::move(mul), "He" + std::to_string(p));
}

PGroup central_quotient(const PGroup& g, std::size_t z) {
    for (std::size_t h = 0; h < g.size; ++h)
        if (g.mul[z][h] != g.mul[h][z])
            throw std::invalid_argument("central_quotient: z is not central");
    std::vector<std::size_t> zpow;
    std::size_t cur = g.identity;
    do {
        zpow.push_back(cur);
        cur = g.mul[cur][z];
    } while (cur != g.identity);

    std::vector<std::size_t> coset_rep(g.size);
    for (std::size_t h = 0; h < g.size; ++h) {
        std::size_t rep = h;
        for (std::size_t zp : zpow) rep = std::min(rep, g.mul[h][zp]);
        coset_rep[h] = rep;
    }
    std::vector<std::size_t> reps;
    std::map<std::size_t, std::size_t> rep_index;
    for (std::size_t h = 0; h < g.size; ++h)
        if (coset_rep[h] == h) {
            rep_index[h] = reps.size();
            reps.push_back(h);
        }
    std::size_t n = reps.size();
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = rep_index.at(coset_rep[g.mul[reps[i]][reps[j]]]);
    /* identity coset contains g.identity which is minimal only if index 0;
       reindex so that the identity coset comes first */
    PGroup out = table_group(g.p, std::move(mul));
    out.name = g.name + "/Z";
    if (out.identity != 0) {
        /* swap labels 0 and identity */
        std::size_t e = out.identity;
        auto relabel = [&](std::size_t x) { return x == 0 ? e : (x == e ? std::size_t{0} : x); };
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t[relabel(i)][relabel(j)] = relabel(out.mul[i][j]);
        out = table_group(g.p, std::move(t));
        out.name = g.name + "/Z";
    }
    return out;
}

PGroup perm_group(Scalar p, std::size_t points,
                  const std::vector<std::vector<std::size_t>>& gens) {
    std::vector<std::size_t> id(points);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<std::size_t>> elems{id};
    std::map<std::vector<std::size_t>, std::size_t> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gperm : gens) {
            std::vector<std::size_t> comp(points);
            for (std::size_t x = 0; x < points; ++x) comp[x] = gperm[elems[head][x]];
            if (!index.count(comp)) {
                index[comp] = elems.size();
                elems.push_back(comp);
            }
        }
    }
    std::size_t n = elems.size();
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> comp(points);
            for (std::size_t x = 0; x < points; ++x) comp[x] = elems[i][elems[j][x]];
            mul[i][j] = index.at(comp);
        }
    PGroup out = table_group(p, std::move(mul));
    out.name = "perm" + std::to_string(n);
    return out;
}

std::vector<PGroup> small_group_catalog(Scalar p, std::size_t max_order) {
    std::vector<PGroup> out;
    auto want = [&](std::size_t n) { return n <= max_order; };
    out.push_back(trivial_group(p));
    if (want(p)) out.push_back(cyclic_group(p));
    std::size_t p2 = static_cast<std::size_t>(p) * p, p3 = p2 * p, p4 = p3 * p;
    if (want(p2)) {
        out.push_back(cyclic_group(p2));
        out.push_back(elementary_abelian_group(p, 2));
    }
    if (want(p3)) {
        out.push_back(cyclic_group(p3));
        out.push_back(product_group(cyclic_group(p2), cyclic_group(p)));
        out.push_back(elementary_abelian_group(p, 3));
        if (p == 2) {
            auto d4 = metacyclic_group(4, 2, 0, 3);
            d4.name = "D4";
            auto q8 = metacyclic_group(4, 2, 2, 3);
            q8.name = "Q8";
            out.push_back(d4);
            out.push_back(q8);
        } else {
            out.push_back(heisenberg_group(p));
            auto mc = metacyclic_group(p2, p, 0, 1 + p);
            mc.name = "C" + std::to_string(p2) + ":C" + std::to_string(p);
            out.push_back(mc);
        }
    }
    if (p == 2 && want(p4)) {
        out.push_back(cyclic_group(16));
        out.push_back(product_group(cyclic_group(8), cyclic_group(2)));
        out.push_back(product_group(cyclic_group(4), cyclic_group(4)));
        out.push_back(product_group(cyclic_group(4), elementary_abelian_group(2, 2)));
        out.push_back(elementary_abelian_group(2, 4));
        auto d16 = metacyclic_group(8, 2, 0, 7);
        d16.name = "D16";
        out.push_back(d16);
        auto sd16 = metacyclic_group(8, 2, 0, 3);
        sd16.name = "SD16";
        out.push_back(sd16);
        auto m16 = metacyclic_group(8, 2, 0, 5);
        m16.name = "M16";
        out.push_back(m16);
        auto q16 = metacyclic_group(8, 2, 4, 7);
        q16.name = "Q16";
        out.push_back(q16);
        auto c4c4 = metacyclic_group(4, 4, 0, 3);
        c4c4.name = "C4:C4";
        out.push_back(c4c4);
        auto d4 = metacyclic_group(4, 2, 0, 3);
        auto q8 = metacyclic_group(4, 2, 2, 3);
        out.push_back(product_group(d4, cyclic_group(2)));
        out.back().name = "D4xC2";
        out.push_back(product_group(q8, cyclic_group(2)));
        out.back().name = "Q8xC2";
        /* central product D4 * C4: quotient of D4 x C4 by <(a^2, c^2)> */
        auto pauli = central_quotient(product_group(d4, cyclic_group(4)), 2 + d4.size * 2);
        pauli.name = "D4*C4";
        out.push_back(pauli);
        /* (C2 x C2) : C4 with the swap action */
        auto g163 = perm_group(2, 8,
                               {{1, 0, 2, 3, 4, 5, 6, 7},
                                {0, 1, 3, 2, 4, 5, 6, 7},
                                {2, 3, 1, 0, 5, 6, 7, 4}});
        g163.name = "(C2xC2):C4";
        out.push_back(g163);
    }
    std::erase_if(out, [&](const PGroup& g) { return g.size > max_order; });
    return out;
}

bool is_automorphism(const PGroup& g, const GroupAut& phi) {
    if (phi.perm.size() != g.size) return false;
    std::vector<bool> seen(g.size, false);
    for (std::size_t x : phi.perm) {
        if (x >= g.size || seen[x]) return false;
        seen[x] = true;
    }
    for (std::size_t x = 0; x < g.size; ++x)
        for (std::size_t y = 0; y < g.size; ++y)
            if (phi.perm[g.mul[x][y]] != g.mul[phi.perm[x]][phi.perm[y]]) return false;
    return true;
}

GroupAut aut_compose(const GroupAut& f, const GroupAut& g) {
    GroupAut out;
    out.perm.resize(g.perm.size());
    for (std::size_t x = 0; x < g.perm.size(); ++x) out.perm[x] = f.perm[g.perm[x]];
    return out;
}

GroupAut aut_inverse(const GroupAut& f) {
    GroupAut out;
    out.perm.resize(f.perm.size());
    for (std::size_t x = 0; x < f.perm.size(); ++x) out.perm[f.perm[x]] = x;
    return out;
}

/* ------------------------------------------------------------------ */

AlgebraElement::AlgebraElement(AlgebraPtr A, std::vector<Scalar> coeffs)
    : A_(std::move(A)), c_(std::move(coeffs)) {
    if (c_.size() != A_->size()) throw std::invalid_argument("AlgebraElement: bad length");
    for (auto& v : c_) v %= A_->p();
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& A) {
    return AlgebraElement(A, std::vector<Scalar>(A->size(), 0));
}

AlgebraElement AlgebraElement::unit(const AlgebraPtr& A) {
    return group_element(A, A->group().identity);
}

AlgebraElement AlgebraElement::group_element(const AlgebraPtr& A, std::size_t g) {
    std::vector<Scalar> c(A->size(), 0);
    c.at(g) = 1;
    return AlgebraElement(A, std::move(c));
}

AlgebraElement AlgebraElement::lambda(const AlgebraPtr& A, std::size_t g) {
    return group_element(A, g) - unit(A);
}

AlgebraElement AlgebraElement::norm(const AlgebraPtr& A) {
    return AlgebraElement(A, std::vector<Scalar>(A->size(), 1));
}

bool AlgebraElement::is_zero() const {
    for (Scalar v : c_)
        if (v) return false;
    return true;
}

Scalar AlgebraElement::augmentation() const {
    Scalar s = 0;
    for (Scalar v : c_) s = (s + v) % A_->p();
    return s;
}

AlgebraElement AlgebraElement::bar() const {
    std::vector<Scalar> c(c_.size());
    for (std::size_t g = 0; g < c_.size(); ++g) c[g] = c_[A_->group().inverse[g]];
    return AlgebraElement(A_, std::move(c));
}

static void check_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b)) throw std::invalid_argument("algebra mismatch");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    check_same_algebra(A_, rhs.A_);
    std::vector<Scalar> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + rhs.c_[i]) % A_->p();
    return AlgebraElement(A_, std::move(c));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    check_same_algebra(A_, rhs.A_);
    std::vector<Scalar> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + A_->p() - rhs.c_[i]) % A_->p();
    return AlgebraElement(A_, std::move(c));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    check_same_algebra(A_, rhs.A_);
    const auto& mul = A_->group().mul;
    std::vector<Scalar> c(c_.size(), 0);
    for (std::size_t g = 0; g < c_.size(); ++g) {
        if (!c_[g]) continue;
        for (std::size_t h = 0; h < c_.size(); ++h) {
            if (!rhs.c_[h]) continue;
            std::size_t gh = mul[g][h];
            c[gh] = (c[gh] + c_[g] * rhs.c_[h]) % A_->p();
        }
    }
    return AlgebraElement(A_, std::move(c));
}

AlgebraElement AlgebraElement::scaled(Scalar s) const {
    std::vector<Scalar> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] * s) % A_->p();
    return AlgebraElement(A_, std::move(c));
}

AlgebraElement AlgebraElement::pow(std::size_t e) const {
    AlgebraElement r = unit(A_);
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
    if (!A_ || !rhs.A_) return !A_ && !rhs.A_;
    return A_->same_as(*rhs.A_) && c_ == rhs.c_;
}

Matrix AlgebraElement::left_mult_matrix() const {
    const auto& G = A_->group();
    Matrix m(A_->p(), G.size, G.size);
    for (std::size_t i = 0; i < G.size; ++i)
        for (std::size_t h = 0; h < G.size; ++h) m.set(i, h, c_[G.mul[i][G.inverse[h]]]);
    return m;
}

Matrix AlgebraElement::right_mult_matrix() const {
    const auto& G = A_->group();
    Matrix m(A_->p(), G.size, G.size);
    for (std::size_t i = 0; i < G.size; ++i)
        for (std::size_t g = 0; g < G.size; ++g) m.set(i, g, c_[G.mul[G.inverse[g]][i]]);
    return m;
}

AlgebraElement AlgebraElement::inverse() const {
    PrimeField F(A_->p());
    Scalar c = augmentation();
    if (!c) throw std::domain_error("AlgebraElement: not a unit (augmentation zero)");
    Scalar cinv = F.inv(c);
    /* u = c(1 - n) with n nilpotent; u^{-1} = c^{-1} (1 + n + n^2 + ...) */
    AlgebraElement n = unit(A_) - scaled(cinv);
    AlgebraElement acc = unit(A_), term = unit(A_);
    for (std::size_t k = 0; k < A_->L(); ++k) {
        term = term * n;
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc.scaled(cinv);
}

/* ------------------------------------------------------------------ */

namespace {

/* raw convolution used during construction, before the shared_ptr exists */
std::vector<Scalar> raw_mul(const PGroup& G, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b) {
    std::vector<Scalar> c(G.size, 0);
    for (std::size_t g = 0; g < G.size; ++g) {
        if (!a[g]) continue;
        for (std::size_t h = 0; h < G.size; ++h) {
            if (!b[h]) continue;
            std::size_t gh = G.mul[g][h];
            c[gh] = (c[gh] + a[g] * b[h]) % G.p;
        }
    }
    return c;
}

std::vector<Scalar> raw_lambda(const PGroup& G, std::size_t g) {
    std::vector<Scalar> v(G.size, 0);
    v[g] = (v[g] + 1) % G.p;
    v[G.identity] = (v[G.identity] + G.p - 1) % G.p;
    return v;
}

/* subgroup generated by a set, as a sorted element list */
std::vector<std::size_t> closure(const PGroup& G, std::vector<std::size_t> gens) {
    std::set<std::size_t> seen{G.identity};
    std::vector<std::size_t> work{G.identity};
    for (std::size_t head = 0; head < work.size(); ++head)
        for (std::size_t g : gens) {
            std::size_t x = G.mul[work[head]][g];
            if (seen.insert(x).second) work.push_back(x);
        }
    return {seen.begin(), seen.end()};
}

}  // namespace

AlgebraPtr GroupAlgebra::make(PGroup g) {
    g.validate();
    auto A = std::shared_ptr<GroupAlgebra>(new GroupAlgebra());
    A->group_ = std::move(g);
    A->build();
    return A;
}

void GroupAlgebra::build() {
    const PGroup& G = group_;
    const std::size_t n = G.size;
    zero_space_ = Subspace::zero(G.p, n);

    /* ideal power chain: I^0 = F_pG, I generated by {g-1}, then products */
    ideals_.powers.clear();
    ideals_.powers.push_back(Subspace::full(G.p, n));
    {
        std::vector<std::vector<Scalar>> gens;
        for (std::size_t g = 0; g < n; ++g)
            if (g != G.identity) gens.push_back(raw_lambda(G, g));
        Subspace I(G.p, n, Matrix::from_rows(G.p, n, gens));
        while (ideals_.powers.back().dim() > 0) {
            ideals_.powers.push_back(I);
            if (I.dim() == 0) break;
            const Subspace& prev = I;
            std::vector<std::vector<Scalar>> next;
            for (std::size_t g = 0; g < n; ++g) {
                if (g == G.identity) continue;
                std::vector<Scalar> lam = raw_lambda(G, g);
                for (std::size_t i = 0; i < prev.dim(); ++i)
                    next.push_back(raw_mul(G, lam, prev.basis().row(i)));
            }
            I = Subspace(G.p, n, Matrix::from_rows(G.p, n, next));
        }
    }
    ideals_.L = ideals_.powers.size() - 2;  // last index with nonzero power

    /* strictly decreasing dimensions until zero */
    for (std::size_t k = 0; k + 1 < ideals_.powers.size(); ++k)
        if (ideals_.powers[k].dim() <= ideals_.powers[k + 1].dim() &&
            ideals_.powers[k].dim() != 0)
            throw std::logic_error("GroupAlgebra: ideal chain not strictly decreasing");

    /* Jennings filtration G_i = {g | g-1 in I^i} */
    const std::size_t L = ideals_.L;
    jennings_.subgroups.clear();
    for (std::size_t i = 1; i <= L + 1; ++i) {
        std::vector<std::size_t> gi;
        for (std::size_t g = 0; g < n; ++g)
            if (ideal_power(i).contains(raw_lambda(G, g))) gi.push_back(g);
        jennings_.subgroups.push_back(std::move(gi));
    }
    if (jennings_.subgroups.back().size() != 1)
        throw std::logic_error("GroupAlgebra: G_{L+1} is not trivial");

    /* basis: within each level pick coset representatives of smallest index,
       greedily extending an independent set */
    jennings_.basis.clear();
    jennings_.alpha.clear();
    for (std::size_t i = 1; i <= L; ++i) {
        const auto& gi = jennings_.subgroups[i - 1];
        const auto& gi1 = jennings_.subgroups[i];
        std::vector<std::size_t> chosen = gi1;
        std::vector<std::size_t> sub = closure(G, chosen);
        for (std::size_t g : gi) {
            if (std::binary_search(sub.begin(), sub.end(), g)) continue;
            jennings_.basis.push_back(g);
            jennings_.alpha.push_back(i);
            chosen.push_back(g);
            sub = closure(G, chosen);
        }
    }
    const std::size_t a = G.rank_a();
    if (jennings_.basis.size() != a)
        throw std::logic_error("GroupAlgebra: Jennings basis has wrong length");

    /* L = (p-1) sum alpha(i) */
    std::size_t alpha_sum = 0;
    for (std::size_t d : jennings_.alpha) alpha_sum += d;
    if (L != static_cast<std::size_t>(G.p - 1) * alpha_sum)
        throw std::logic_error("GroupAlgebra: L != (p-1) * sum alpha");

    /* normal forms by exhaustive factorization g = f_1^{x_1} ... f_a^{x_a} */
    jennings_.normal_form.assign(n, {});
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < a; ++i) tuples *= G.p;
    std::vector<bool> hit(n, false);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<Scalar> x(a);
        std::size_t tt = t;
        for (std::size_t i = 0; i < a; ++i) {
            x[i] = tt % G.p;
            tt /= G.p;
        }
        std::size_t g = G.identity;
        for (std::size_t i = 0; i < a; ++i)
            for (Scalar e = 0; e < x[i]; ++e) g = G.mul[g][jennings_.basis[i]];
        if (hit[g]) throw std::logic_error("GroupAlgebra: normal form is not unique");
        hit[g] = true;
        jennings_.normal_form[g] = std::move(x);
    }

    /* monomial basis theorem: {prod (f_i-1)^{x_i} | sum alpha x >= k} spans I^k */
    std::vector<std::vector<Scalar>> monomials(tuples);
    std::vector<std::size_t> mono_degree(tuples);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<Scalar> v(n, 0);
        v[G.identity] = 1;
        std::size_t tt = t, deg = 0;
        for (std::size_t i = 0; i < a; ++i) {
            Scalar xi = tt % G.p;
            tt /= G.p;
            deg += xi * jennings_.alpha[i];
            for (Scalar e = 0; e < xi; ++e) v = raw_mul(G, v, raw_lambda(G, jennings_.basis[i]));
        }
        monomials[t] = std::move(v);
        mono_degree[t] = deg;
    }
    for (std::size_t k = 0; k <= L + 1; ++k) {
        std::vector<std::vector<Scalar>> span;
        for (std::size_t t = 0; t < tuples; ++t)
            if (mono_degree[t] >= k) span.push_back(monomials[t]);
        Subspace s(G.p, n, Matrix::from_rows(G.p, n, span));
        if (!(s == ideal_power(k)))
            throw std::logic_error("GroupAlgebra: Jennings monomial basis fails for I^k");
    }
}

const Subspace& GroupAlgebra::ideal_power(std::size_t k) const {
    if (k < ideals_.powers.size()) return ideals_.powers[k];
    return zero_space_;
}

Subspace GroupAlgebra::annihilator(std::size_t k) const {
    const Subspace& ik = ideal_power(k);
    if (ik.dim() == 0) return Subspace::full(p(), size());
    Matrix stacked(p(), 0, size());
    for (std::size_t i = 0; i < ik.dim(); ++i) {
        AlgebraElement y(shared_from_this(), ik.basis().row(i));
        stacked = i == 0 ? y.left_mult_matrix() : vstack(stacked, y.left_mult_matrix());
    }
    return kernel(stacked);
}

std::size_t GroupAlgebra::jennings_degree(std::size_t g) const {
    if (g == group_.identity) return 0;
    std::vector<Scalar> lam(size(), 0);
    lam[g] = 1;
    lam[group_.identity] = p() - 1;
    std::size_t deg = 0;
    for (std::size_t i = 1; i <= L(); ++i)
        if (ideal_power(i).contains(lam)) deg = i;
    return deg;
}

AlgebraElement GroupAlgebra::jennings_monomial(const std::vector<Scalar>& exps) const {
    if (exps.size() != jennings_.basis.size())
        throw std::invalid_argument("jennings_monomial: wrong arity");
    AlgebraPtr self = shared_from_this();
    AlgebraElement v = AlgebraElement::unit(self);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        AlgebraElement lam = AlgebraElement::lambda(self, jennings_.basis[i]);
        for (Scalar e = 0; e < exps[i] % p(); ++e) v = v * lam;
    }
    return v;
}

std::size_t GroupAlgebra::element_from_exponents(const std::vector<Scalar>& exps) const {
    if (exps.size() != jennings_.basis.size())
        throw std::invalid_argument("element_from_exponents: wrong arity");
    std::size_t g = group_.identity;
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (Scalar e = 0; e < exps[i] % p(); ++e) g = group_.mul[g][jennings_.basis[i]];
    return g;
}

bool GroupAlgebra::same_as(const GroupAlgebra& other) const {
    if (this == &other) return true;
    return group_.p == other.group_.p && group_.mul == other.group_.mul;
}

std::size_t jennings_monomial_count(const JenningsData& j, Scalar p, std::size_t k) {
    std::size_t a = j.alpha.size(), tuples = 1;
    for (std::size_t i = 0; i < a; ++i) tuples *= p;
    std::size_t count = 0;
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t tt = t, deg = 0;
        for (std::size_t i = 0; i < a; ++i) {
            deg += (tt % p) * j.alpha[i];
            tt /= p;
        }
        if (deg == k) ++count;
    }
    return count;
}

}  // namespace augss

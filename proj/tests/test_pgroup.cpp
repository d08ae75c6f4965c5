#include <doctest.h>

#include <map>
#include <set>

#include "augss/pgroup.hpp"

using namespace augss;

namespace {

/* isomorphism invariants used to tell catalog entries apart */
struct GroupInvariants {
    std::map<std::size_t, std::size_t> order_profile;
    std::size_t center = 0;
    std::size_t derived = 0;
    std::size_t squares = 0;  // size of {x^2 | x in G}

    bool operator<(const GroupInvariants& rhs) const {
        return std::tie(order_profile, center, derived, squares) <
               std::tie(rhs.order_profile, rhs.center, rhs.derived, rhs.squares);
    }
};

std::size_t element_order(const PGroup& g, std::size_t x) {
    std::size_t cur = x, n = 1;
    while (cur != g.identity) {
        cur = g.mul[cur][x];
        ++n;
    }
    return n;
}

GroupInvariants invariants(const PGroup& g) {
    GroupInvariants inv;
    for (std::size_t x = 0; x < g.size; ++x) ++inv.order_profile[element_order(g, x)];
    for (std::size_t x = 0; x < g.size; ++x) {
        bool central = true;
        for (std::size_t y = 0; y < g.size && central; ++y)
            central = g.mul[x][y] == g.mul[y][x];
        if (central) ++inv.center;
    }
    std::set<std::size_t> comms;
    for (std::size_t x = 0; x < g.size; ++x)
        for (std::size_t y = 0; y < g.size; ++y)
            comms.insert(g.mul[g.mul[x][y]][g.inverse[g.mul[y][x]]]);
    /* closure of the commutators */
    std::set<std::size_t> der{g.identity};
    std::vector<std::size_t> work{g.identity};
    for (std::size_t head = 0; head < work.size(); ++head)
        for (std::size_t c : comms) {
            std::size_t z = g.mul[work[head]][c];
            if (der.insert(z).second) work.push_back(z);
        }
    inv.derived = der.size();
    std::set<std::size_t> sq;
    for (std::size_t x = 0; x < g.size; ++x) sq.insert(g.mul[x][x]);
    inv.squares = sq.size();
    return inv;
}

}  // namespace

TEST_SUITE("pgroup") {

TEST_CASE("structured constructors") {
    CHECK(elementary_abelian_group(2, 2).size == 4);
    CHECK(cyclic_group(8).size == 8);
    CHECK(cyclic_group(8).p == 2);
    CHECK(product_group(cyclic_group(2), cyclic_group(4)).size == 8);
    CHECK_THROWS_AS(cyclic_group(6), std::invalid_argument);  // not a prime power
    CHECK_THROWS_AS(table_group(2, {{0, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("algebra multiplication") {
    auto A = GroupAlgebra::make(cyclic_group(2));
    AlgebraElement lam = AlgebraElement::lambda(A, 1);
    CHECK((lam * lam).is_zero());  // (g-1)^2 = 0 for p = 2, order 2

    auto B = GroupAlgebra::make(elementary_abelian_group(2, 2));
    AlgebraElement l1 = AlgebraElement::lambda(B, 1);  // f_1 - 1
    AlgebraElement l2 = AlgebraElement::lambda(B, 2);  // f_2 - 1
    /* (f_1 - 1)(f_2 - 1) = f_1 f_2 + f_1 + f_2 + 1 over F_2 */
    AlgebraElement expected(B, {1, 1, 1, 1});
    CHECK(l1 * l2 == expected);

    AlgebraElement N = AlgebraElement::norm(B);
    CHECK((N * l1).is_zero());
    CHECK((N * l2).is_zero());
    CHECK_THROWS_AS(l1 * lam, std::invalid_argument);
}

TEST_CASE("augmentation is a ring map") {
    auto A = GroupAlgebra::make(metacyclic_group(4, 2, 2, 3));  // Q8
    PrimeField F(2);
    AlgebraElement x(A, {1, 0, 1, 1, 0, 1, 0, 0});
    AlgebraElement y(A, {0, 1, 1, 0, 1, 0, 0, 1});
    CHECK((x * y).augmentation() == F.mul(x.augmentation(), y.augmentation()));
}

TEST_CASE("ideal chain dimensions") {
    auto A = GroupAlgebra::make(elementary_abelian_group(2, 2));
    CHECK(A->L() == 2);
    CHECK(A->ideal_power(0).dim() == 4);
    CHECK(A->ideal_power(1).dim() == 3);
    CHECK(A->ideal_power(2).dim() == 1);
    CHECK(A->ideal_power(3).dim() == 0);

    /* Z/4 over F_2: dims 4,3,2,1,0, cross-checked against powers of t-1 */
    auto B = GroupAlgebra::make(cyclic_group(4));
    CHECK(B->L() == 3);
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= 4; ++k) dims.push_back(B->ideal_power(k).dim());
    CHECK(dims == std::vector<std::size_t>{4, 3, 2, 1, 0});
    AlgebraElement t1 = AlgebraElement::lambda(B, 1);
    AlgebraElement pw = AlgebraElement::unit(B);
    for (std::size_t k = 1; k <= 3; ++k) {
        pw = pw * t1;
        CHECK(B->ideal_power(k).contains(pw.coeffs()));
        CHECK_FALSE(B->ideal_power(k + 1).contains(pw.coeffs()));
    }

    CHECK(GroupAlgebra::make(elementary_abelian_group(3, 2))->L() == 4);
}

TEST_CASE("jennings data") {
    auto A = GroupAlgebra::make(cyclic_group(8));
    const JenningsData& J = A->jennings();
    CHECK(A->L() == 7);
    CHECK(J.alpha == std::vector<std::size_t>{1, 2, 4});
    /* G_2 = <t^2>, G_3 = G_4 = <t^4>, G_5 = 1 */
    CHECK(J.subgroups[1] == std::vector<std::size_t>{0, 2, 4, 6});
    CHECK(J.subgroups[2] == std::vector<std::size_t>{0, 4});
    CHECK(J.subgroups[3] == std::vector<std::size_t>{0, 4});
    CHECK(J.subgroups[4] == std::vector<std::size_t>{0});
    CHECK(J.basis == std::vector<std::size_t>{1, 2, 4});

    auto B = GroupAlgebra::make(elementary_abelian_group(3, 2));
    CHECK(B->jennings().subgroups[1] == std::vector<std::size_t>{0});
    CHECK(B->jennings().alpha == std::vector<std::size_t>{1, 1});

    auto C = GroupAlgebra::make(cyclic_group(4));
    CHECK(C->jennings().alpha == std::vector<std::size_t>{1, 2});
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(C->ideal_power(k).dim() - C->ideal_power(k + 1).dim() == 1);
}

TEST_CASE("jennings normal form is a bijection and counts graded dimensions") {
    for (const PGroup& g : small_group_catalog(2, 16)) {
        auto A = GroupAlgebra::make(g);
        const JenningsData& J = A->jennings();
        std::set<std::vector<Scalar>> forms(J.normal_form.begin(), J.normal_form.end());
        CHECK(forms.size() == g.size);
        for (std::size_t k = 0; k <= A->L(); ++k)
            CHECK(A->ideal_power(k).dim() - A->ideal_power(k + 1).dim() ==
                  jennings_monomial_count(J, g.p, k));
    }
}

TEST_CASE("annihilators and Hill's identity") {
    auto A = GroupAlgebra::make(elementary_abelian_group(2, 2));
    CHECK(A->annihilator(1) == A->ideal_power(2));
    CHECK(A->annihilator(1).dim() == 1);
    CHECK(A->annihilator(A->L() + 1) == Subspace::full(2, 4));

    auto B = GroupAlgebra::make(cyclic_group(4));
    CHECK(B->annihilator(2) == B->ideal_power(2));
    CHECK(B->annihilator(2).dim() == 2);
}

TEST_CASE("Hill's identity over the full catalog") {
    for (Scalar p : {2u, 3u}) {
        std::size_t max_order = p == 2 ? 16 : 27;
        for (const PGroup& g : small_group_catalog(p, max_order)) {
            auto A = GroupAlgebra::make(g);
            for (std::size_t k = 0; k <= A->L() + 1; ++k)
                CHECK(A->annihilator(k) == A->ideal_power(A->L() + 1 - k));
        }
    }
}

TEST_CASE("catalog is complete and pairwise non-isomorphic") {
    auto groups2 = small_group_catalog(2, 16);
    std::map<std::size_t, std::size_t> count;
    for (const auto& g : groups2) ++count[g.size];
    CHECK(count[2] == 1);
    CHECK(count[4] == 2);
    CHECK(count[8] == 5);
    CHECK(count[16] == 14);
    std::set<GroupInvariants> seen;
    for (const auto& g : groups2)
        if (g.size == 16) CHECK(seen.insert(invariants(g)).second);
    CHECK(seen.size() == 14);

    auto groups3 = small_group_catalog(3, 27);
    std::map<std::size_t, std::size_t> count3;
    for (const auto& g : groups3) ++count3[g.size];
    CHECK(count3[3] == 1);
    CHECK(count3[9] == 2);
    CHECK(count3[27] == 5);
    std::set<GroupInvariants> seen3;
    for (const auto& g : groups3)
        if (g.size == 27) CHECK(seen3.insert(invariants(g)).second);
    CHECK(seen3.size() == 5);
}

TEST_CASE("L equals (p-1) sum alpha across the catalog") {
    for (Scalar p : {2u, 3u})
        for (const PGroup& g : small_group_catalog(p, p == 2 ? 16 : 27)) {
            auto A = GroupAlgebra::make(g);
            std::size_t s = 0;
            for (std::size_t d : A->jennings().alpha) s += d;
            CHECK(A->L() == (p - 1) * s);
        }
}

TEST_CASE("algebra units invert") {
    auto A = GroupAlgebra::make(cyclic_group(4));
    AlgebraElement u(A, {1, 1, 0, 0});  // 1 + t, augmentation 2... zero mod 2
    CHECK_THROWS_AS(u.inverse(), std::domain_error);
    AlgebraElement v(A, {1, 1, 1, 0});
    CHECK(v.inverse() * v == AlgebraElement::unit(A));
}

}  // TEST_SUITE

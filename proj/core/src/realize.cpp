#include "augss/realize.hpp"

#include <stdexcept>

namespace augss {

FreeComplex torus_complex(Scalar p, std::size_t a) { return build_koszul(p, a).complex; }

FreeComplex lens_complex(Scalar p) {
    AlgebraPtr A = GroupAlgebra::make(cyclic_group(p));
    AlgebraElement lam = AlgebraElement::lambda(A, 1);
    std::vector<AlgMatrix> diffs;
    for (int i = 0; i < 3; ++i) {
        AlgMatrix d(A, 1, 1);
        d.at(0, 0) = i == 1 ? lam.pow(p - 1) : lam;
        diffs.push_back(std::move(d));
    }
    return FreeComplex(A, Direction::chain, 0, {1, 1, 1, 1}, std::move(diffs));
}

FreeComplex sphere_times_torus(Scalar p, std::size_t a, std::size_t r) {
    AlgebraPtr T = GroupAlgebra::make(trivial_group(p));
    std::vector<std::size_t> ranks(r + 2, 0);
    ranks.front() = 1;
    ranks.back() = 1;
    std::vector<AlgMatrix> diffs(r + 1);
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i)
        diffs[i] = AlgMatrix(T, ranks[i], ranks[i + 1]);
    FreeComplex sphere(T, Direction::chain, 0, std::move(ranks), std::move(diffs));
    FreeComplex prod = tensor(sphere, torus_complex(p, a));
    return relabel_algebra(prod, GroupAlgebra::make(elementary_abelian_group(p, a)));
}

FreeComplex s3_times_torus(Scalar p, std::size_t a) {
    if (a < 1) throw std::invalid_argument("s3_times_torus: a >= 1 required");
    FreeComplex prod = tensor(lens_complex(p), torus_complex(p, a - 1));
    return relabel_algebra(prod, GroupAlgebra::make(elementary_abelian_group(p, a)));
}

namespace {

/* coordinates of u + I^2 in the lambda basis (Jennings generators) */
std::vector<Scalar> lambda_coords(const AlgebraPtr& A, const AlgebraElement& u) {
    const std::size_t n = A->size();
    const std::size_t a = A->jennings().basis.size();
    const Subspace& I2 = A->ideal_power(2);
    Matrix system(A->p(), n, a + I2.dim());
    for (std::size_t i = 0; i < a; ++i) {
        AlgebraElement lam = AlgebraElement::lambda(A, A->jennings().basis[i]);
        for (std::size_t g = 0; g < n; ++g) system.set(g, i, lam[g]);
    }
    for (std::size_t j = 0; j < I2.dim(); ++j)
        for (std::size_t g = 0; g < n; ++g) system.set(g, a + j, I2.basis().at(j, g));
    auto sol = solve(system, u.coeffs());
    if (!sol) throw std::invalid_argument("lambda_coords: element is not in I");
    return std::vector<Scalar>(sol->begin(), sol->begin() + a);
}

}  // namespace

GroupAut choose_automorphism(const AlgebraPtr& A, const std::vector<Scalar>& mu) {
    const std::size_t a = A->group().rank_a();
    const Scalar p = A->p();
    if (mu.size() != a) throw std::invalid_argument("choose_automorphism: bad mu length");
    std::size_t lead = a;
    for (std::size_t i = 0; i < a && lead == a; ++i)
        if (mu[i] % p) lead = i;
    if (lead == a) throw std::invalid_argument("choose_automorphism: mu = 0");

    /* first column mu; the remaining columns are the standard vectors with
       the pivot index left out */
    Matrix M(p, a, a);
    for (std::size_t i = 0; i < a; ++i) M.set(i, 0, mu[i]);
    std::size_t col = 1;
    for (std::size_t i = 0; i < a; ++i) {
        if (i == lead) continue;
        M.set(i, col, 1);
        ++col;
    }
    GroupAut phi = aut_from_matrix(A, M);

    /* phi(lambda_1) = sum mu_i lambda_i mod I^2 */
    std::size_t f1 = A->jennings().basis[0];
    AlgebraElement img = AlgebraElement::lambda(A, phi.perm[f1]);
    std::vector<Scalar> got = lambda_coords(A, img);
    for (std::size_t i = 0; i < a; ++i)
        if (got[i] != mu[i] % p)
            throw std::logic_error("choose_automorphism: class of phi(lambda_1) is wrong");
    return phi;
}

ChainMap s3_cone_identification(const KoszulComplex& K) {
    const Scalar p = K.A->p();
    const std::size_t a = K.a;
    FreeComplex T = relabel_algebra(s3_times_torus(p, a), K.A);
    std::vector<Scalar> mu(a, 0);
    mu[0] = 1;
    FreeComplex C = build_cone(K, cycle_from_mu(K, 1, mu));

    KoszulComplex Kp = build_koszul(p, a - 1);
    ChainMap f;
    f.domain = T;
    f.codomain = C;
    for (int m = T.min_degree(); m <= T.max_degree(); ++m) {
        AlgMatrix block(K.A, C.rank(m), T.rank(m));
        /* T_m basis: lens degree i (0..3), then subsets t of {1..a-1} with
           |t| = m - i; target basis: z_u of K_m, then z_u of K_{m-2} */
        std::size_t colbase = 0;
        for (int i = 0; i <= 3; ++i) {
            int td = m - i;
            if (td < 0 || td > static_cast<int>(a) - 1) continue;
            const auto& list = Kp.subsets[td];
            for (std::size_t t = 0; t < list.size(); ++t) {
                std::vector<std::size_t> shifted;
                for (std::size_t x : list[t]) shifted.push_back(x + 1);
                std::vector<std::size_t> u = shifted;
                if (i % 2 == 1) u.insert(u.begin(), 1);
                std::size_t row = K.subset_index(u);
                if (i >= 2 && m >= 0 && m <= static_cast<int>(a))
                    row += K.subsets[m].size();
                Scalar sign = i % 2 == 0 ? 1 : p - 1;
                block.at(row, colbase + t) = AlgebraElement::unit(K.A).scaled(sign);
            }
            colbase += list.size();
        }
        f.blocks.push_back(std::move(block));
    }
    if (!f.commutes())
        throw std::logic_error("s3_cone_identification: map does not commute");
    if (!f.augmentation_invertible())
        throw std::logic_error("s3_cone_identification: map is not invertible");
    return f;
}

ChainMap cone_comparison_iso(const KoszulComplex& K, const KChain& b,
                             const FreeComplex& from_cone, const FreeComplex& to_cone) {
    /* (x, y) -> (x - b ^ y, y) on Cone_m = K_m + K_{m-r-1} */
    const std::size_t r = static_cast<std::size_t>(b.degree) - 1;
    ChainMap f;
    f.domain = from_cone;
    f.codomain = to_cone;
    for (int m = from_cone.min_degree(); m <= from_cone.max_degree(); ++m) {
        AlgMatrix block = AlgMatrix::identity(K.A, from_cone.rank(m));
        int yd = m - static_cast<int>(r) - 1;
        if (yd >= 0 && yd <= static_cast<int>(K.a) && m <= static_cast<int>(K.a)) {
            std::size_t xoff = K.subsets[m].size();
            for (std::size_t j = 0; j < K.subsets[yd].size(); ++j) {
                KChain img = wedge(K, b, kchain_basis(K, K.subsets[yd][j],
                                                      AlgebraElement::unit(K.A)));
                for (std::size_t i = 0; i < img.c.size(); ++i)
                    block.at(i, xoff + j) =
                        block.at(i, xoff + j) - img.c[i];
            }
        }
        f.blocks.push_back(std::move(block));
    }
    if (!f.commutes()) throw std::logic_error("cone_comparison_iso: map does not commute");
    return f;
}

RealizationResult realize_cone(const KoszulComplex& K, const KoszulCycle& w) {
    const Scalar p = K.A->p();
    const std::size_t a = K.a;
    RealizationResult out;

    FreeComplex cone_w = build_cone(K, w);
    out.cone_homology = homology(cone_w).dims;
    out.cone_minimal_profile = minimize(cone_w).profile;

    auto finish_model = [&](FreeComplex model, std::string name, ChainMap cert) {
        out.model_homology = homology(model).dims;
        out.model_minimal_profile = minimize(model).profile;
        if (!cert.commutes() || !cert.augmentation_invertible())
            throw std::logic_error("realize_cone: certificate failed verification");
        if (out.model_homology != out.cone_homology ||
            out.model_minimal_profile != out.cone_minimal_profile)
            throw std::logic_error("realize_cone: necessary conditions failed");
        out.verdict = Verdict::Realized;
        out.model_name = std::move(name);
        out.model = std::move(model);
        out.certificate = std::move(cert);
    };

    if (w.class_is_zero()) {
        FreeComplex model = relabel_algebra(sphere_times_torus(p, a, w.r), K.A);
        FreeComplex cone0 = build_cone(K, cycle_from_mu(K, w.r, std::vector<Scalar>(
                                                                   K.subsets[w.r].size(), 0)));
        if (!(model == cone0))
            throw std::logic_error("realize_cone: sphere model is not the zero cone");
        ChainMap cert;
        if (w.raw && w.correction) {
            cert = cone_comparison_iso(K, w.correction->scaled(p - 1), cone0, cone_w);
            cert.domain = model;
        } else {
            cert = identity_map(cone_w);
        }
        finish_model(std::move(model),
                     "S^" + std::to_string(w.r + 1) + " x T^" + std::to_string(a),
                     std::move(cert));
        return out;
    }

    if (w.r == 0) {
        for (std::size_t d : out.cone_homology)
            if (d) throw std::logic_error("realize_cone: unit cone is not contractible");
        out.verdict = Verdict::EmptySpace;
        out.model_name = "empty space";
        return out;
    }

    if (w.r == 1) {
        /* choose psi with psi(lambda_1) = sum mu_i lambda_i mod I^2 and pull
           the action back along phi = psi^{-1}, so phi^{-1} hits the class */
        GroupAut psi = choose_automorphism(K.A, w.mu);
        GroupAut phi = aut_inverse(psi);

        ChainMap iso1 = s3_cone_identification(K);
        ChainMap Phi = phi_iso(K, phi);
        FreeComplex model = restrict_scalars(iso1.domain, phi);
        ChainMap iso1_tw = restrict_scalars(iso1, phi);

        /* Phi applied blockwise to the cone; the image cone multiplies by
           w' = Phi(lambda_1^{p-1} z_1 viewed in phi^* K) */
        AlgebraElement lam1_inv = [&] {
            AlgebraElement l = K.lambda(1);
            std::vector<Scalar> c(K.A->size());
            for (std::size_t h = 0; h < K.A->size(); ++h) c[h] = l[phi.perm[h]];
            return AlgebraElement(K.A, std::move(c));
        }();
        KChain wprime = kchain_zero(K, 1);
        for (std::size_t j = 0; j < a; ++j)
            wprime.c[j] = Phi.blocks[1].at(j, 0) * lam1_inv.pow(p - 1);
        if (!is_cycle(K, wprime)) throw std::logic_error("realize_cone: w' is not a cycle");
        KoszulCycle nw = normalize_cycle(K, wprime);
        if (nw.mu != w.mu) throw std::logic_error("realize_cone: w' has the wrong class");

        FreeComplex cone_wprime = cone(multiplication_map(K, wprime));
        ChainMap phi_cone;
        phi_cone.domain = iso1_tw.codomain;
        phi_cone.codomain = cone_wprime;
        for (int m = phi_cone.domain.min_degree(); m <= phi_cone.domain.max_degree(); ++m) {
            AlgMatrix block(K.A, phi_cone.codomain.rank(m), phi_cone.domain.rank(m));
            auto put = [&](const AlgMatrix& B, std::size_t ro, std::size_t co) {
                for (std::size_t i = 0; i < B.rows; ++i)
                    for (std::size_t j = 0; j < B.cols; ++j) block.at(ro + i, co + j) = B.at(i, j);
            };
            std::size_t first = m >= 0 && m <= static_cast<int>(a) ? K.subsets[m].size() : 0;
            if (first) put(Phi.blocks[m], 0, 0);
            if (m - 2 >= 0 && m - 2 <= static_cast<int>(a))
                put(Phi.blocks[m - 2], first, first);
            phi_cone.blocks.push_back(std::move(block));
        }
        if (!phi_cone.commutes())
            throw std::logic_error("realize_cone: Phi does not map the twisted cone");

        ChainMap chain = phi_cone.compose(iso1_tw);
        FreeComplex cone_n = build_cone(K, cycle_from_mu(K, 1, w.mu));
        if (nw.correction) {
            ChainMap iso3 = cone_comparison_iso(K, *nw.correction, cone_wprime, cone_n);
            chain = iso3.compose(chain);
        } else if (!(cone_wprime == cone_n)) {
            throw std::logic_error("realize_cone: normal cones disagree");
        } else {
            chain.codomain = cone_n;
        }
        if (w.raw && w.correction) {
            ChainMap iso4 = cone_comparison_iso(K, w.correction->scaled(p - 1), cone_n, cone_w);
            chain = iso4.compose(chain);
        } else if (!(cone_n == cone_w)) {
            throw std::logic_error("realize_cone: cone over the normal form is not cone_w");
        } else {
            chain.codomain = cone_w;
        }
        finish_model(std::move(model), "S^3 x T^" + std::to_string(a - 1) + " (action twisted)",
                     std::move(chain));
        return out;
    }

    /* r >= 2, nonzero class: the Leibniz obstruction applies */
    ObstructionResult obs = leibniz_obstruction(K, w);
    if (!std::holds_alternative<ObstructionWitness>(obs))
        throw std::logic_error("realize_cone: expected an obstruction witness");
    out.verdict = Verdict::NotRealizable;
    out.model_name = "none";
    out.witness = std::get<ObstructionWitness>(obs);
    return out;
}

}  // namespace augss

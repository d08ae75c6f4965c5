#pragma once

#include "augss/obstruct.hpp"

namespace augss {

enum class Verdict { Realized, NotRealizable, EmptySpace };

struct RealizationResult {
    Verdict verdict = Verdict::Realized;
    std::string model_name;
    std::optional<FreeComplex> model;
    std::optional<ChainMap> certificate;  // model -> cone(w), machine verified
    std::optional<ObstructionWitness> witness;
    /* necessary-condition report */
    std::vector<std::size_t> cone_homology, model_homology;
    std::vector<std::size_t> cone_minimal_profile, model_minimal_profile;
};

/* the Koszul complex itself: cellular chains of the a-torus */
FreeComplex torus_complex(Scalar p, std::size_t a);
/* 0 -> FZ/p --l--> FZ/p --l^{p-1}--> FZ/p --l--> FZ/p -> 0 in degrees 0..3 */
FreeComplex lens_complex(Scalar p);
/* (F in degrees 0 and r+1) tensor the torus; the cone of 0: S^r K -> K */
FreeComplex sphere_times_torus(Scalar p, std::size_t a, std::size_t r);
/* lens tensor torus^{a-1}, relabeled over (Z/p)^a */
FreeComplex s3_times_torus(Scalar p, std::size_t a);

/* phi with phi(f_1) = f_1^{mu_1} ... f_a^{mu_a}, completed deterministically;
   asserts phi(lambda_1) = sum mu_i lambda_i mod I^2 */
GroupAut choose_automorphism(const AlgebraPtr& A, const std::vector<Scalar>& mu);

/* the explicit identification s3_times_torus -> cone(lambda_1^{p-1} z_1) */
ChainMap s3_cone_identification(const KoszulComplex& K);

/* triangular isomorphism Cone(w + db) -> Cone(w): (x, y) -> (x - b ^ y, y) */
ChainMap cone_comparison_iso(const KoszulComplex& K, const KChain& b,
                             const FreeComplex& from_cone, const FreeComplex& to_cone);

RealizationResult realize_cone(const KoszulComplex& K, const KoszulCycle& w);

}  // namespace augss

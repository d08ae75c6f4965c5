#pragma once

#include <iosfwd>
#include <string>

#include "augss/realize.hpp"

#include <nlohmann/json.hpp>

namespace augss {

using json = nlohmann::json;

struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* {"kind": "cyclic"|"elementary_abelian"|"product"|"table"|"metacyclic"|
   "heisenberg", ...}; the prime p comes from the enclosing document */
PGroup parse_group(const json& spec, Scalar p);
json group_to_json(const PGroup& g, Scalar p);

/* algebra elements are [coeff, monomial] pairs; a monomial is an exponent
   list over the Jennings generators, or a single element index for table
   groups */
AlgebraElement parse_algebra_element(const AlgebraPtr& A, const json& spec, bool structured);
json algebra_element_to_json(const AlgebraElement& u, bool structured);

FreeComplex parse_complex(const AlgebraPtr& A, const json& spec, bool structured);
json complex_to_json(const FreeComplex& c, bool structured);

/* {"r": 2, "mu": {"1,2": 1}} */
KoszulCycle parse_cycle(const KoszulComplex& K, const json& spec);
json cycle_to_json(const KoszulComplex& K, const KoszulCycle& w);

struct ParsedInput {
    Scalar p = 2;
    bool structured = true;
    AlgebraPtr algebra;
    std::optional<FreeComplex> complex;
    std::optional<json> cycle;  // resolved against a Koszul complex later
};
ParsedInput parse_input(const json& doc);

json page_to_json(const PageTable& pt);
std::string page_to_ascii(const PageTable& pt);
std::string page_to_csv(const PageTable& pt);

json witness_to_json(const ObstructionWitness& w);
json annihilator_to_json(const AnnihilatorIdeal& ideal);
json realization_to_json(const RealizationResult& r, bool emit_model);

}  // namespace augss

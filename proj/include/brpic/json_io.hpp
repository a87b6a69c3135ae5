#pragma once

#include "brpic/cohomology.hpp"
#include "brpic/fusion.hpp"
#include "brpic/galois.hpp"
#include "brpic/seqkit.hpp"

#include <json.hpp>

namespace brpic::io {

using json = nlohmann::json;

// Exact rationals travel as integers or "p/q" strings; never floats.
mpq_class parse_rational(const json& j);
json rational_to_json(const mpq_class& q);
json integer_to_json(const mpz_class& z);

// {"order": n, "table": [[...]], "labels": [...]?} or the permutation form
// {"degree": d, "generators": [[cycle lists]]}.
FiniteGroup parse_group(const json& j);
json group_to_json(const FiniteGroup& g);

// {"free_rank": r, "torsion": [d...], "action": {"<elt>": [[...]], ...}};
// parse_gmodule_spec additionally accepts {"units_of": <field>} and builds
// the reduced unit-group module for the given degree.
GModule parse_gmodule(const json& j, const FiniteGroup& g);
GModule parse_gmodule_spec(const json& j, const FiniteGroup& g, int degree);

// {"degree": n, "values": [[g1, ..., gn, v]...]}; omitted tuples are zero.
Cocycle parse_cocycle(const json& j, const FiniteGroup& g, const GModule& m);
json cocycle_to_json(const Cocycle& c);

// {"kind": "R" | "C" | {"Fq": q} | {"abstract": {...}}}; bare "R"/"C"
// strings are accepted as shorthand.
BaseField parse_field(const json& j);
json field_to_json(const BaseField& f);

// {"gamma": <group>, "root_action": [[...]] | "natural", "theta": i,
//  "concrete": {"modulus": [...], "roots": [[rat...]...], "f": [rat...]}?,
//  "G": [...]? (cross-checked against the derived stabilizer)}
GaloisScenario parse_scenario(const json& j);

// {"objects": {"label": rho_index, ...}}
EmbeddingData parse_embeddings(const json& j);

// {"base_field": ..., "simples": [...], "unit": 0, "N": [[[...]]],
//  "dual": [...], "ends": [...], "grading": {...}?, "split_unit": bool?}
FusionRingData parse_fusion(const json& j);
json fusion_to_json(const FusionRingData& d);

FinAb parse_finab(const json& j); // [d1, d2, ...]
json finab_to_json(const FinAb& g);

// {"nodes": [{"name": ..., "group": [...] | "unknown"}...],
//  "maps": [[[...]] | null, ...], "left_exact_start": bool,
//  "surjective_end": bool?, "symbolic_prefix": str?}
ExactSequenceInstance parse_sequence(const json& j);

json cohomology_to_json(const CohomologyGroup& h);
json profile_to_json(const BrauerRingElement& p);
json nfpoly_to_json(const NFPoly& p);
json faithfulness_to_json(const FaithfulnessReport& r);
json exactness_to_json(const ExactnessReport& r);
json brpic_to_json(const BrPicSolution& s);

} // namespace brpic::io

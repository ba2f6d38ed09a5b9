#pragma once

#include <json.hpp>

#include "cmlab/cmtypes.hpp"
#include "cmlab/galois.hpp"
#include "cmlab/hodge.hpp"
#include "cmlab/intlattice.hpp"
#include "cmlab/reciprocity.hpp"

namespace cmlab {

using json = nlohmann::ordered_json;

// Small values as JSON numbers, large ones as decimal strings.
json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const json& j);

// "{2,5}" or "{}"
Subset parse_subset(int g, const std::string& text);
json to_json(const Subset& s);
Subset subset_from_json(int g, const json& j);

json to_json(const SignedPerm& s);
SignedPerm signed_perm_from_json(const json& j);

// {"g":..,"generators":[..]} or {"cyclic":{"M":..,"phi":[..]}}
json to_json(const GaloisGroup& G);
GaloisGroup group_from_json(const json& j);

// {"group": <group spec>, "phi_labels": [..]}; phi_labels optional
json to_json(const CMPairSpec& spec);
CMPairSpec spec_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const MonomialRelation& r);
MonomialRelation relation_from_json(const json& j);

json to_json(const CycleIndex& c, const LabelAction& A);
CycleIndex cycle_from_json(const json& j, const LabelAction& A);

json to_json(const Generator& gen);
Generator generator_from_json(const json& j);
json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

}  // namespace cmlab

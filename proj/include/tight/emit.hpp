#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "tight/contfrac.hpp"
#include "tight/kirby.hpp"
#include "tight/seifert.hpp"

namespace tight {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
/// decimal strings.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

// Rationals serialize as {"num": string, "den": string} to avoid width loss.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"stage": ..., "components": [{"id", "framing"}...],
//  "linking": [[i, j, lk], ...]} with only the nonzero i < j entries.
json diagram_to_json(const SurgeryDiagram& d);
SurgeryDiagram diagram_from_json(const json& j);

json convergents_to_json(const NegContFrac& cf, const ConvergentTable& t);
json count_to_json(const TheoremForm& form, const TightCount& count);
json form_to_json(const TheoremForm& form);

std::string variant_name(Variant v);

/// Deterministic DOT rendering: one node per component labeled "id:framing",
/// one edge per nonzero linking entry labeled with its value.
std::string emit_dot(const SurgeryDiagram& d);

}  // namespace tight

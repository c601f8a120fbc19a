#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "congr/lie.hpp"
#include "congr/quotient.hpp"
#include "congr/report.hpp"

namespace congr {

/// Full ring description {name, k, basis_names, unit_index (0-based), structure_constants}.
nlohmann::json ring_to_json(const RingSpec& spec);
/// Accepts the full description; name defaults to "custom".
RingPtr ring_from_json(const nlohmann::json& j);

/// A built-in ring's selector ("Z", "Zi", "Zt:D") or null if spec is not built in.
std::optional<std::string> builtin_selector(const RingSpec& spec);
/// Z, Zi, Zt:<D>, or a path to a ring-spec JSON file.
RingPtr ring_from_selector(const std::string& selector);

/// Selector string for built-ins, the full description otherwise.
nlohmann::json ring_ref(const RingPtr& spec);
RingPtr ring_from_ref(const nlohmann::json& j);

/// {n, p, r, s, ring, entries}: entries are row-major coefficient vectors.
nlohmann::json quotient_to_json(const QuotientElem& x);
QuotientElem quotient_from_json(const nlohmann::json& j);

/// {n, p, ring, components: {degree: row-major coefficient vectors}}.
nlohmann::json sl_to_json(const SlElem& x);
SlElem sl_from_json(const nlohmann::json& j);
nlohmann::json gr_to_json(const GrElem& x);
GrElem gr_from_json(const nlohmann::json& j);

/// Compact "[[..],[..]]" rendering of a matrix's coefficient vectors.
std::string matrix_string(const MatR& m);

}  // namespace congr

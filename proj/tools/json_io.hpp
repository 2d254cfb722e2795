#pragma once

#include <json.hpp>

#include "newmac/condition_c.hpp"
#include "newmac/constructions.hpp"
#include "newmac/inequalities.hpp"
#include "newmac/search.hpp"

namespace newmac {

using json = nlohmann::ordered_json;

// Rationals travel as canonical text ("-10/9", "3"); integers are accepted
// on input for convenience. Anything else is a DomainError naming the token.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const json& j);

// {"coeffs": ["a0", "a1", ...]}, index = power of t.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// [{"lo": "...", "hi": "...", "mult": m}, ...]; points have lo == hi.
json to_json(const RootIsolation& iso);

json to_json(const ConditionCReport& rep);
json to_json(const GapReport& rep);
json to_json(const MaclaurinChainReport& rep);
json to_json(const ComplexRootCertificate& cert);
json to_json(const InterlacingReport& rep);
json to_json(const RealRootednessReport& rep);
json to_json(const SpecialLagrangian& sl);
json to_json(const Witness& w);

// Input accessors: fetch a required key or throw DomainError naming it.
const json& require_key(const json& doc, const char* key);
VariableVector x_from_input(const json& doc);
AlphaVector alpha_from_input(const json& doc);
long long_from_input(const json& doc, const char* key);

} // namespace newmac

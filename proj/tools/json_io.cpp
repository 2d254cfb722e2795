#include "json_io.hpp"

namespace newmac {

json to_json(const Rational& r) { return json(r.to_string()); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<long long>()));
  throw DomainError("invalid rational token '" + j.dump() + "'");
}

json to_json(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected a JSON array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

json to_json(const Polynomial& p) {
  return json{{"coeffs", to_json(std::span<const Rational>(p.coeffs()))}};
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw DomainError("polynomial JSON must be {\"coeffs\": [...]}");
  return Polynomial(rationals_from_json(j["coeffs"]));
}

json to_json(const RootIsolation& iso) {
  json arr = json::array();
  for (const auto& e : iso.intervals)
    arr.push_back(json{{"lo", to_json(e.lo)},
                       {"hi", to_json(e.hi)},
                       {"mult", e.multiplicity}});
  return arr;
}

json to_json(const ConditionCReport& rep) {
  return json{{"holds", rep.holds},
              {"f", to_json(rep.f)},
              {"roots", to_json(rep.roots)}};
}

json to_json(const GapReport& rep) {
  json j{{"gap", to_json(rep.gap)},
         {"holds", rep.holds},
         {"lhs", to_json(rep.lhs)},
         {"rhs", to_json(rep.rhs)},
         {"equality", rep.equality},
         {"equality_cause", to_string(rep.equality_cause)},
         {"condition_c_verified", rep.condition_c_verified}};
  if (rep.theta) j["theta"] = to_json(*rep.theta);
  j["margin"] = to_json(rep.margin);
  if (rep.outside_theorem_range) j["outside_theorem_range"] = true;
  return j;
}

json to_json(const MaclaurinChainReport& rep) {
  json links = json::array();
  for (const auto& link : rep.links)
    links.push_back(json{{"m", link.m}, {"report", to_json(link.report)}});
  return json{{"holds", rep.holds}, {"links", std::move(links)}};
}

json to_json(const ComplexRootCertificate& cert) {
  return json{{"k", cert.k},
              {"gap", to_json(cert.gap)},
              {"s_km1", to_json(cert.s_km1)},
              {"s_k", to_json(cert.s_k)},
              {"s_kp1", to_json(cert.s_kp1)},
              {"g", to_json(cert.g)}};
}

json to_json(const InterlacingReport& rep) {
  return json{{"interlaced", rep.interlaced},
              {"p1_roots", to_json(rep.p1_roots)},
              {"p2_roots", to_json(rep.p2_roots)}};
}

json to_json(const RealRootednessReport& rep) {
  json factors = json::array();
  for (const auto& f : rep.factors)
    factors.push_back(json{{"factor", to_json(f.factor)},
                           {"multiplicity", f.multiplicity},
                           {"degree", f.degree},
                           {"real_roots", f.real_roots}});
  return json{{"real_rooted", rep.real_rooted},
              {"roots", to_json(rep.roots)},
              {"factors", std::move(factors)}};
}

json to_json(const SpecialLagrangian& sl) {
  return json{{"k", sl.k},
              {"s", sl.s},
              {"alpha", to_json(std::span<const Rational>(sl.alpha.entries()))},
              {"sign", sl.sign}};
}

json to_json(const Witness& w) {
  return json{{"x", to_json(std::span<const Rational>(w.x.entries()))},
              {"gap", to_json(w.gap)},
              {"form", to_string(w.form)}};
}

const json& require_key(const json& doc, const char* key) {
  if (!doc.is_object())
    throw DomainError("input document must be a JSON object");
  if (!doc.contains(key))
    throw DomainError(std::string("missing required input key '") + key + "'");
  return doc.at(key);
}

VariableVector x_from_input(const json& doc) {
  return VariableVector(rationals_from_json(require_key(doc, "x")));
}

AlphaVector alpha_from_input(const json& doc) {
  return AlphaVector(rationals_from_json(require_key(doc, "alpha")));
}

long long_from_input(const json& doc, const char* key) {
  const json& j = require_key(doc, key);
  if (!j.is_number_integer())
    throw DomainError(std::string("input key '") + key + "' must be an integer");
  return static_cast<long>(j.get<long long>());
}

} // namespace newmac

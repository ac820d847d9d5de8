#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symbranch/branching.hpp"
#include "symbranch/burge.hpp"
#include "symbranch/path.hpp"
#include "symbranch/polytope.hpp"
#include "symbranch/sundaram.hpp"
#include "symbranch/verify.hpp"

namespace symbranch {

using nlohmann::json;

// Barred letters are written as negative integers.

inline json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

inline json to_json(const Word& w) {
  json out = json::array();
  for (Letter l : w) out.push_back(l.value());
  return out;
}

inline json to_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) rows.push_back(to_json(row));
  return {{"rows", rows}};
}

inline Tableau tableau_from_json(const json& j) { return make_tableau(j.at("rows").get<std::vector<std::vector<int>>>()); }

inline json to_json(const StandardTableau& t) { return t.rows(); }

inline StandardTableau standard_tableau_from_json(const json& j) {
  return StandardTableau(j.get<std::vector<std::vector<int>>>());
}

inline json to_json(const SkewTableau& l) {
  json rows = json::array();
  for (const auto& row : l.rows()) rows.push_back(to_json(row));
  return {{"outer", to_json(l.outer())}, {"inner", to_json(l.inner())}, {"rows", rows}};
}

inline SkewTableau skew_tableau_from_json(const json& j) {
  std::vector<SkewTableau::Row> rows;
  for (const auto& r : j.at("rows")) {
    SkewTableau::Row row;
    for (int v : r.get<std::vector<int>>()) row.emplace_back(v);
    rows.push_back(std::move(row));
  }
  return SkewTableau(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")), std::move(rows));
}

inline json to_json(const PrefixPath& p) { return {{"word", to_json(p.word)}, {"prefix", p.prefix}}; }

inline json to_json(const SpecialTwoLineArray& a) { return {{"top", a.top()}, {"bottom", a.bottom()}}; }

inline SpecialTwoLineArray array_from_json(const json& j) {
  return SpecialTwoLineArray(j.at("top").get<std::vector<int>>(), j.at("bottom").get<std::vector<int>>());
}

inline json to_json(const QSymbolBundle& b, const SkewTableau& phi_image) {
  return {{"partial_q", to_json(b.partial_q)},
          {"array", to_json(b.array)},
          {"even", to_json(b.even)},
          {"final_q", to_json(b.final_q)},
          {"phi", to_json(phi_image)}};
}

inline json to_json(const HRepresentation& h) {
  json ineqs = json::array();
  for (const auto& q : h.ineqs)
    ineqs.push_back({{"coeffs", q.coeffs}, {"rel", to_string(q.rel)}, {"rhs", q.rhs}, {"label", q.label}});
  return {{"variables", h.variable_names}, {"ineqs", ineqs}};
}

inline Relation relation_from_string(const std::string& s) {
  if (s == "<=") return Relation::le;
  if (s == "=") return Relation::eq;
  if (s == ">=") return Relation::ge;
  throw InvalidArgument("unknown relation '" + s + "'");
}

inline HRepresentation h_rep_from_json(const json& j) {
  HRepresentation h;
  if (j.contains("variables")) h.variable_names = j.at("variables").get<std::vector<std::string>>();
  for (const auto& q : j.at("ineqs")) {
    Inequality ineq{q.at("coeffs").get<std::vector<long long>>(), relation_from_string(q.at("rel").get<std::string>()),
                    q.at("rhs").get<long long>(), q.value("label", std::string{})};
    if (h.variable_names.empty())
      for (std::size_t k = 0; k < ineq.coeffs.size(); ++k) h.variable_names.push_back("x" + std::to_string(k));
    h.ineqs.push_back(std::move(ineq));
  }
  return h;
}

/// [{"mu": [...], "multiplicity": m}, ...] in increasing μ order.
inline json to_json(const BranchingTable& t) {
  json entries = json::array();
  for (const auto& [mu, m] : t.multiplicities) entries.push_back({{"mu", to_json(mu)}, {"multiplicity", m}});
  return {{"method", to_string(t.method)}, {"table", entries}};
}

inline json to_json(const BijectionCertificate& c) {
  return {{"lambda", to_json(c.lambda)},         {"mu", to_json(c.mu)},
          {"n", c.n},                            {"domres_count", c.domres_count},
          {"lrs_count", c.lrs_count},            {"injective", c.injective},
          {"image_equals_lrs", c.image_equals_lrs}, {"weights_even", c.weights_even},
          {"left_roundtrip", c.left_roundtrip},  {"right_roundtrip", c.right_roundtrip},
          {"ok", c.ok()}};
}

inline json to_json(const CheckResult& r) {
  // Timing is left out so the output is reproducible.
  return {{"check", r.name},      {"cases", r.cases},       {"failures", r.failures},
          {"passed", r.passed()}, {"messages", r.messages}, {"notes", r.notes}};
}

}  // namespace symbranch

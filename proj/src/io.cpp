#include "schlafli/io.hpp"

#include <cstdio>
#include <sstream>

namespace schlafli {

using nlohmann::json;

TetraLengths tetra_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("tetrahedron document must be a JSON object");
  if (!doc.contains("geometry")) throw ParseError("missing key 'geometry'");
  if (!doc.at("geometry").is_string()) throw ParseError("key 'geometry' must be a string");
  TetraLengths x;
  try {
    x.geometry = parse_geometry(doc.at("geometry").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("key 'geometry': ") + e.what());
  }
  if (!doc.contains("lengths")) throw ParseError("missing key 'lengths'");
  const json& lengths = doc.at("lengths");
  if (!lengths.is_object()) throw ParseError("key 'lengths' must be an object keyed by edge");

  std::array<bool, kEdgeCount> seen{};
  for (const auto& [key, value] : lengths.items()) {
    const auto e = parse_edge_key(key);
    if (!e) throw ParseError("unknown edge key 'lengths." + key + "'");
    if (seen[*e]) throw ParseError("duplicate edge 'lengths." + edge_key(*e) + "'");
    if (!value.is_number()) throw ParseError("key 'lengths." + key + "' must be a number");
    seen[*e] = true;
    x.x[*e] = value.get<double>();
  }
  for (int e = 0; e < kEdgeCount; ++e) {
    if (!seen[e]) throw ParseError("missing key 'lengths." + edge_key(e) + "'");
  }
  return x;
}

TetraLengths parse_tetra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return tetra_from_json(doc);
}

json edge_values_to_json(const EdgeVector& values) {
  json out = json::object();
  for (int e = 0; e < kEdgeCount; ++e) out[edge_key(e)] = values[e];
  return out;
}

json to_json(const TetraLengths& x) {
  return {{"geometry", std::string(to_string(x.geometry))}, {"lengths", edge_values_to_json(x.x)}};
}

json matrix_to_json(const Matrix6& m) {
  json edges = json::array();
  for (int e = 0; e < kEdgeCount; ++e) edges.push_back(edge_key(e));
  json rows = json::array();
  for (int r = 0; r < kEdgeCount; ++r) {
    json row = json::array();
    for (int c = 0; c < kEdgeCount; ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return {{"edges", std::move(edges)}, {"values", std::move(rows)}};
}

std::string matrix_to_csv(const Matrix6& m) {
  std::string out = "edge";
  for (int e = 0; e < kEdgeCount; ++e) out += "," + edge_key(e);
  out += "\n";
  char buf[32];
  for (int r = 0; r < kEdgeCount; ++r) {
    out += edge_key(r);
    for (int c = 0; c < kEdgeCount; ++c) {
      std::snprintf(buf, sizeof buf, ",%.17g", m(r, c));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

json to_json(const ValidityReport& report) {
  json out = {{"valid", report.valid}};
  if (!report.valid) {
    out["kind"] = std::string(to_string(*report.kind));
    out["reason"] = report.reason;
  }
  return out;
}

json to_json(const IdentityResidual& residual) {
  return {{"name", residual.name},
          {"residual", residual.residual},
          {"row", edge_key(residual.row)},
          {"col", edge_key(residual.col)},
          {"tolerance", residual.tolerance},
          {"pass", residual.pass}};
}

json to_json(const IdentityReport& report) {
  json identities = json::array();
  for (const auto& r : report.identities) identities.push_back(to_json(r));
  json out = {{"geometry", std::string(to_string(report.geometry))},
              {"family", report.family},
              {"lengths", edge_values_to_json(report.lengths)},
              {"identities", std::move(identities)},
              {"pass", report.pass}};
  if (report.seed) out["seed"] = *report.seed;
  if (report.sample_index) out["sample_index"] = *report.sample_index;
  return out;
}

json to_json(const SweepReport& report) {
  const SweepConfig& c = report.config;
  json identities = json::array();
  for (const auto& entry : report.entries) {
    json item = to_json(entry.worst);
    item["sample_index"] = entry.sample_index;
    item["lengths"] = edge_values_to_json(entry.lengths);
    identities.push_back(std::move(item));
  }
  // Worker count is deliberately absent: it never changes the result.
  return {{"geometry", std::string(to_string(c.geometry))},
          {"samples", c.samples},
          {"seed", c.seed},
          {"range", {c.domain.lo, c.domain.hi}},
          {"min_angle", c.domain.min_angle},
          {"tolerances",
           {{"angle", c.tolerances.angle_identities},
            {"length", c.tolerances.length_identities},
            {"inverse", c.tolerances.inverse}}},
          {"evaluated", report.evaluated},
          {"identities", std::move(identities)},
          {"pass", report.pass}};
}

json to_json(const VolumeResult& result) {
  return {{"volume", result.value}, {"n_steps", result.n_steps}, {"error_estimate", result.error_estimate}};
}

json to_json(const GradientCheck& check) {
  return {{"max_residual", check.max_residual},
          {"normalized", check.normalized},
          {"sign_consistent", check.sign_consistent}};
}

json to_json(const GradientConvergence& check) {
  return {{"h", check.h},
          {"fine", to_json(check.fine)},
          {"coarse", to_json(check.coarse)},
          {"ratio", check.ratio},
          {"pass", check.pass}};
}

std::string render_table(const SweepReport& report) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %-12s %-12s %-6s %-8s %s\n", "identity", "max residual", "tolerance",
                "entry", "sample", "status");
  os << line;
  for (const auto& entry : report.entries) {
    const IdentityResidual& r = entry.worst;
    const std::string where = edge_key(r.row) + "/" + edge_key(r.col);
    std::snprintf(line, sizeof line, "%-16s %-12.3e %-12.3e %-6s %-8zu %s\n", r.name.c_str(), r.residual,
                  r.tolerance, where.c_str(), entry.sample_index, r.pass ? "pass" : "FAIL");
    os << line;
  }
  os << (report.pass ? "all identities within tolerance" : "identity residuals outside tolerance") << " ("
     << report.evaluated << " " << to_string(report.config.geometry) << " samples, seed " << report.config.seed
     << ")\n";
  return os.str();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace schlafli

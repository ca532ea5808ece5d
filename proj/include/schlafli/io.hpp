#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "schlafli/identities.hpp"
#include "schlafli/jacobian.hpp"
#include "schlafli/sweep.hpp"
#include "schlafli/volume.hpp"

namespace schlafli {

/// Malformed input document. The message names the offending key.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tetrahedron document:
//   {"geometry": "spherical" | "euclidean" | "hyperbolic",
//    "lengths": {"12": r, "13": r, "14": r, "23": r, "24": r, "34": r}}

TetraLengths tetra_from_json(const nlohmann::json& doc);
TetraLengths parse_tetra(std::string_view text);
nlohmann::json to_json(const TetraLengths& x);

/// {"12": v, ..., "34": v}
nlohmann::json edge_values_to_json(const EdgeVector& values);

/// {"edges": ["12", ..., "34"], "values": [[...], ...]} in canonical order.
nlohmann::json matrix_to_json(const Matrix6& m);

/// Header row "edge,12,...,34", then one row per edge; 17 significant digits.
std::string matrix_to_csv(const Matrix6& m);

nlohmann::json to_json(const ValidityReport& report);
nlohmann::json to_json(const IdentityResidual& residual);
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const VolumeResult& result);
nlohmann::json to_json(const GradientCheck& check);
nlohmann::json to_json(const GradientConvergence& check);

/// Fixed-width table of the sweep, one line per identity.
std::string render_table(const SweepReport& report);

/// Pretty JSON with a trailing newline; the byte stream depends only on the value.
std::string dump(const nlohmann::json& doc);

}  // namespace schlafli

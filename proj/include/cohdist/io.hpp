// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohdist/states.hpp"

namespace cohdist {

/// A file could not be read or did not parse as a state file.
struct ParseError : Error { using Error::Error; };

enum class StateSchema { Density, Pure, Ensemble, Kraus };

std::string to_string(StateSchema s);

/// Parsed contents of a JSON state file. Exactly one payload member is set,
/// matching `schema`. Payloads are raw: validation happens at the point of
/// use so callers can report which bound failed.
struct StateFile {
  StateSchema schema = StateSchema::Density;
  int dim = 0;
  std::optional<std::string> label;

  std::optional<Matrix> density;
  std::optional<Vector> pure;
  std::optional<std::vector<std::pair<double, Vector>>> ensemble;
  std::optional<std::vector<Matrix>> kraus;
};

/// Loads and syntactically validates a state file. Throws ParseError on I/O
/// or schema problems.
StateFile load_state_file(const std::string& path);

/// Serializers for the same format (complex numbers as [re, im] pairs).
std::string density_to_json(const Matrix& m, const std::string& label = "");
std::string pure_to_json(const Vector& v, const std::string& label = "");
std::string kraus_to_json(const std::vector<Matrix>& ops, const std::string& label = "");
std::string ensemble_to_json(const std::vector<std::pair<double, Vector>>& members,
                             const std::string& label = "");

}  // namespace cohdist

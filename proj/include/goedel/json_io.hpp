#pragma once

#include <json.hpp>

#include "goedel/decide.hpp"
#include "goedel/models.hpp"
#include "goedel/propdecide.hpp"

namespace goedel {

/// {"domain": [...], "constants": {...}, "atoms": [{"pred", "args", "value"}]}
/// with values as "p/q" strings.
nlohmann::json to_json(const Interpretation& i);

/// Inverse of to_json. The atom list must be total over the domain.
Interpretation interpretation_from_json(const nlohmann::json& j);

/// Propositional atoms use an empty argument list.
nlohmann::json to_json(const Assignment& a);

struct JsonDumpOptions {
  bool skolem = false;
  bool ground_instances = false;
};

nlohmann::json to_json(const Query& q, const Verdict& v, const JsonDumpOptions& dump = {});

}  // namespace goedel

#include "goedel/error.hpp"

namespace goedel {

std::string_view stage_name(Stage stage) noexcept {
  switch (stage) {
    case Stage::Parse: return "parse";
    case Stage::Shape: return "shape";
    case Stage::Skolem: return "skolem";
    case Stage::Ground: return "ground";
    case Stage::Decide: return "decide";
    case Stage::Cap: return "cap";
    case Stage::Certificate: return "certificate";
    case Stage::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace goedel

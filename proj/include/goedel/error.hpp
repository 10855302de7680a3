#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace goedel {

/// Pipeline stage an error originated from. Surfaced by the CLI.
enum class Stage { Parse, Shape, Skolem, Ground, Decide, Cap, Certificate, Usage };

std::string_view stage_name(Stage stage) noexcept;

class Error : public std::runtime_error {
public:
  Error(Stage stage, const std::string& message)
      : std::runtime_error(message), stage_(stage) {}

  Stage stage() const noexcept { return stage_; }

private:
  Stage stage_;
};

/// Raised when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string& message) : Error(Stage::Cap, message) {}
};

}  // namespace goedel

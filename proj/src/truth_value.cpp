#include "goedel/truth_value.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "goedel/error.hpp"

namespace goedel {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(Stage::Parse, "malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

TruthValue::TruthValue(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den)
    throw Error(Stage::Usage, "truth value " + std::to_string(num) + "/" + std::to_string(den) +
                                  " outside [0,1]");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

TruthValue TruthValue::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return TruthValue(parse_int(text, text), 1);
  return TruthValue(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string TruthValue::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Grid::Grid(std::vector<TruthValue> points) : points_(std::move(points)) {
  if (points_.size() < 2 || !points_.front().is_zero() || !points_.back().is_one())
    throw Error(Stage::Usage, "grid must start at 0, end at 1 and have at least two points");
  if (std::adjacent_find(points_.begin(), points_.end(),
                         [](const auto& a, const auto& b) { return !(a < b); }) != points_.end())
    throw Error(Stage::Usage, "grid points must be strictly increasing");
}

Grid Grid::equally_spaced(std::size_t size) {
  if (size < 2) throw Error(Stage::Usage, "grid size must be at least 2");
  std::vector<TruthValue> points;
  points.reserve(size);
  const auto den = static_cast<std::int64_t>(size - 1);
  for (std::int64_t k = 0; k <= den; ++k) points.emplace_back(k, den);
  return Grid(std::move(points));
}

bool Grid::contains(const TruthValue& v) const {
  return std::binary_search(points_.begin(), points_.end(), v);
}

bool Grid::subset_of(const Grid& other) const {
  return std::all_of(points_.begin(), points_.end(),
                     [&](const TruthValue& v) { return other.contains(v); });
}

LogicId LogicId::finite(int m) {
  if (m < 2) throw Error(Stage::Usage, "finite Goedel logic needs m >= 2");
  return LogicId(m);
}

LogicId LogicId::parse(std::string_view text) {
  if (text == "ginf" || text == "g01" || text == "gup" || text == "gdown") return infinite();
  if (text.starts_with("gm:")) {
    const auto digits = text.substr(3);
    int m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() && m >= 2)
      return finite(m);
  }
  throw Error(Stage::Usage, "unknown logic '" + std::string(text) +
                                "' (expected gm:<m> with m >= 2, ginf, g01, gup or gdown)");
}

std::string LogicId::str() const { return is_finite() ? "gm:" + std::to_string(m_) : "ginf"; }

}  // namespace goedel

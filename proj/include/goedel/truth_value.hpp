#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace goedel {

/// Exact rational truth value p/q in [0,1], kept in lowest terms.
class TruthValue {
public:
  constexpr TruthValue() = default;
  TruthValue(std::int64_t num, std::int64_t den);

  static TruthValue zero() { return TruthValue(); }
  static TruthValue one() { return TruthValue(1, 1); }
  /// Parses "p/q", "0" or "1".
  static TruthValue parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_one() const noexcept { return num_ == den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  std::string str() const;

  friend bool operator==(const TruthValue&, const TruthValue&) = default;
  friend std::strong_ordering operator<=>(const TruthValue& a, const TruthValue& b) {
    __extension__ typedef __int128 wide;
    return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Gödel connectives on truth values.
inline TruthValue goedel_and(const TruthValue& a, const TruthValue& b) { return a < b ? a : b; }
inline TruthValue goedel_or(const TruthValue& a, const TruthValue& b) { return a < b ? b : a; }
inline TruthValue goedel_implies(const TruthValue& a, const TruthValue& b) {
  return a <= b ? TruthValue::one() : b;
}

/// Strictly increasing finite truth-value set with 0 first and 1 last.
class Grid {
public:
  explicit Grid(std::vector<TruthValue> points);

  /// The equally spaced grid {0, 1/(size-1), ..., 1}.
  static Grid equally_spaced(std::size_t size);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<TruthValue>& points() const noexcept { return points_; }
  const TruthValue& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const TruthValue& v) const;
  /// Returns true if every point of this grid is also a point of `other`.
  bool subset_of(const Grid& other) const;

private:
  std::vector<TruthValue> points_;
};

/// Which Gödel logic a query targets: G_m for m >= 2, or the infinite-valued logics.
class LogicId {
public:
  static LogicId finite(int m);
  static LogicId infinite() { return LogicId(0); }
  /// Accepts gm:<m>, ginf, g01, gup, gdown.
  static LogicId parse(std::string_view text);

  bool is_finite() const noexcept { return m_ != 0; }
  int m() const noexcept { return m_; }
  std::string str() const;

  friend bool operator==(const LogicId&, const LogicId&) = default;

private:
  explicit LogicId(int m) : m_(m) {}
  int m_;
};

}  // namespace goedel

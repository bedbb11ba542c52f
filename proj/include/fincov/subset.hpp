#ifndef FINCOV_SUBSET_HPP
#define FINCOV_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincov/errors.hpp"

namespace fincov {

using Mask = std::uint32_t;

/// A subset of a finite carrier, stored as a membership mask.
/// Bit i corresponds to the i-th point in declaration order.
struct Subset {
  Mask bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask b) : bits(b) {}

  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  constexpr bool meets(Subset other) const { return (bits & other.bits) != 0; }

  constexpr Subset with(int i) const { return Subset(bits | (Mask(1) << i)); }
  constexpr Subset without(int i) const { return Subset(bits & ~(Mask(1) << i)); }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits & ~b.bits); }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits != b.bits; }
  friend constexpr bool operator<(Subset a, Subset b) { return a.bits < b.bits; }

  /// Least point index in the subset; -1 when empty.
  constexpr int min_point() const { return bits == 0 ? -1 : std::countr_zero(bits); }
};

constexpr Subset singleton(int i) { return Subset(Mask(1) << i); }
constexpr Subset full_set(int n) { return Subset(n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1); }
constexpr Mask subset_count(int n) { return Mask(1) << n; }

/// Ordered carrier of named points. Iteration order is declaration order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw Error("duplicate point name: " + names_[i]);
    if (names_.size() > 16) throw TooLarge("carriers support at most 16 points");
  }
  PointSet(std::initializer_list<const char*> names)
      : PointSet(std::vector<std::string>(names.begin(), names.end())) {}

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  std::string render(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i)
      if (s.contains(i)) {
        if (!first) out += ' ';
        out += names_[static_cast<std::size_t>(i)];
        first = false;
      }
    return out + "}";
  }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.names_ == b.names_; }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

 private:
  std::vector<std::string> names_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

inline PointSetPtr make_points(std::vector<std::string> names) {
  return std::make_shared<const PointSet>(std::move(names));
}

/// Carrier with n anonymous points p0..p{n-1}.
inline PointSetPtr make_points(int n, const std::string& prefix = "p") {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make_points(std::move(names));
}

}  // namespace fincov

#endif

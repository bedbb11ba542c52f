#ifndef FINCOV_CONVERGENCE_HPP
#define FINCOV_CONVERGENCE_HPP

#include <optional>
#include <span>
#include <vector>

#include "fincov/subset.hpp"

namespace fincov {

class FiniteTopology;

/// A convergence structure on a finite carrier.
///
/// On a finite set every filter is principal, so the structure is a total
/// table assigning to each nonempty subset A the limit set of the principal
/// filter of A. The table satisfies the point axiom (x is a limit of its own
/// principal ultrafilter) and is antitone in A. Instances are immutable and
/// safe to share across threads.
class FiniteConvergence {
 public:
  /// Validates the full table. `limits[A.bits]` must be set for every
  /// nonempty A; index 0 is ignored.
  static FiniteConvergence build(PointSetPtr carrier, std::vector<Subset> limits);

  /// Builds the finitely deep convergence determined by its singleton limits:
  /// lim(A) is the intersection of the limits of the singletons of A.
  /// `singleton_limits[i]` must contain point i.
  static FiniteConvergence finite_depth(PointSetPtr carrier,
                                        const std::vector<Subset>& singleton_limits);

  int size() const { return carrier_ ? carrier_->size() : 0; }
  const PointSet& carrier() const { return *carrier_; }
  const PointSetPtr& carrier_ptr() const { return carrier_; }
  Subset universe() const { return full_set(size()); }

  /// Limit of the principal filter of a nonempty subset.
  Subset limit(Subset a) const {
    if (a.empty()) throw EmptyFilterBase();
    return limits_[a.bits];
  }

  /// True when lim(A ∪ B) = lim(A) ∩ lim(B) for all nonempty A, B.
  bool finite_depth_hint() const { return finite_depth_; }

  const std::vector<Subset>& table() const { return limits_; }

  friend bool operator==(const FiniteConvergence& a, const FiniteConvergence& b) {
    return *a.carrier_ == *b.carrier_ && a.limits_ == b.limits_;
  }
  friend bool operator!=(const FiniteConvergence& a, const FiniteConvergence& b) {
    return !(a == b);
  }

 private:
  FiniteConvergence(PointSetPtr carrier, std::vector<Subset> limits, bool fd)
      : carrier_(std::move(carrier)), limits_(std::move(limits)), finite_depth_(fd) {}

  PointSetPtr carrier_;
  std::vector<Subset> limits_;  // indexed by mask, entry 0 unused
  bool finite_depth_ = false;
};

/// An open-set family on a finite carrier.
class FiniteTopology {
 public:
  /// Validates: contains the empty set and the carrier, closed under binary
  /// union and intersection.
  static FiniteTopology build(PointSetPtr carrier, std::vector<Subset> opens);

  int size() const { return carrier_ ? carrier_->size() : 0; }
  const PointSet& carrier() const { return *carrier_; }
  const PointSetPtr& carrier_ptr() const { return carrier_; }
  Subset universe() const { return full_set(size()); }

  bool is_open(Subset s) const { return open_[s.bits]; }
  bool is_closed(Subset s) const { return open_[(universe() - s).bits]; }

  /// Opens in ascending mask order.
  const std::vector<Subset>& opens() const { return opens_; }

  /// Smallest open set containing x.
  Subset min_nbhd(int x) const { return min_nbhd_[static_cast<std::size_t>(x)]; }

  /// Smallest closed superset.
  Subset closure(Subset s) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return *a.carrier_ == *b.carrier_ && a.opens_ == b.opens_;
  }
  friend bool operator!=(const FiniteTopology& a, const FiniteTopology& b) { return !(a == b); }

 private:
  FiniteTopology() = default;
  PointSetPtr carrier_;
  std::vector<Subset> opens_;
  std::vector<bool> open_;  // membership by mask
  std::vector<Subset> min_nbhd_;
};

/// A total function between finite carriers.
class SpaceMap {
 public:
  SpaceMap(PointSetPtr source, PointSetPtr target, std::vector<int> table);

  const PointSet& source() const { return *source_; }
  const PointSet& target() const { return *target_; }
  const PointSetPtr& source_ptr() const { return source_; }
  const PointSetPtr& target_ptr() const { return target_; }

  int operator()(int x) const { return table_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& table() const { return table_; }

  Subset image(Subset s) const;
  Subset preimage(Subset s) const;
  bool surjective() const;
  bool bijective() const;
  SpaceMap inverse() const;  // requires bijective

 private:
  PointSetPtr source_, target_;
  std::vector<int> table_;
};

// ---------------------------------------------------------------------------
// Operations

/// True iff A and B mesh, i.e. A ∩ B is nonempty.
inline bool mesh(Subset a, Subset b) { return a.meets(b); }

/// Adherence of the principal filter of nonempty B: the union of limits of
/// all filters meshing it. Computed both from the definition and as the
/// union of singleton limits over B; the two must agree.
Subset adherence(const FiniteConvergence& conv, Subset b);

struct SetStatus {
  bool closed = false;
  bool open = false;
};

/// Closed/open status of a subset. S is closed when every nonempty A ⊆ S has
/// lim(A) ⊆ S; S is open when lim(A) meeting S forces A ⊆ S.
SetStatus set_status(const FiniteConvergence& conv, Subset s);

/// The finest topology coarser than the convergence.
FiniteTopology topological_modification(const FiniteConvergence& conv);

/// Reflector onto finitely deep convergences: lim(A) becomes the
/// intersection of singleton limits over A.
FiniteConvergence finite_depth_modification(const FiniteConvergence& conv);

/// The convergence of a topology: x is a limit of A iff every open set
/// containing x contains A.
FiniteConvergence conv_of_topology(const FiniteTopology& top);

enum class Comparison { Finer, Coarser, Equal, Incomparable };

/// Compares two convergences on the same carrier; `Finer` means a ≥ b,
/// i.e. lim_a(A) ⊆ lim_b(A) for every A.
Comparison compare(const FiniteConvergence& a, const FiniteConvergence& b);

inline bool finer_or_equal(const FiniteConvergence& a, const FiniteConvergence& b) {
  Comparison c = compare(a, b);
  return c == Comparison::Finer || c == Comparison::Equal;
}

FiniteConvergence sup_conv(std::span<const FiniteConvergence> convs);
FiniteConvergence inf_conv(std::span<const FiniteConvergence> convs);

/// Coarsest convergence on the source of f making f continuous into tau.
FiniteConvergence initial_conv(const SpaceMap& f, const FiniteConvergence& tau);

/// Finest convergence on the target of f making f continuous from xi.
FiniteConvergence final_conv(const SpaceMap& f, const FiniteConvergence& xi);

/// Subspace convergence on the points of `a`, with the inclusion map.
std::pair<FiniteConvergence, SpaceMap> subspace_conv(const FiniteConvergence& conv, Subset a);

/// Binary product with the two projections.
struct Product {
  FiniteConvergence conv;
  SpaceMap proj_left;
  SpaceMap proj_right;
};
Product product_conv(const FiniteConvergence& a, const FiniteConvergence& b);

/// Quotient convergence along a surjection (final convergence; throws
/// NotSurjective otherwise).
FiniteConvergence quotient_conv(const SpaceMap& f, const FiniteConvergence& xi);

bool is_continuous(const SpaceMap& f, const FiniteConvergence& xi, const FiniteConvergence& tau);

/// A is dense when every point is a limit of some filter containing A.
bool is_dense(const FiniteConvergence& conv, Subset a);

/// Exhaustive search for a homeomorphism, pruned by per-point limit-set size
/// signatures. Returns the first bijection in lexicographic order, if any.
std::optional<SpaceMap> find_homeomorphism(const FiniteConvergence& a,
                                           const FiniteConvergence& b);

// Convenience structures.
FiniteConvergence discrete_conv(PointSetPtr carrier);
FiniteConvergence antidiscrete_conv(PointSetPtr carrier);
FiniteTopology discrete_topology(PointSetPtr carrier);
FiniteTopology antidiscrete_topology(PointSetPtr carrier);
SpaceMap identity_map(PointSetPtr carrier);

}  // namespace fincov

#endif

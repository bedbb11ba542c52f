#ifndef FINCOV_POINTS_HPP
#define FINCOV_POINTS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "fincov/lattice.hpp"

namespace fincov {

/// A point of a convergence lattice: a proper filter, prime in the sense of
/// the chosen category, that contains its own limit. Stored by its least
/// element.
struct LatticePoint {
  int rep = -1;
  Category category = Category::Lat;
};

/// Points of a convergence lattice for one category: elements p with a
/// proper upset, the category's primality, and lim(p) >= p, in ascending
/// element order.
std::vector<int> extract_points(const FiniteConvLattice& l, Category cat);

/// The space of points of a convergence lattice, with the bullet/circle
/// bookkeeping used to compute its convergence.
class PointSpace {
 public:
  static PointSpace build(std::shared_ptr<const FiniteConvLattice> base, Category cat);

  const FiniteConvLattice& base() const { return *base_; }
  Category category() const { return cat_; }
  int point_count() const { return static_cast<int>(reps_.size()); }
  int rep(int point) const { return reps_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& reps() const { return reps_; }
  std::optional<int> point_of_rep(int element) const;

  /// The convergence on the points.
  const FiniteConvergence& conv() const { return conv_; }

  /// bullet(l): the points whose filter contains l, i.e. points p <= l.
  Subset bullet(int element) const { return bullet_[static_cast<std::size_t>(element)]; }

  /// circle of the principal filter of a nonempty set of points: the
  /// elements whose bullet belongs to the filter. Always a principal filter
  /// here; returns its least element.
  LatticeFilter circle_filter(Subset points_set) const;

 private:
  std::shared_ptr<const FiniteConvLattice> base_;
  Category cat_ = Category::Lat;
  std::vector<int> reps_;
  std::vector<Subset> bullet_;
  FiniteConvergence conv_ = discrete_conv(make_points(0));
};

/// The quotient of pt L identifying points with equal limits.
struct QuotientMap {
  SpaceMap q;                   // point index -> class index
  std::vector<int> class_reps;  // class index -> the common limit, an element of L
};

struct PtPrime {
  FiniteConvergence conv;  // quotient convergence on the classes
  QuotientMap quotient;
};

/// pt'L with the quotient convergence, computed over principal filters.
PtPrime pt_prime(const PointSpace& ps);

/// pt of a continuous lattice morphism phi : L -> L', mapping points of L'
/// to points of L by taking preimage filters. `of_source` is the point
/// space of L, `of_target` that of L'; the returned map goes from the
/// latter to the former. Throws NotAPoint when a preimage filter is not a
/// point of L.
SpaceMap pt_morphism(const LatticeMorphism& phi, const PointSpace& of_source,
                     const PointSpace& of_target);

/// The canonical comparison of a space with the points of its powerset
/// lattice: x maps to the point carried by the singleton of x.
SpaceMap canonical_point_embedding(const FiniteConvergence& conv, const PointSpace& ps);

struct EnoughElements {
  bool enough_closed = false;
  bool enough_open = false;
};

/// Whether every closed (open) subset of pt L is the bullet of a closed
/// (open) element.
EnoughElements enough_elements(const PointSpace& ps);

struct UpperTopologyReport {
  bool hypothesis_met = false;  // enough closed elements
  bool holds = false;           // open sets of T(pt'L) are the down-set complements
};

/// Compares the topological modification of pt'L with the family of
/// complements of principal down-sets of closed elements.
UpperTopologyReport upper_topology_check(const PointSpace& ps);

/// lim of every proper principal filter is a closed element.
bool has_closed_limits(const FiniteConvLattice& l);

/// The almost-antisymmetry condition on the lattice side: whenever the meet
/// of two point limits lies in both point filters, the points coincide.
bool aas_in_lattice(const PointSpace& ps);

}  // namespace fincov

#endif

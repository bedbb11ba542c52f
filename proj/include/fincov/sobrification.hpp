#ifndef FINCOV_SOBRIFICATION_HPP
#define FINCOV_SOBRIFICATION_HPP

#include <string>
#include <vector>

#include "fincov/convergence.hpp"

namespace fincov {

/// c-irreducibility: C (not necessarily closed) lies inside one part of any
/// cover by two closed sets. Checked both against closed covers and against
/// pairs of open sets meeting C; the two forms must agree.
bool is_c_irreducible(const FiniteConvergence& conv, Subset c);

/// The nonempty irreducible closed sets of a finite topology, in ascending
/// mask order.
std::vector<Subset> irreducible_closed_sets(const FiniteTopology& top);

/// The sobrification of a finite topological space: irreducible closed sets
/// with opens ^sO = { C : C meets O }.
class Sobrification {
 public:
  static Sobrification build(FiniteTopology base);

  const FiniteTopology& base() const { return base_; }
  const std::vector<Subset>& s_points() const { return s_points_; }
  const FiniteTopology& s_top() const { return s_top_; }
  /// e(x) = index of the closure of {x} among the s-points.
  int e(int x) const { return e_[static_cast<std::size_t>(x)]; }
  bool e_injective() const;

 private:
  FiniteTopology base_ = antidiscrete_topology(make_points(0));
  std::vector<Subset> s_points_;
  FiniteTopology s_top_ = antidiscrete_topology(make_points(0));
  std::vector<int> e_;
};

Sobrification sobrify(const FiniteTopology& top);

/// Comparison of pt' of the powerset lattice with the sobrification.
struct SobrificationTheoremReport {
  bool t0 = false;
  bool carriers_match = false;        // pt' limit values are exactly the irreducible closed sets
  bool canonical_homeomorphism = false;
  bool oracle_homeomorphism = false;  // independent exhaustive search
  bool e_equals_q_after_h = true;     // only meaningful when t0
  bool e_dense = false;
  std::vector<std::string> failures;

  bool holds() const { return failures.empty(); }
};

SobrificationTheoremReport verify_sobrification_theorem(const FiniteTopology& top);

}  // namespace fincov

#endif

#ifndef FINCOV_PROPERTIES_HPP
#define FINCOV_PROPERTIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fincov/convergence.hpp"

namespace fincov {

enum class PropertyId {
  T0,
  T1,
  S0,
  TD,
  Antisymmetric,
  Aas,
  Sober,
  WeaklySober,
  QuasiSober,
  WeaklyQuasiSober,
  ClosedLimits,
  ClosedPrincipalLimits,
  ClosedIrreducibleLimits,
  ClosedAdherences,
  Pseudotopological,
  Topological,
  FiniteDepth,
};

const std::vector<PropertyId>& all_properties();
std::string property_name(PropertyId id);
PropertyId property_from_name(const std::string& name);  // throws UnknownProperty

/// Counterexample datum attached to a false verdict: the lexicographically
/// least violating subsets/points in scan order.
struct Witness {
  std::vector<Subset> subsets;
  std::vector<int> points;
  std::string detail;
};

struct PropertyVerdict {
  bool holds = false;
  std::optional<Witness> witness;  // present exactly when !holds
};

/// Verdict per property; false verdicts always carry a witness.
using PropertyReport = std::map<PropertyId, PropertyVerdict>;

PropertyVerdict check_property(const FiniteConvergence& conv, PropertyId id);
PropertyReport check_properties(const FiniteConvergence& conv,
                                const std::vector<PropertyId>& ids);

/// A filter is irreducible when it contains its own limit set; for the
/// principal filter of A this reads A ⊆ lim(A).
bool is_irreducible(const FiniteConvergence& conv, Subset a);

/// Compact: every meshing filter has adherence meshing A.
bool is_compact_filter(const FiniteConvergence& conv, Subset a);
/// Compactoid: every meshing filter has nonempty adherence.
bool is_compactoid_filter(const FiniteConvergence& conv, Subset a);

/// The relation {(x, y) : y ∈ lim{x}} with its order diagnostics.
/// Reflexivity is automatic from the point axiom.
struct SpecializationRelation {
  std::vector<Subset> rows;  // rows[x] = lim of the principal ultrafilter of x
  bool reflexive = true;
  bool transitive = false;
  bool antisymmetric = false;
};

SpecializationRelation specialization_preorder(const FiniteConvergence& conv);

/// Z-regularity: limits are unchanged when each principal filter is traced
/// through the family Z. An empty trace generates the trivial filter of the
/// whole carrier.
bool is_z_regular_space(const FiniteConvergence& conv, const std::vector<Subset>& z);

/// Points of lim(A) with a singleton limit equal to lim(A).
Subset generic_points(const FiniteConvergence& conv, Subset a);

}  // namespace fincov

#endif

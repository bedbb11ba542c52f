#ifndef FINCOV_ENUMERATION_HPP
#define FINCOV_ENUMERATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fincov/lattice.hpp"
#include "fincov/properties.hpp"

namespace fincov {

enum class EnumMode { FiniteDepth, Full };

/// Enumeration request. Full tables are capped at 3 points, finitely deep
/// ones at 5; both caps keep every run exhaustive and fast. When `filters`
/// is nonempty only spaces satisfying every listed property are yielded.
struct EnumSpec {
  int n = 0;
  EnumMode mode = EnumMode::FiniteDepth;
  std::vector<PropertyId> filters;

  EnumSpec() = default;
  EnumSpec(int n, EnumMode mode) : n(n), mode(mode) {}
  EnumSpec(int n, EnumMode mode, std::vector<PropertyId> filters)
      : n(n), mode(mode), filters(std::move(filters)) {}
};

/// Streams every labeled convergence of the requested kind, in a fixed
/// deterministic order.
void enumerate_spaces(const EnumSpec& spec,
                      const std::function<void(const FiniteConvergence&)>& fn);

std::vector<FiniteConvergence> enumerate_spaces(const EnumSpec& spec);

/// All labeled topologies on n points (n <= 4), via their specialization
/// preorders.
void enumerate_topologies(int n, const std::function<void(const FiniteTopology&)>& fn);

std::vector<FiniteTopology> enumerate_topologies(int n);

/// Streams the lattice catalog with every antitone limit assignment, then
/// the powerset lattices of every full-mode convergence on up to 3 points.
void generate_conv_lattices(int size_cap,
                            const std::function<void(const FiniteConvLattice&)>& fn);

/// One ordered pair of the implication survey: either the implication held
/// on the whole universe or the first counterexample in enumeration order.
struct SurveyEntry {
  PropertyId premise;
  PropertyId conclusion;
  long holds_on = 0;    // spaces satisfying the premise
  std::optional<FiniteConvergence> counterexample;
};

struct SurveyResult {
  EnumSpec spec;
  long universe_size = 0;
  std::vector<SurveyEntry> entries;  // premise-major, conclusion-minor order

  const SurveyEntry& entry(PropertyId p, PropertyId q) const;
};

SurveyResult survey(const EnumSpec& spec, const std::vector<PropertyId>& props);

}  // namespace fincov

#endif

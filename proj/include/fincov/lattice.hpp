#ifndef FINCOV_LATTICE_HPP
#define FINCOV_LATTICE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fincov/convergence.hpp"

namespace fincov {

/// A finite lattice with at most 16 elements. Meets, joins and the order
/// masks are computed and cached at construction.
class FiniteLattice {
 public:
  /// `leq(i, j)` must describe a partial order in which every pair has a
  /// meet and a join.
  static FiniteLattice build(std::vector<std::string> names,
                             const std::function<bool(int, int)>& leq);

  int size() const { return n_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(int a, int b) const { return (up_[static_cast<std::size_t>(a)] >> b) & 1u; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a * n_ + b)]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a * n_ + b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  Mask up_set(int a) const { return up_[static_cast<std::size_t>(a)]; }
  Mask down_set(int a) const { return down_[static_cast<std::size_t>(a)]; }

  int meet_of(Mask elements) const;  // empty mask gives top
  int join_of(Mask elements) const;  // empty mask gives bottom

  /// Atoms: elements covering bottom.
  std::vector<int> atoms() const;
  /// Every element is a join of atoms.
  bool atomistic() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  FiniteLattice() = default;
  std::vector<std::string> names_;
  int n_ = 0;
  std::vector<Mask> up_, down_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// An order-theoretic filter on a finite lattice. Every filter is principal,
/// so it is stored by its least element.
struct LatticeFilter {
  int min_element = -1;
  bool proper(const FiniteLattice& l) const { return min_element != l.bottom(); }
};

/// A lattice together with a limit assignment on principal filters,
/// lam(l) = lim of the upset of l. Antitone in l. The improper filter's
/// entry lam(bottom) is pinned to top and never consulted.
class FiniteConvLattice {
 public:
  static FiniteConvLattice build(LatticePtr lattice, std::vector<int> lam);

  const FiniteLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  int size() const { return lattice_->size(); }

  /// Limit of the principal filter of l; rejects the improper filter.
  int lim(int l) const {
    if (l == lattice_->bottom() && lattice_->size() > 1) throw EmptyFilterBase();
    return lam_[static_cast<std::size_t>(l)];
  }
  const std::vector<int>& lam() const { return lam_; }

  friend bool operator==(const FiniteConvLattice& a, const FiniteConvLattice& b) {
    return *a.lattice_ == *b.lattice_ && a.lam_ == b.lam_;
  }

 private:
  FiniteConvLattice(LatticePtr lattice, std::vector<int> lam)
      : lattice_(std::move(lattice)), lam_(std::move(lam)) {}
  LatticePtr lattice_;
  std::vector<int> lam_;
};

enum class Category { Lat, Frm, Cofrm };

std::string category_name(Category c);
Category category_from_name(const std::string& name);

/// A monotone map between finite lattices, element index to element index.
struct LatticeMorphism {
  LatticePtr source;
  LatticePtr target;
  std::vector<int> map;

  int operator()(int l) const { return map[static_cast<std::size_t>(l)]; }
  bool monotone() const;
};

// ---------------------------------------------------------------------------
// Operations

/// The powerset convergence lattice of a space: elements are the subsets of
/// the carrier (element index = subset mask) ordered by inclusion, and the
/// limit assignment is the limit table of the space.
FiniteConvLattice powerset_lattice(const FiniteConvergence& conv);

/// The inverse-image morphism between powerset lattices, from the powerset
/// of the target of f to the powerset of the source.
LatticeMorphism powerset_map(const SpaceMap& f);

bool is_prime_filter(const FiniteLattice& l, LatticeFilter f);
bool is_completely_prime_filter(const FiniteLattice& l, LatticeFilter f);
/// Join-prime element: nonbottom, and below a binary join only by being
/// below one of the parts.
bool is_join_prime_element(const FiniteLattice& l, int element);

struct MorphismContinuity {
  bool continuous = true;           // over the instances that could be checked
  std::vector<int> skipped;         // filters of the target whose preimage is not a filter
};

/// Pointfree continuity of phi from src to dst, checked on every proper
/// principal filter of dst. Instances where the preimage fails to be a
/// proper filter are reported, not guessed around.
MorphismContinuity is_continuous_lattice_morphism(const LatticeMorphism& phi,
                                                  const FiniteConvLattice& src,
                                                  const FiniteConvLattice& dst);

/// Closed elements: l absorbs the limit of every proper principal filter
/// containing it. Recomputed through the mesh characterization, and the two
/// must agree.
std::vector<int> closed_elements(const FiniteConvLattice& l);

/// Open elements: whenever a limit meets l, the filter contains l. The mesh
/// recomputation is asserted on atomistic lattices, where the two forms
/// provably coincide.
std::vector<int> open_elements(const FiniteConvLattice& l);

enum class ZKind { Open, Closed, Complemented, DoublePseudocomplement };

/// Pseudocomplement of l: the largest element meeting l at bottom, when one
/// exists.
std::optional<int> pseudocomplement(const FiniteLattice& l, int element);

std::vector<int> z_family(const FiniteConvLattice& l, ZKind kind);

/// Z-regularity on the lattice side: limits are unchanged when principal
/// filters are traced through Z (empty traces generate the filter of top).
bool is_z_regular_lattice(const FiniteConvLattice& l, const std::vector<int>& z);

// Small ready-made lattices for catalogs and tests.
FiniteLattice chain_lattice(int k);
FiniteLattice boolean_lattice(int bits);
FiniteLattice m3_lattice();
FiniteLattice n5_lattice();
FiniteLattice diamond_stack_lattice(int diamonds);

}  // namespace fincov

#endif

#include "fincov/enumeration.hpp"

#include <algorithm>

namespace fincov {

namespace {

void enumerate_finite_depth(int n, const std::function<void(const FiniteConvergence&)>& fn) {
  if (n > 5) throw TooLarge("finitely deep enumeration is capped at 5 points");
  auto carrier = make_points(n);
  const int bits = n * (n - 1);
  for (Mask code = 0; code < (Mask(1) << bits); ++code) {
    std::vector<Subset> rows(static_cast<std::size_t>(n));
    int bit = 0;
    for (int x = 0; x < n; ++x) {
      Subset row = singleton(x);
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if ((code >> bit) & 1u) row = row.with(y);
        ++bit;
      }
      rows[static_cast<std::size_t>(x)] = row;
    }
    fn(FiniteConvergence::finite_depth(carrier, rows));
  }
}

// Backtracking over full tables, assigning limits to subsets in decreasing
// size so the antitone constraint prunes as early as possible.
void enumerate_full(int n, const std::function<void(const FiniteConvergence&)>& fn) {
  if (n > 3) throw TooLarge("full-table enumeration is capped at 3 points");
  auto carrier = make_points(n);
  if (n == 0) {
    fn(FiniteConvergence::build(carrier, std::vector<Subset>(1)));
    return;
  }
  std::vector<Mask> order;  // decreasing popcount, then ascending mask
  for (Mask m = 1; m < subset_count(n); ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  std::vector<Subset> limits(subset_count(n));
  const Subset all = full_set(n);

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      fn(FiniteConvergence::build(carrier, limits));
      return;
    }
    const Mask m = order[idx];
    Subset floor;
    for (int x = 0; x < n; ++x) {
      const Mask sup = m | (Mask(1) << x);
      if (sup != m) floor = floor | limits[sup];  // immediate supersets are already assigned
    }
    if (std::popcount(m) == 1) floor = floor | Subset(m);
    for (Mask s = floor.bits;; s = (s + 1) | floor.bits) {
      limits[m] = Subset(s);
      self(self, idx + 1);
      if (s == all.bits) break;
    }
    limits[m] = Subset();
  };
  rec(rec, 0);
}

}  // namespace

void enumerate_spaces(const EnumSpec& spec,
                      const std::function<void(const FiniteConvergence&)>& fn) {
  if (spec.n < 0) throw Error("negative carrier size");
  auto sink = fn;
  if (!spec.filters.empty()) {
    sink = [&](const FiniteConvergence& c) {
      for (PropertyId p : spec.filters)
        if (!check_property(c, p).holds) return;
      fn(c);
    };
  }
  if (spec.mode == EnumMode::FiniteDepth)
    enumerate_finite_depth(spec.n, sink);
  else
    enumerate_full(spec.n, sink);
}

std::vector<FiniteConvergence> enumerate_spaces(const EnumSpec& spec) {
  std::vector<FiniteConvergence> out;
  enumerate_spaces(spec, [&](const FiniteConvergence& c) { out.push_back(c); });
  return out;
}

void enumerate_topologies(int n, const std::function<void(const FiniteTopology&)>& fn) {
  if (n > 4) throw TooLarge("topology enumeration is capped at 4 points");
  auto carrier = make_points(n);
  const int bits = n * (n - 1);
  for (Mask code = 0; code < (Mask(1) << bits); ++code) {
    // Decode a reflexive relation r and keep it only when transitive.
    std::vector<Subset> succ(static_cast<std::size_t>(n));
    int bit = 0;
    for (int x = 0; x < n; ++x) {
      Subset row = singleton(x);
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if ((code >> bit) & 1u) row = row.with(y);
        ++bit;
      }
      succ[static_cast<std::size_t>(x)] = row;
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = 0; y < n && transitive; ++y)
        if (succ[static_cast<std::size_t>(x)].contains(y) &&
            !succ[static_cast<std::size_t>(y)].subset_of(succ[static_cast<std::size_t>(x)]))
          transitive = false;
    if (!transitive) continue;
    // Opens: sets closed under passing to r-predecessors, so that the
    // specialization relation of the topology is exactly r.
    std::vector<Subset> opens;
    for (Mask m = 0; m < subset_count(n); ++m) {
      bool ok = true;
      for (int y = 0; y < n && ok; ++y) {
        if (!Subset(m).contains(y)) continue;
        for (int x = 0; x < n && ok; ++x)
          if (succ[static_cast<std::size_t>(x)].contains(y) && !Subset(m).contains(x)) ok = false;
      }
      if (ok) opens.push_back(Subset(m));
    }
    fn(FiniteTopology::build(carrier, std::move(opens)));
  }
}

std::vector<FiniteTopology> enumerate_topologies(int n) {
  std::vector<FiniteTopology> out;
  enumerate_topologies(n, [&](const FiniteTopology& t) { out.push_back(t); });
  return out;
}

namespace {

// All antitone limit assignments on a lattice, with lam(bottom) pinned to
// top. Elements are processed in an order compatible with the lattice order.
void enumerate_antitone(const LatticePtr& lattice,
                        const std::function<void(const FiniteConvLattice&)>& fn) {
  const FiniteLattice& l = *lattice;
  const int n = l.size();
  std::vector<int> order;
  for (int e = 0; e < n; ++e)
    if (e != l.bottom()) order.push_back(e);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(l.down_set(a)) < std::popcount(l.down_set(b));
  });
  std::vector<int> lam(static_cast<std::size_t>(n), -1);
  lam[static_cast<std::size_t>(l.bottom())] = l.top();

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      fn(FiniteConvLattice::build(lattice, lam));
      return;
    }
    const int e = order[idx];
    // lam(e) must sit below lam of every strictly smaller processed element.
    int cap = l.top();
    for (std::size_t j = 0; j < idx; ++j) {
      const int p = order[j];
      if (l.leq(p, e)) cap = l.meet(cap, lam[static_cast<std::size_t>(p)]);
    }
    for (int v = 0; v < n; ++v) {
      if (!l.leq(v, cap)) continue;
      lam[static_cast<std::size_t>(e)] = v;
      self(self, idx + 1);
    }
    lam[static_cast<std::size_t>(e)] = -1;
  };
  rec(rec, 0);
}

}  // namespace

void generate_conv_lattices(int size_cap,
                            const std::function<void(const FiniteConvLattice&)>& fn) {
  if (size_cap > 16) throw TooLarge("lattice generation is capped at 16 elements");
  std::vector<FiniteLattice> catalog;
  for (int k = 1; k <= 5; ++k) catalog.push_back(chain_lattice(k));
  catalog.push_back(boolean_lattice(2));
  catalog.push_back(boolean_lattice(3));
  catalog.push_back(m3_lattice());
  catalog.push_back(n5_lattice());
  catalog.push_back(diamond_stack_lattice(2));
  for (const FiniteLattice& l : catalog) {
    if (l.size() > size_cap) continue;
    enumerate_antitone(std::make_shared<const FiniteLattice>(l), fn);
  }
  for (int n = 1; n <= 3; ++n) {
    if ((1 << n) > size_cap) continue;
    enumerate_spaces({n, EnumMode::Full},
                     [&](const FiniteConvergence& c) { fn(powerset_lattice(c)); });
  }
}

const SurveyEntry& SurveyResult::entry(PropertyId p, PropertyId q) const {
  for (const SurveyEntry& e : entries)
    if (e.premise == p && e.conclusion == q) return e;
  throw UnknownProperty("survey pair not present");
}

SurveyResult survey(const EnumSpec& spec, const std::vector<PropertyId>& props) {
  SurveyResult result;
  result.spec = spec;
  for (PropertyId p : props)
    for (PropertyId q : props) {
      if (p == q) continue;
      result.entries.push_back(SurveyEntry{p, q, 0, std::nullopt});
    }
  enumerate_spaces(spec, [&](const FiniteConvergence& c) {
    ++result.universe_size;
    std::map<PropertyId, bool> profile;
    for (PropertyId p : props) profile[p] = check_property(c, p).holds;
    for (SurveyEntry& e : result.entries) {
      if (!profile[e.premise]) continue;
      ++e.holds_on;
      if (!profile[e.conclusion] && !e.counterexample) e.counterexample = c;
    }
  });
  return result;
}

}  // namespace fincov

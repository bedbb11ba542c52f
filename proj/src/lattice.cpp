#include "fincov/lattice.hpp"

#include <algorithm>
#include <bit>

namespace fincov {

FiniteLattice FiniteLattice::build(std::vector<std::string> names,
                                   const std::function<bool(int, int)>& leq) {
  FiniteLattice l;
  l.n_ = static_cast<int>(names.size());
  if (l.n_ == 0) throw NotAPartialOrder("a lattice needs at least one element");
  if (l.n_ > 16) throw TooLarge("lattices support at most 16 elements");
  l.names_ = std::move(names);
  const int n = l.n_;
  for (int i = 0; i < n; ++i)
    if (!leq(i, i)) throw NotAPartialOrder("not reflexive at " + l.names_[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) throw NotAPartialOrder("not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (leq(i, j) && leq(j, k) && !leq(i, k)) throw NotAPartialOrder("not transitive");
    }
  l.up_.assign(static_cast<std::size_t>(n), 0);
  l.down_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) {
        l.up_[static_cast<std::size_t>(i)] |= Mask(1) << j;
        l.down_[static_cast<std::size_t>(j)] |= Mask(1) << i;
      }
  l.meet_.assign(static_cast<std::size_t>(n * n), -1);
  l.join_.assign(static_cast<std::size_t>(n * n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Mask lower = l.down_[static_cast<std::size_t>(a)] & l.down_[static_cast<std::size_t>(b)];
      int m = -1;
      for (int c = 0; c < n; ++c)
        if ((lower >> c) & 1u) {
          if ((lower & ~l.down_[static_cast<std::size_t>(c)]) == 0) m = c;
        }
      if (m < 0) throw MeetMissing(a, b);
      l.meet_[static_cast<std::size_t>(a * n + b)] = m;
      const Mask upper = l.up_[static_cast<std::size_t>(a)] & l.up_[static_cast<std::size_t>(b)];
      int j = -1;
      for (int c = 0; c < n; ++c)
        if ((upper >> c) & 1u) {
          if ((upper & ~l.up_[static_cast<std::size_t>(c)]) == 0) j = c;
        }
      if (j < 0) throw JoinMissing(a, b);
      l.join_[static_cast<std::size_t>(a * n + b)] = j;
    }
  for (int c = 0; c < n; ++c) {
    if (std::popcount(l.up_[static_cast<std::size_t>(c)]) == n) l.bottom_ = c;
    if (std::popcount(l.down_[static_cast<std::size_t>(c)]) == n) l.top_ = c;
  }
  if (l.bottom_ < 0 || l.top_ < 0)
    throw NotAPartialOrder("finite lattice must have bottom and top");
  return l;
}

int FiniteLattice::meet_of(Mask elements) const {
  int acc = top_;
  for (int c = 0; c < n_; ++c)
    if ((elements >> c) & 1u) acc = meet(acc, c);
  return acc;
}

int FiniteLattice::join_of(Mask elements) const {
  int acc = bottom_;
  for (int c = 0; c < n_; ++c)
    if ((elements >> c) & 1u) acc = join(acc, c);
  return acc;
}

std::vector<int> FiniteLattice::atoms() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    if (a == bottom_) continue;
    if (down_set(a) == ((Mask(1) << a) | (Mask(1) << bottom_))) out.push_back(a);
  }
  return out;
}

bool FiniteLattice::atomistic() const {
  const auto at = atoms();
  for (int l = 0; l < n_; ++l) {
    Mask below = 0;
    for (int a : at)
      if (leq(a, l)) below |= Mask(1) << a;
    if (join_of(below) != l) return false;
  }
  return true;
}

FiniteConvLattice FiniteConvLattice::build(LatticePtr lattice, std::vector<int> lam) {
  const int n = lattice->size();
  if (static_cast<int>(lam.size()) != n) throw Error("limit assignment must cover every element");
  for (int v : lam)
    if (v < 0 || v >= n) throw Error("limit assignment value outside the lattice");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == lattice->bottom() || b == lattice->bottom()) continue;
      if (lattice->leq(a, b) &&
          !lattice->leq(lam[static_cast<std::size_t>(b)], lam[static_cast<std::size_t>(a)]))
        throw NotAntitone(a, b);
    }
  lam[static_cast<std::size_t>(lattice->bottom())] = lattice->top();
  return FiniteConvLattice(std::move(lattice), std::move(lam));
}

std::string category_name(Category c) {
  switch (c) {
    case Category::Lat: return "lat";
    case Category::Frm: return "frm";
    case Category::Cofrm: return "cofrm";
  }
  return "?";
}

Category category_from_name(const std::string& name) {
  if (name == "lat") return Category::Lat;
  if (name == "frm") return Category::Frm;
  if (name == "cofrm") return Category::Cofrm;
  throw Error("unknown category: " + name);
}

bool LatticeMorphism::monotone() const {
  for (int a = 0; a < source->size(); ++a)
    for (int b = 0; b < source->size(); ++b)
      if (source->leq(a, b) && !target->leq(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

FiniteConvLattice powerset_lattice(const FiniteConvergence& conv) {
  const int n = conv.size();
  if (n > 4) throw TooLarge("powerset lattice of a carrier with more than 4 points");
  std::vector<std::string> names;
  for (Mask m = 0; m < subset_count(n); ++m) {
    if (m == 0) {
      names.push_back("nil");
      continue;
    }
    std::string name;
    for (int x = 0; x < n; ++x)
      if ((m >> x) & 1u) {
        if (!name.empty()) name += '_';
        name += conv.carrier().name(x);
      }
    names.push_back(name);
  }
  auto lattice = std::make_shared<const FiniteLattice>(FiniteLattice::build(
      std::move(names), [](int a, int b) { return (Mask(a) & ~Mask(b)) == 0; }));
  std::vector<int> lam(subset_count(n));
  lam[0] = lattice->top();
  for (Mask m = 1; m < subset_count(n); ++m)
    lam[m] = static_cast<int>(conv.limit(Subset(m)).bits);
  return FiniteConvLattice::build(std::move(lattice), std::move(lam));
}

LatticeMorphism powerset_map(const SpaceMap& f) {
  // Element index equals subset mask in a powerset lattice.
  const FiniteConvLattice py = powerset_lattice(discrete_conv(f.target_ptr()));
  const FiniteConvLattice px = powerset_lattice(discrete_conv(f.source_ptr()));
  std::vector<int> map(subset_count(f.target().size()));
  for (Mask b = 0; b < subset_count(f.target().size()); ++b)
    map[b] = static_cast<int>(f.preimage(Subset(b)).bits);
  return LatticeMorphism{py.lattice_ptr(), px.lattice_ptr(), std::move(map)};
}

bool is_prime_filter(const FiniteLattice& l, LatticeFilter f) {
  if (!f.proper(l)) return false;
  const int p = f.min_element;
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.leq(p, l.join(a, b)) && !l.leq(p, a) && !l.leq(p, b)) return false;
  return true;
}

bool is_completely_prime_filter(const FiniteLattice& l, LatticeFilter f) {
  if (!f.proper(l)) return false;
  const int p = f.min_element;
  // The worst offender is the join of all non-members.
  Mask outside = 0;
  for (int a = 0; a < l.size(); ++a)
    if (!l.leq(p, a)) outside |= Mask(1) << a;
  return !l.leq(p, l.join_of(outside));
}

bool is_join_prime_element(const FiniteLattice& l, int element) {
  if (element == l.bottom()) return false;
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.leq(element, l.join(a, b)) && !l.leq(element, a) && !l.leq(element, b)) return false;
  return true;
}

MorphismContinuity is_continuous_lattice_morphism(const LatticeMorphism& phi,
                                                  const FiniteConvLattice& src,
                                                  const FiniteConvLattice& dst) {
  if (!phi.monotone()) throw NotMonotone();
  const FiniteLattice& ls = src.lattice();
  const FiniteLattice& ld = dst.lattice();
  MorphismContinuity out;
  for (int m = 0; m < ld.size(); ++m) {
    if (m == ld.bottom() && ld.size() > 1) continue;  // improper filter
    // Preimage of the upset of m.
    Mask pre = 0;
    for (int a = 0; a < ls.size(); ++a)
      if (ld.leq(m, phi(a))) pre |= Mask(1) << a;
    if (pre == 0) {
      out.skipped.push_back(m);
      continue;
    }
    const int g = ls.meet_of(pre);
    if (!ld.leq(m, phi(g)) || g == ls.bottom()) {
      // not a filter, or the improper one
      out.skipped.push_back(m);
      continue;
    }
    if (!ld.leq(dst.lim(m), phi(src.lim(g)))) out.continuous = false;
  }
  return out;
}

namespace {

bool closed_membership(const FiniteConvLattice& cl, int l) {
  const FiniteLattice& lat = cl.lattice();
  for (int m = 0; m < lat.size(); ++m) {
    if (m == lat.bottom() && lat.size() > 1) continue;
    if (lat.leq(m, l) && !lat.leq(cl.lim(m), l)) return false;
  }
  return true;
}

bool closed_mesh(const FiniteConvLattice& cl, int l) {
  const FiniteLattice& lat = cl.lattice();
  for (int m = 0; m < lat.size(); ++m) {
    if (m == lat.bottom() && lat.size() > 1) continue;
    if (lat.meet(m, l) != lat.bottom() && !lat.leq(cl.lim(m), l)) return false;
  }
  return true;
}

bool open_membership(const FiniteConvLattice& cl, int l) {
  const FiniteLattice& lat = cl.lattice();
  for (int m = 0; m < lat.size(); ++m) {
    if (m == lat.bottom() && lat.size() > 1) continue;
    if (lat.meet(cl.lim(m), l) != lat.bottom() && !lat.leq(m, l)) return false;
  }
  return true;
}

bool open_mesh(const FiniteConvLattice& cl, int l) {
  const FiniteLattice& lat = cl.lattice();
  for (int m = 0; m < lat.size(); ++m) {
    if (m == lat.bottom() && lat.size() > 1) continue;
    if (lat.meet(cl.lim(m), l) != lat.bottom() && lat.meet(m, l) == lat.bottom()) return false;
  }
  return true;
}

}  // namespace

std::vector<int> closed_elements(const FiniteConvLattice& l) {
  std::vector<int> out;
  for (int e = 0; e < l.size(); ++e) {
    const bool member = closed_membership(l, e);
    if (member != closed_mesh(l, e))
      throw Error("closed-element characterizations disagree (membership vs mesh)");
    if (member) out.push_back(e);
  }
  return out;
}

std::vector<int> open_elements(const FiniteConvLattice& l) {
  const bool atomistic = l.lattice().atomistic();
  std::vector<int> out;
  for (int e = 0; e < l.size(); ++e) {
    const bool member = open_membership(l, e);
    if (atomistic && member != open_mesh(l, e))
      throw Error("open-element characterizations disagree on an atomistic lattice");
    if (member) out.push_back(e);
  }
  return out;
}

std::optional<int> pseudocomplement(const FiniteLattice& l, int element) {
  Mask disjoint = 0;
  for (int m = 0; m < l.size(); ++m)
    if (l.meet(m, element) == l.bottom()) disjoint |= Mask(1) << m;
  const int j = l.join_of(disjoint);
  if (l.meet(j, element) != l.bottom()) return std::nullopt;
  return j;
}

std::vector<int> z_family(const FiniteConvLattice& l, ZKind kind) {
  const FiniteLattice& lat = l.lattice();
  std::vector<int> out;
  switch (kind) {
    case ZKind::Open:
      return open_elements(l);
    case ZKind::Closed:
      return closed_elements(l);
    case ZKind::Complemented:
      for (int e = 0; e < lat.size(); ++e)
        for (int m = 0; m < lat.size(); ++m)
          if (lat.meet(e, m) == lat.bottom() && lat.join(e, m) == lat.top()) {
            out.push_back(e);
            break;
          }
      return out;
    case ZKind::DoublePseudocomplement: {
      std::vector<int> star(static_cast<std::size_t>(lat.size()));
      for (int e = 0; e < lat.size(); ++e) {
        auto p = pseudocomplement(lat, e);
        if (!p) throw NoPseudocomplement(e);
        star[static_cast<std::size_t>(e)] = *p;
      }
      for (int e = 0; e < lat.size(); ++e)
        if (star[static_cast<std::size_t>(star[static_cast<std::size_t>(e)])] == e) out.push_back(e);
      return out;
    }
  }
  return out;
}

bool is_z_regular_lattice(const FiniteConvLattice& l, const std::vector<int>& z) {
  const FiniteLattice& lat = l.lattice();
  for (int e = 0; e < lat.size(); ++e) {
    if (e == lat.bottom() && lat.size() > 1) continue;
    Mask trace = 0;
    for (int zi : z)
      if (lat.leq(e, zi)) trace |= Mask(1) << zi;
    const int m = lat.meet_of(trace);  // empty trace gives top
    if (l.lim(e) != l.lim(m)) return false;
  }
  return true;
}

FiniteLattice chain_lattice(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("c" + std::to_string(i));
  return FiniteLattice::build(std::move(names), [](int a, int b) { return a <= b; });
}

FiniteLattice boolean_lattice(int bits) {
  std::vector<std::string> names;
  for (Mask m = 0; m < (Mask(1) << bits); ++m) {
    std::string name = "b";
    for (int i = 0; i < bits; ++i) name += ((m >> i) & 1u) ? '1' : '0';
    names.push_back(name);
  }
  return FiniteLattice::build(std::move(names),
                              [](int a, int b) { return (Mask(a) & ~Mask(b)) == 0; });
}

FiniteLattice m3_lattice() {
  // bottom, three incomparable atoms, top
  auto leq = [](int a, int b) { return a == b || a == 0 || b == 4; };
  return FiniteLattice::build({"bot", "a", "b", "c", "top"}, leq);
}

FiniteLattice n5_lattice() {
  // bot < a < c < top and bot < b < top
  auto leq = [](int a, int b) {
    if (a == b) return true;
    if (a == 0) return true;
    if (b == 4) return true;
    return a == 1 && b == 3;  // a < c
  };
  return FiniteLattice::build({"bot", "a", "b", "c", "top"}, leq);
}

FiniteLattice diamond_stack_lattice(int diamonds) {
  // Diamonds glued top-to-bottom: bot, (a1,b1), m1, (a2,b2), m2, ... top.
  // Levels: 0 = bot, 2k-1 = the two incomparable elements of diamond k,
  // 2k = the gluing point (top for the last diamond).
  const int n = 1 + 3 * diamonds;
  std::vector<std::string> names;
  names.push_back("bot");
  for (int d = 1; d <= diamonds; ++d) {
    names.push_back("a" + std::to_string(d));
    names.push_back("b" + std::to_string(d));
    names.push_back(d == diamonds ? std::string("top") : "m" + std::to_string(d));
  }
  auto level = [](int e) {
    if (e == 0) return 0;
    const int d = (e - 1) / 3;
    return (e - 1) % 3 == 2 ? 2 * d + 2 : 2 * d + 1;
  };
  // Same odd level means the two incomparable halves of one diamond.
  auto leq = [level](int a, int b) { return a == b || level(a) < level(b); };
  (void)n;
  return FiniteLattice::build(std::move(names), leq);
}

}  // namespace fincov

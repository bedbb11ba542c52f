#include "fincov/points.hpp"

#include <algorithm>

namespace fincov {

std::vector<int> extract_points(const FiniteConvLattice& l, Category cat) {
  const FiniteLattice& lat = l.lattice();
  std::vector<int> out;
  for (int p = 0; p < lat.size(); ++p) {
    const LatticeFilter f{p};
    if (!f.proper(lat)) continue;
    bool prime = false;
    switch (cat) {
      case Category::Lat: prime = is_prime_filter(lat, f); break;
      case Category::Frm: prime = is_completely_prime_filter(lat, f); break;
      case Category::Cofrm: prime = is_join_prime_element(lat, p); break;
    }
    if (!prime) continue;
    if (!lat.leq(p, l.lim(p))) continue;  // the filter must contain its limit
    out.push_back(p);
  }
  return out;
}

PointSpace PointSpace::build(std::shared_ptr<const FiniteConvLattice> base, Category cat) {
  PointSpace ps;
  ps.base_ = std::move(base);
  ps.cat_ = cat;
  ps.reps_ = extract_points(*ps.base_, cat);
  const FiniteLattice& lat = ps.base_->lattice();
  const int np = static_cast<int>(ps.reps_.size());
  ps.bullet_.assign(static_cast<std::size_t>(lat.size()), Subset());
  for (int e = 0; e < lat.size(); ++e) {
    Subset b;
    for (int i = 0; i < np; ++i)
      if (lat.leq(ps.reps_[static_cast<std::size_t>(i)], e)) b = b.with(i);
    ps.bullet_[static_cast<std::size_t>(e)] = b;
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(np));
  for (int i = 0; i < np; ++i) names.push_back(lat.name(ps.reps_[static_cast<std::size_t>(i)]));
  auto carrier = make_points(std::move(names));
  std::vector<Subset> limits(subset_count(np));
  for (Mask f = 1; f < subset_count(np); ++f) {
    const LatticeFilter circ = ps.circle_filter(Subset(f));
    limits[f] = ps.bullet_[static_cast<std::size_t>(ps.base_->lim(circ.min_element))];
  }
  ps.conv_ = FiniteConvergence::build(std::move(carrier), std::move(limits));
  return ps;
}

std::optional<int> PointSpace::point_of_rep(int element) const {
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (reps_[i] == element) return static_cast<int>(i);
  return std::nullopt;
}

LatticeFilter PointSpace::circle_filter(Subset points_set) const {
  if (points_set.empty()) throw EmptyFilterBase();
  const FiniteLattice& lat = base_->lattice();
  Mask trace = 0;
  for (int e = 0; e < lat.size(); ++e)
    if (points_set.subset_of(bullet_[static_cast<std::size_t>(e)])) trace |= Mask(1) << e;
  const int min = lat.meet_of(trace);  // trace is nonempty: it contains top
  if (!points_set.subset_of(bullet_[static_cast<std::size_t>(min)]))
    throw Error("circle trace is not a filter");  // cannot happen: bullets meet-commute
  return LatticeFilter{min};
}

PtPrime pt_prime(const PointSpace& ps) {
  const FiniteConvLattice& l = ps.base();
  const FiniteLattice& lat = l.lattice();
  // Classes in the order of their limit value in the lattice.
  std::vector<int> class_reps;
  for (int e = 0; e < lat.size(); ++e) {
    for (int p : ps.reps())
      if (l.lim(p) == e) {
        class_reps.push_back(e);
        break;
      }
  }
  std::vector<int> q_table(static_cast<std::size_t>(ps.point_count()));
  for (int i = 0; i < ps.point_count(); ++i) {
    const int v = l.lim(ps.rep(i));
    q_table[static_cast<std::size_t>(i)] =
        static_cast<int>(std::find(class_reps.begin(), class_reps.end(), v) - class_reps.begin());
  }
  std::vector<std::string> names;
  names.reserve(class_reps.size());
  for (int e : class_reps) names.push_back(lat.name(e));
  SpaceMap q(ps.conv().carrier_ptr(), make_points(std::move(names)), std::move(q_table));
  FiniteConvergence conv = quotient_conv(q, ps.conv());
  return PtPrime{std::move(conv), QuotientMap{std::move(q), std::move(class_reps)}};
}

SpaceMap pt_morphism(const LatticeMorphism& phi, const PointSpace& of_source,
                     const PointSpace& of_target) {
  // phi : L -> L'; points of L' pull back to points of L.
  const FiniteLattice& ls = *phi.source;
  const FiniteLattice& ld = *phi.target;
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(of_target.point_count()));
  for (int i = 0; i < of_target.point_count(); ++i) {
    const int p = of_target.rep(i);
    Mask pre = 0;
    for (int a = 0; a < ls.size(); ++a)
      if (ld.leq(p, phi(a))) pre |= Mask(1) << a;
    if (pre == 0) throw NotAPoint();
    const int g = ls.meet_of(pre);
    if (!ld.leq(p, phi(g))) throw NotAPoint();  // preimage is not a filter
    auto idx = of_source.point_of_rep(g);
    if (!idx) throw NotAPoint();
    table.push_back(*idx);
  }
  return SpaceMap(of_target.conv().carrier_ptr(), of_source.conv().carrier_ptr(),
                  std::move(table));
}

SpaceMap canonical_point_embedding(const FiniteConvergence& conv, const PointSpace& ps) {
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(conv.size()));
  for (int x = 0; x < conv.size(); ++x) {
    auto idx = ps.point_of_rep(static_cast<int>(singleton(x).bits));
    if (!idx) throw NotAPoint();
    table.push_back(*idx);
  }
  return SpaceMap(conv.carrier_ptr(), ps.conv().carrier_ptr(), std::move(table));
}

EnoughElements enough_elements(const PointSpace& ps) {
  const int np = ps.point_count();
  const auto closed_elts = closed_elements(ps.base());
  const auto open_elts = open_elements(ps.base());
  EnoughElements out{true, true};
  for (Mask m = 0; m < subset_count(np); ++m) {
    const SetStatus st = set_status(ps.conv(), Subset(m));
    if (st.closed) {
      bool hit = false;
      for (int c : closed_elts)
        if (ps.bullet(c) == Subset(m)) hit = true;
      if (!hit) out.enough_closed = false;
    }
    if (st.open) {
      bool hit = false;
      for (int u : open_elts)
        if (ps.bullet(u) == Subset(m)) hit = true;
      if (!hit) out.enough_open = false;
    }
  }
  return out;
}

UpperTopologyReport upper_topology_check(const PointSpace& ps) {
  UpperTopologyReport report;
  report.hypothesis_met = enough_elements(ps).enough_closed;
  if (!report.hypothesis_met) return report;

  const PtPrime pp = pt_prime(ps);
  const FiniteTopology t = topological_modification(pp.conv);
  const FiniteLattice& lat = ps.base().lattice();
  const int nc = static_cast<int>(pp.quotient.class_reps.size());

  std::vector<bool> family(subset_count(nc), false);
  for (int c : closed_elements(ps.base())) {
    Subset down;
    for (int v = 0; v < nc; ++v)
      if (lat.leq(pp.quotient.class_reps[static_cast<std::size_t>(v)], c)) down = down.with(v);
    family[(full_set(nc) - down).bits] = true;
  }
  // Close under union and intersection before comparing.
  bool grew = true;
  while (grew) {
    grew = false;
    for (Mask a = 0; a < subset_count(nc); ++a) {
      if (!family[a]) continue;
      for (Mask b = 0; b < subset_count(nc); ++b) {
        if (!family[b]) continue;
        if (!family[a | b]) family[a | b] = grew = true;
        if (!family[a & b]) family[a & b] = grew = true;
      }
    }
  }
  report.holds = true;
  for (Mask m = 0; m < subset_count(nc); ++m)
    if (family[m] != t.is_open(Subset(m))) report.holds = false;
  return report;
}

bool has_closed_limits(const FiniteConvLattice& l) {
  const FiniteLattice& lat = l.lattice();
  const auto closed = closed_elements(l);
  for (int m = 0; m < lat.size(); ++m) {
    if (m == lat.bottom() && lat.size() > 1) continue;
    if (std::find(closed.begin(), closed.end(), l.lim(m)) == closed.end()) return false;
  }
  return true;
}

bool aas_in_lattice(const PointSpace& ps) {
  const FiniteConvLattice& l = ps.base();
  const FiniteLattice& lat = l.lattice();
  for (int x : ps.reps())
    for (int y : ps.reps()) {
      if (x == y) continue;
      const int m = lat.meet(l.lim(x), l.lim(y));
      if (lat.leq(x, m) && lat.leq(y, m)) return false;
    }
  return true;
}

}  // namespace fincov

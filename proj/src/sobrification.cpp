#include "fincov/sobrification.hpp"

#include <algorithm>

#include "fincov/points.hpp"
#include "fincov/properties.hpp"

namespace fincov {

bool is_c_irreducible(const FiniteConvergence& conv, Subset c) {
  const int n = conv.size();
  std::vector<Subset> closed, open;
  for (Mask m = 0; m < subset_count(n); ++m) {
    const SetStatus st = set_status(conv, Subset(m));
    if (st.closed) closed.push_back(Subset(m));
    if (st.open) open.push_back(Subset(m));
  }
  bool by_closed_covers = true;
  for (Subset d : closed)
    for (Subset f : closed)
      if (c.subset_of(d | f) && !c.subset_of(d) && !c.subset_of(f)) by_closed_covers = false;
  bool by_open_pairs = true;
  for (Subset o : open)
    for (Subset u : open)
      if (o.meets(c) && u.meets(c) && !(o & u).meets(c)) by_open_pairs = false;
  if (by_closed_covers != by_open_pairs)
    throw Error("c-irreducibility characterizations disagree (closed covers vs open pairs)");
  return by_closed_covers;
}

std::vector<Subset> irreducible_closed_sets(const FiniteTopology& top) {
  const int n = top.size();
  std::vector<Subset> closed;
  for (Mask m = 0; m < subset_count(n); ++m)
    if (top.is_closed(Subset(m))) closed.push_back(Subset(m));
  std::vector<Subset> out;
  for (Subset c : closed) {
    if (c.empty()) continue;
    bool irreducible = true;
    for (Subset d : closed)
      for (Subset f : closed)
        if (c.subset_of(d | f) && !c.subset_of(d) && !c.subset_of(f)) irreducible = false;
    if (irreducible) out.push_back(c);
  }
  return out;
}

Sobrification Sobrification::build(FiniteTopology base) {
  Sobrification s;
  s.base_ = std::move(base);
  s.s_points_ = irreducible_closed_sets(s.base_);
  const int np = static_cast<int>(s.s_points_.size());

  auto s_of = [&](Subset o) {
    Subset out;
    for (int i = 0; i < np; ++i)
      if (s.s_points_[static_cast<std::size_t>(i)].meets(o)) out = out.with(i);
    return out;
  };
  for (Subset o : s.base_.opens())
    for (Subset u : s.base_.opens())
      if (s_of(o & u) != (s_of(o) & s_of(u)))
        throw Error("the lifted opens do not commute with intersections");

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(np));
  for (Subset c : s.s_points_) {
    std::string name = "C";
    for (int x = 0; x < s.base_.size(); ++x)
      if (c.contains(x)) name += "_" + s.base_.carrier().name(x);
    names.push_back(name);
  }
  std::vector<Subset> s_opens;
  for (Subset o : s.base_.opens()) s_opens.push_back(s_of(o));
  s.s_top_ = FiniteTopology::build(make_points(std::move(names)), std::move(s_opens));

  s.e_.reserve(static_cast<std::size_t>(s.base_.size()));
  for (int x = 0; x < s.base_.size(); ++x) {
    const Subset cl = s.base_.closure(singleton(x));
    const auto it = std::find(s.s_points_.begin(), s.s_points_.end(), cl);
    if (it == s.s_points_.end()) throw Error("point closure is not an irreducible closed set");
    s.e_.push_back(static_cast<int>(it - s.s_points_.begin()));
  }

  // The construction must land on a sober space.
  if (!check_property(conv_of_topology(s.s_top_), PropertyId::Sober).holds)
    throw Error("sobrification failed to produce a sober space");
  return s;
}

bool Sobrification::e_injective() const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    for (std::size_t j = i + 1; j < e_.size(); ++j)
      if (e_[i] == e_[j]) return false;
  return true;
}

Sobrification sobrify(const FiniteTopology& top) { return Sobrification::build(top); }

SobrificationTheoremReport verify_sobrification_theorem(const FiniteTopology& top) {
  SobrificationTheoremReport report;
  const FiniteConvergence conv = conv_of_topology(top);
  report.t0 = check_property(conv, PropertyId::T0).holds;

  const auto lattice = std::make_shared<const FiniteConvLattice>(powerset_lattice(conv));
  const PointSpace ps = PointSpace::build(lattice, Category::Lat);
  const PtPrime pp = pt_prime(ps);
  const Sobrification sob = sobrify(top);

  // In the powerset lattice, element indices are subset masks, so the class
  // values of pt' can be compared with the irreducible closed sets directly.
  std::vector<Subset> class_values;
  for (int e : pp.quotient.class_reps) class_values.push_back(Subset(static_cast<Mask>(e)));
  report.carriers_match = class_values == sob.s_points();
  if (!report.carriers_match) report.failures.push_back("class values differ from irreducible closed sets");

  const FiniteConvergence s_conv = conv_of_topology(sob.s_top());
  if (report.carriers_match) {
    report.canonical_homeomorphism = pp.conv.table() == s_conv.table();
    if (!report.canonical_homeomorphism)
      report.failures.push_back("identity on class values is not a homeomorphism");
  }
  report.oracle_homeomorphism = find_homeomorphism(pp.conv, s_conv).has_value();
  if (!report.oracle_homeomorphism)
    report.failures.push_back("no homeomorphism found by exhaustive search");

  if (report.t0 && report.carriers_match) {
    const SpaceMap h = canonical_point_embedding(conv, ps);
    for (int x = 0; x < conv.size(); ++x)
      if (pp.quotient.q(h(x)) != sob.e(x)) {
        report.e_equals_q_after_h = false;
        report.failures.push_back("e differs from q after h at " + conv.carrier().name(x));
        break;
      }
    if (!sob.e_injective()) {
      report.failures.push_back("e is not injective on a T0 space");
    }
  }

  Subset image_of_e;
  for (int x = 0; x < conv.size(); ++x) image_of_e = image_of_e.with(sob.e(x));
  report.e_dense = is_dense(s_conv, image_of_e);
  if (!report.e_dense) report.failures.push_back("e(X) is not dense in the sobrification");
  return report;
}

}  // namespace fincov

#include "fincov/convergence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace fincov {

FiniteConvergence FiniteConvergence::build(PointSetPtr carrier, std::vector<Subset> limits) {
  const int n = carrier->size();
  const Mask count = subset_count(n);
  if (limits.size() != count) {
    // Find the first missing entry for the error payload.
    for (Mask m = 1; m < count; ++m)
      if (m >= limits.size()) throw MissingEntry(m);
    limits.resize(count);
  }
  const Subset all = full_set(n);
  for (Mask m = 1; m < count; ++m)
    if (!limits[m].subset_of(all)) throw Error("limit set contains points outside the carrier");
  for (int x = 0; x < n; ++x)
    if (!limits[singleton(x).bits].contains(x)) throw PointAxiomViolation(x, carrier->name(x));
  // Antitone in A: checking immediate predecessors suffices.
  for (Mask m = 1; m < count; ++m) {
    for (int x = 0; x < n; ++x) {
      if (!((m >> x) & 1u)) continue;
      const Mask below = m & ~(Mask(1) << x);
      if (below == 0) continue;
      if (!limits[m].subset_of(limits[below])) throw MonotonicityViolation(below, m);
    }
  }
  bool fd = true;
  for (Mask m = 1; m < count && fd; ++m) {
    Subset expect = all;
    for (int x = 0; x < n; ++x)
      if ((m >> x) & 1u) expect = expect & limits[singleton(x).bits];
    fd = limits[m] == expect;
  }
  return FiniteConvergence(std::move(carrier), std::move(limits), fd);
}

FiniteConvergence FiniteConvergence::finite_depth(PointSetPtr carrier,
                                                  const std::vector<Subset>& singleton_limits) {
  const int n = carrier->size();
  if (static_cast<int>(singleton_limits.size()) != n)
    throw Error("expected one limit set per point");
  for (int x = 0; x < n; ++x)
    if (!singleton_limits[static_cast<std::size_t>(x)].contains(x))
      throw NotReflexive(x, carrier->name(x));
  std::vector<Subset> limits(subset_count(n));
  const Subset all = full_set(n);
  for (Mask m = 1; m < subset_count(n); ++m) {
    Subset lim = all;
    for (int x = 0; x < n; ++x)
      if ((m >> x) & 1u) lim = lim & singleton_limits[static_cast<std::size_t>(x)];
    limits[m] = lim;
  }
  return build(std::move(carrier), std::move(limits));
}

FiniteTopology FiniteTopology::build(PointSetPtr carrier, std::vector<Subset> opens) {
  const int n = carrier->size();
  const Subset all = full_set(n);
  std::vector<bool> member(subset_count(n), false);
  for (Subset o : opens) {
    if (!o.subset_of(all)) throw InvalidTopology("open set contains points outside the carrier");
    member[o.bits] = true;
  }
  if (!member[0]) throw InvalidTopology("missing the empty set");
  if (!member[all.bits]) throw InvalidTopology("missing the full carrier");
  std::vector<Subset> sorted;
  for (Mask m = 0; m < subset_count(n); ++m)
    if (member[m]) sorted.push_back(Subset(m));
  for (Subset a : sorted)
    for (Subset b : sorted) {
      if (!member[(a | b).bits]) throw InvalidTopology("not closed under union");
      if (!member[(a & b).bits]) throw InvalidTopology("not closed under intersection");
    }
  FiniteTopology top;
  top.carrier_ = std::move(carrier);
  top.opens_ = std::move(sorted);
  top.open_ = std::move(member);
  top.min_nbhd_.assign(static_cast<std::size_t>(n), all);
  for (int x = 0; x < n; ++x)
    for (Subset o : top.opens_)
      if (o.contains(x)) top.min_nbhd_[static_cast<std::size_t>(x)] = top.min_nbhd_[static_cast<std::size_t>(x)] & o;
  return top;
}

Subset FiniteTopology::closure(Subset s) const {
  Subset cl = universe();
  for (Subset o : opens_) {
    Subset c = universe() - o;
    if (s.subset_of(c) && c.subset_of(cl)) cl = c;
  }
  return cl;
}

SpaceMap::SpaceMap(PointSetPtr source, PointSetPtr target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != source_->size())
    throw Error("map table must cover every source point");
  for (int v : table_)
    if (v < 0 || v >= target_->size()) throw Error("map value outside the target carrier");
}

Subset SpaceMap::image(Subset s) const {
  Subset out;
  for (int x = 0; x < source_->size(); ++x)
    if (s.contains(x)) out = out.with(table_[static_cast<std::size_t>(x)]);
  return out;
}

Subset SpaceMap::preimage(Subset s) const {
  Subset out;
  for (int x = 0; x < source_->size(); ++x)
    if (s.contains(table_[static_cast<std::size_t>(x)])) out = out.with(x);
  return out;
}

bool SpaceMap::surjective() const {
  return image(full_set(source_->size())) == full_set(target_->size());
}

bool SpaceMap::bijective() const { return source_->size() == target_->size() && surjective(); }

SpaceMap SpaceMap::inverse() const {
  if (!bijective()) throw Error("only bijections can be inverted");
  std::vector<int> inv(static_cast<std::size_t>(target_->size()));
  for (int x = 0; x < source_->size(); ++x) inv[static_cast<std::size_t>(table_[static_cast<std::size_t>(x)])] = x;
  return SpaceMap(target_, source_, std::move(inv));
}

Subset adherence(const FiniteConvergence& conv, Subset b) {
  if (b.empty()) throw EmptyFilterBase();
  const int n = conv.size();
  Subset by_def;
  for (Mask m = 1; m < subset_count(n); ++m)
    if (Subset(m).meets(b)) by_def = by_def | conv.limit(Subset(m));
  Subset by_singletons;
  for (int x = 0; x < n; ++x)
    if (b.contains(x)) by_singletons = by_singletons | conv.limit(singleton(x));
  if (by_def != by_singletons)
    throw Error("adherence cross-check failed: definition and singleton-union form disagree");
  return by_def;
}

SetStatus set_status(const FiniteConvergence& conv, Subset s) {
  SetStatus st{true, true};
  const int n = conv.size();
  for (Mask m = 1; m < subset_count(n); ++m) {
    const Subset a(m);
    const Subset lim = conv.limit(a);
    if (a.subset_of(s) && !lim.subset_of(s)) st.closed = false;
    if (lim.meets(s) && !a.subset_of(s)) st.open = false;
    if (!st.closed && !st.open) break;
  }
  return st;
}

FiniteTopology topological_modification(const FiniteConvergence& conv) {
  std::vector<Subset> opens;
  for (Mask m = 0; m < subset_count(conv.size()); ++m)
    if (set_status(conv, Subset(m)).open) opens.push_back(Subset(m));
  return FiniteTopology::build(conv.carrier_ptr(), std::move(opens));
}

FiniteConvergence finite_depth_modification(const FiniteConvergence& conv) {
  std::vector<Subset> singleton_limits;
  singleton_limits.reserve(static_cast<std::size_t>(conv.size()));
  for (int x = 0; x < conv.size(); ++x) singleton_limits.push_back(conv.limit(singleton(x)));
  return FiniteConvergence::finite_depth(conv.carrier_ptr(), singleton_limits);
}

FiniteConvergence conv_of_topology(const FiniteTopology& top) {
  const int n = top.size();
  std::vector<Subset> limits(subset_count(n));
  for (Mask m = 1; m < subset_count(n); ++m) {
    Subset lim;
    for (int x = 0; x < n; ++x)
      if (Subset(m).subset_of(top.min_nbhd(x))) lim = lim.with(x);
    limits[m] = lim;
  }
  return FiniteConvergence::build(top.carrier_ptr(), std::move(limits));
}

Comparison compare(const FiniteConvergence& a, const FiniteConvergence& b) {
  if (a.carrier() != b.carrier()) throw CarrierMismatch();
  bool finer = true, coarser = true;
  for (Mask m = 1; m < subset_count(a.size()); ++m) {
    const Subset la = a.limit(Subset(m));
    const Subset lb = b.limit(Subset(m));
    if (!la.subset_of(lb)) finer = false;
    if (!lb.subset_of(la)) coarser = false;
  }
  if (finer && coarser) return Comparison::Equal;
  if (finer) return Comparison::Finer;
  if (coarser) return Comparison::Coarser;
  return Comparison::Incomparable;
}

FiniteConvergence sup_conv(std::span<const FiniteConvergence> convs) {
  if (convs.empty()) throw EmptyList();
  for (const auto& c : convs)
    if (c.carrier() != convs.front().carrier()) throw CarrierMismatch();
  const int n = convs.front().size();
  std::vector<Subset> limits(subset_count(n));
  for (Mask m = 1; m < subset_count(n); ++m) {
    Subset lim = full_set(n);
    for (const auto& c : convs) lim = lim & c.limit(Subset(m));
    limits[m] = lim;
  }
  return FiniteConvergence::build(convs.front().carrier_ptr(), std::move(limits));
}

FiniteConvergence inf_conv(std::span<const FiniteConvergence> convs) {
  if (convs.empty()) throw EmptyList();
  for (const auto& c : convs)
    if (c.carrier() != convs.front().carrier()) throw CarrierMismatch();
  const int n = convs.front().size();
  std::vector<Subset> limits(subset_count(n));
  for (Mask m = 1; m < subset_count(n); ++m) {
    Subset lim;
    for (const auto& c : convs) lim = lim | c.limit(Subset(m));
    limits[m] = lim;
  }
  return FiniteConvergence::build(convs.front().carrier_ptr(), std::move(limits));
}

FiniteConvergence initial_conv(const SpaceMap& f, const FiniteConvergence& tau) {
  if (f.target() != tau.carrier()) throw CarrierMismatch();
  const int n = f.source().size();
  std::vector<Subset> limits(subset_count(n));
  for (Mask m = 1; m < subset_count(n); ++m) {
    const Subset fa = f.image(Subset(m));
    const Subset lim_tau = tau.limit(fa);
    Subset lim;
    for (int x = 0; x < n; ++x)
      if (lim_tau.contains(f(x))) lim = lim.with(x);
    limits[m] = lim;
  }
  return FiniteConvergence::build(f.source_ptr(), std::move(limits));
}

FiniteConvergence final_conv(const SpaceMap& f, const FiniteConvergence& xi) {
  if (f.source() != xi.carrier()) throw CarrierMismatch();
  const int n = f.target().size();
  std::vector<Subset> limits(subset_count(n));
  for (int y = 0; y < n; ++y) limits[singleton(y).bits] = singleton(y);
  for (Mask a = 1; a < subset_count(xi.size()); ++a) {
    const Subset fa = f.image(Subset(a));
    const Subset flim = f.image(xi.limit(Subset(a)));
    // Every filter finer than the image filter must pick up these limits.
    Mask sub = fa.bits;
    while (sub) {
      limits[sub] = limits[sub] | flim;
      sub = (sub - 1) & fa.bits;
    }
  }
  return FiniteConvergence::build(f.target_ptr(), std::move(limits));
}

std::pair<FiniteConvergence, SpaceMap> subspace_conv(const FiniteConvergence& conv, Subset a) {
  std::vector<std::string> names;
  std::vector<int> incl;
  for (int x = 0; x < conv.size(); ++x)
    if (a.contains(x)) {
      names.push_back(conv.carrier().name(x));
      incl.push_back(x);
    }
  SpaceMap inclusion(make_points(std::move(names)), conv.carrier_ptr(), std::move(incl));
  return {initial_conv(inclusion, conv), inclusion};
}

Product product_conv(const FiniteConvergence& a, const FiniteConvergence& b) {
  std::vector<std::string> names;
  std::vector<int> pl, pr;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      names.push_back("(" + a.carrier().name(i) + "," + b.carrier().name(j) + ")");
      pl.push_back(i);
      pr.push_back(j);
    }
  PointSetPtr carrier = make_points(std::move(names));
  SpaceMap proj_left(carrier, a.carrier_ptr(), std::move(pl));
  SpaceMap proj_right(carrier, b.carrier_ptr(), std::move(pr));
  const FiniteConvergence legs[2] = {initial_conv(proj_left, a), initial_conv(proj_right, b)};
  return Product{sup_conv(legs), std::move(proj_left), std::move(proj_right)};
}

FiniteConvergence quotient_conv(const SpaceMap& f, const FiniteConvergence& xi) {
  if (!f.surjective()) throw NotSurjective();
  return final_conv(f, xi);
}

bool is_continuous(const SpaceMap& f, const FiniteConvergence& xi, const FiniteConvergence& tau) {
  if (f.source() != xi.carrier() || f.target() != tau.carrier()) throw CarrierMismatch();
  for (Mask m = 1; m < subset_count(xi.size()); ++m)
    if (!f.image(xi.limit(Subset(m))).subset_of(tau.limit(f.image(Subset(m)))))
      return false;
  return true;
}

bool is_dense(const FiniteConvergence& conv, Subset a) {
  for (int x = 0; x < conv.size(); ++x) {
    bool witnessed = false;
    Mask sub = a.bits;
    while (sub && !witnessed) {
      witnessed = conv.limit(Subset(sub)).contains(x);
      sub = (sub - 1) & a.bits;
    }
    if (!witnessed) return false;
  }
  return true;
}

namespace {

// Per-point pruning signature: size of the singleton limit, how many limit
// sets contain the point, and the multiset of limit-set sizes over subsets
// containing it.
std::vector<std::vector<int>> point_signatures(const FiniteConvergence& c) {
  const int n = c.size();
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<int> s;
    s.push_back(c.limit(singleton(x)).size());
    int hits = 0;
    std::vector<int> sizes;
    for (Mask m = 1; m < subset_count(n); ++m) {
      if (c.limit(Subset(m)).contains(x)) ++hits;
      if (Subset(m).contains(x)) sizes.push_back(c.limit(Subset(m)).size());
    }
    std::sort(sizes.begin(), sizes.end());
    s.push_back(hits);
    s.insert(s.end(), sizes.begin(), sizes.end());
    sig[static_cast<std::size_t>(x)] = std::move(s);
  }
  return sig;
}

bool extend(const FiniteConvergence& a, const FiniteConvergence& b,
            const std::vector<std::vector<int>>& sa, const std::vector<std::vector<int>>& sb,
            std::vector<int>& phi, std::vector<bool>& used, int next) {
  const int n = a.size();
  if (next == n) {
    SpaceMap m(a.carrier_ptr(), b.carrier_ptr(), phi);
    for (Mask s = 1; s < subset_count(n); ++s)
      if (m.image(a.limit(Subset(s))) != b.limit(m.image(Subset(s)))) return false;
    return true;
  }
  for (int y = 0; y < n; ++y) {
    if (used[static_cast<std::size_t>(y)]) continue;
    if (sa[static_cast<std::size_t>(next)] != sb[static_cast<std::size_t>(y)]) continue;
    phi[static_cast<std::size_t>(next)] = y;
    used[static_cast<std::size_t>(y)] = true;
    // Check subsets fully inside the assigned prefix.
    bool ok = true;
    Subset dom;
    for (int i = 0; i <= next; ++i) dom = dom.with(i);
    Subset img;
    for (int i = 0; i <= next; ++i) img = img.with(phi[static_cast<std::size_t>(i)]);
    for (Mask s = 1; s <= dom.bits && ok; ++s) {
      if (!Subset(s).subset_of(dom)) continue;
      Subset fs;
      for (int i = 0; i <= next; ++i)
        if (Subset(s).contains(i)) fs = fs.with(phi[static_cast<std::size_t>(i)]);
      const Subset la = a.limit(Subset(s));
      const Subset lb = b.limit(fs);
      if (la.size() != lb.size()) ok = false;
      // The assigned part of the limit must land inside the target limit.
      for (int i = 0; i <= next && ok; ++i)
        if (la.contains(i) != lb.contains(phi[static_cast<std::size_t>(i)])) ok = false;
    }
    if (ok && extend(a, b, sa, sb, phi, used, next + 1)) return true;
    used[static_cast<std::size_t>(y)] = false;
  }
  return false;
}

}  // namespace

std::optional<SpaceMap> find_homeomorphism(const FiniteConvergence& a,
                                           const FiniteConvergence& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  if (n > 8) throw TooLarge("homeomorphism search supports at most 8 points");
  auto sa = point_signatures(a);
  auto sb = point_signatures(b);
  {
    auto ma = sa;
    auto mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (extend(a, b, sa, sb, phi, used, 0))
    return SpaceMap(a.carrier_ptr(), b.carrier_ptr(), phi);
  return std::nullopt;
}

FiniteConvergence discrete_conv(PointSetPtr carrier) {
  std::vector<Subset> sl;
  for (int x = 0; x < carrier->size(); ++x) sl.push_back(singleton(x));
  return FiniteConvergence::finite_depth(std::move(carrier), sl);
}

FiniteConvergence antidiscrete_conv(PointSetPtr carrier) {
  const Subset all = full_set(carrier->size());
  std::vector<Subset> sl(static_cast<std::size_t>(carrier->size()), all);
  return FiniteConvergence::finite_depth(std::move(carrier), sl);
}

FiniteTopology discrete_topology(PointSetPtr carrier) {
  std::vector<Subset> opens;
  for (Mask m = 0; m < subset_count(carrier->size()); ++m) opens.push_back(Subset(m));
  return FiniteTopology::build(std::move(carrier), std::move(opens));
}

FiniteTopology antidiscrete_topology(PointSetPtr carrier) {
  std::vector<Subset> opens{Subset(0), full_set(carrier->size())};
  return FiniteTopology::build(std::move(carrier), std::move(opens));
}

SpaceMap identity_map(PointSetPtr carrier) {
  std::vector<int> t(static_cast<std::size_t>(carrier->size()));
  std::iota(t.begin(), t.end(), 0);
  return SpaceMap(carrier, carrier, std::move(t));
}

}  // namespace fincov

#include "fincov/suites.hpp"

#include <algorithm>
#include <sstream>

#include "fincov/dsl.hpp"
#include "fincov/fixtures.hpp"
#include "fincov/points.hpp"
#include "fincov/sobrification.hpp"

namespace fincov {

namespace {

void fail_space(SuiteResult& r, const FiniteConvergence& c, const std::string& note) {
  r.failures.push_back({dsl::render_space("witness", c), note});
}

void fail_lattice(SuiteResult& r, const FiniteConvLattice& l, const std::string& note) {
  r.failures.push_back({dsl::render_lattice("witness", l), note});
}

void fail_topology(SuiteResult& r, const FiniteTopology& t, const std::string& note) {
  r.failures.push_back({dsl::render_topology("witness", t), note});
}

bool holds(const FiniteConvergence& c, PropertyId p) { return check_property(c, p).holds; }

// Universe shared by several suites: all finitely deep spaces on n points,
// then (when requested) all full tables on 3 points.
void for_each_fd(int max_n, const std::function<void(const FiniteConvergence&)>& fn) {
  for (int n = 1; n <= max_n; ++n) enumerate_spaces({n, EnumMode::FiniteDepth}, fn);
}

std::vector<FiniteTopology> all_topologies(int max_n) {
  std::vector<FiniteTopology> out;
  for (int n = 0; n <= max_n; ++n) {
    auto batch = enumerate_topologies(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult suite_paper_examples() {
  SuiteResult r{"paper_examples", 0, {}, {}};
  r.notes.push_back("covers: examples E1-E7 and their stated property profiles");

  auto expect = [&](const FiniteConvergence& c, PropertyId p, bool want, const std::string& which) {
    if (holds(c, p) != want)
      fail_space(r, c, which + ": expected " + property_name(p) + "=" + (want ? "true" : "false"));
  };
  auto expect_limit = [&](const FiniteConvergence& c, Subset a, Subset want,
                          const std::string& which) {
    if (c.limit(a) != want) fail_space(r, c, which + ": unexpected limit of " + c.carrier().render(a));
  };

  {  // E1: two points with equal limits, a third converging to one of them
    const auto c = fixtures::e1();
    ++r.cases;
    expect(c, PropertyId::T0, true, "E1");
    expect(c, PropertyId::S0, false, "E1");
    expect(c, PropertyId::QuasiSober, true, "E1");
    expect(c, PropertyId::WeaklySober, false, "E1");
    expect(c, PropertyId::TD, false, "E1");
    expect(c, PropertyId::FiniteDepth, true, "E1");
    expect(c, PropertyId::Antisymmetric, false, "E1");
    expect_limit(c, Subset(0b001), Subset(0b011), "E1");        // lim{x} = lim{y} = {x,y}
    expect_limit(c, Subset(0b010), Subset(0b011), "E1");
    expect_limit(c, Subset(0b100), Subset(0b101), "E1");        // lim{z} = {z,x}
    expect_limit(c, Subset(0b111), Subset(0b001), "E1");        // lim{x,y,z} = {x}
    expect_limit(c, Subset(0b110), Subset(0b001), "E1");        // lim{y,z} = {x}
    expect_limit(c, Subset(0b101), Subset(0b001), "E1");        // lim{x,z} = {x}
  }
  {  // E2: the S0 variant
    const auto c = fixtures::e2();
    ++r.cases;
    expect(c, PropertyId::T0, false, "E2");
    expect(c, PropertyId::S0, true, "E2");
    expect(c, PropertyId::QuasiSober, true, "E2");
    expect(c, PropertyId::WeaklySober, false, "E2");
    expect(c, PropertyId::FiniteDepth, true, "E2");
    expect_limit(c, Subset(0b001), Subset(0b011), "E2");  // lim{x} = lim{y} = {x,y}
    expect_limit(c, Subset(0b010), Subset(0b011), "E2");
    expect_limit(c, Subset(0b011), Subset(0b011), "E2");
    expect_limit(c, Subset(0b111), Subset(0b000), "E2");
  }
  {  // E3: sober but not T0; its finite-depth modification loses sobriety
    const auto c = fixtures::e3();
    ++r.cases;
    expect(c, PropertyId::Sober, true, "E3");
    expect(c, PropertyId::T0, false, "E3");
    expect(c, PropertyId::FiniteDepth, false, "E3");
    // x and y have the same convergent filters, namely the two principal
    // ultrafilters of x and y, while their own limits differ
    for (int p : {0, 1}) {
      std::vector<Mask> converging;
      for (Mask m = 1; m < subset_count(4); ++m)
        if (c.limit(Subset(m)).contains(p)) converging.push_back(m);
      if (converging != std::vector<Mask>{0b0001, 0b0010})
        fail_space(r, c, "E3: unexpected family of filters converging to x or y");
    }
    if (c.limit(Subset(0b0001)) == c.limit(Subset(0b0010)))
      fail_space(r, c, "E3: the limits of the two ultrafilters should differ");
    const auto l = finite_depth_modification(c);
    if (!holds(l, PropertyId::FiniteDepth)) fail_space(r, l, "E3: modification not finitely deep");
    if (holds(l, PropertyId::Sober)) fail_space(r, l, "E3: finite-depth modification stayed sober");
    if (l.limit(Subset(0b0011)) != Subset(0b0011))
      fail_space(r, l, "E3: modification limit of {x,y} is not {x,y}");
  }
  {  // E4: sober, finitely deep, not T0
    const auto c = fixtures::e4();
    ++r.cases;
    expect(c, PropertyId::Sober, true, "E4");
    expect(c, PropertyId::FiniteDepth, true, "E4");
    expect(c, PropertyId::T0, false, "E4");
    // the four irreducible non-singleton filters share the generic point z
    for (Mask m : {0b00011u, 0b00101u, 0b00110u, 0b00111u}) {
      if (!is_irreducible(c, Subset(m))) fail_space(r, c, "E4: expected irreducible filter");
      if (c.limit(Subset(m)) != Subset(0b00111)) fail_space(r, c, "E4: unexpected limit");
      if (generic_points(c, Subset(m)) != Subset(0b00100))
        fail_space(r, c, "E4: generic point is not z alone");
    }
  }
  {  // E5: weakly sober but not sober
    const auto c = fixtures::e5();
    ++r.cases;
    expect(c, PropertyId::T0, true, "E5");
    expect(c, PropertyId::WeaklySober, true, "E5");
    expect(c, PropertyId::FiniteDepth, true, "E5");
    expect(c, PropertyId::Sober, false, "E5");
    if (!is_irreducible(c, Subset(0b000011)) || !generic_points(c, Subset(0b000011)).empty())
      fail_space(r, c, "E5: {x,y} should be irreducible without a generic point");
  }
  {  // E6: sober with antidiscrete topological modification
    const auto c = fixtures::e6();
    ++r.cases;
    expect(c, PropertyId::Sober, true, "E6");
    expect(c, PropertyId::T0, true, "E6");
    expect(c, PropertyId::FiniteDepth, true, "E6");
    expect(c, PropertyId::Topological, false, "E6");
    expect_limit(c, Subset(0b101), Subset(0b010), "E6");  // lim{x,z} = {y}
    expect_limit(c, Subset(0b111), Subset(0b010), "E6");
    const auto t = topological_modification(c);
    if (t.opens().size() != 2) fail_topology(r, t, "E6: modification is not antidiscrete");
    const auto tc = conv_of_topology(t);
    if (holds(tc, PropertyId::Sober)) fail_space(r, tc, "E6: modification should not be sober");
    if (holds(tc, PropertyId::T0)) fail_space(r, tc, "E6: modification should not be T0");
    // irreducible filters are exactly {x},{y},{z},{x,y},{y,z}
    const std::vector<Mask> want = {0b001, 0b010, 0b011, 0b100, 0b110};
    std::vector<Mask> got;
    for (Mask m = 1; m < 8; ++m)
      if (is_irreducible(c, Subset(m))) got.push_back(m);
    if (got != want) fail_space(r, c, "E6: unexpected family of irreducible filters");
    for (Mask m : want)
      if (generic_points(c, Subset(m)).size() != 1)
        fail_space(r, c, "E6: irreducible filter without unique generic point");
  }
  {  // E7: the T_D cycle
    const auto c = fixtures::e7();
    ++r.cases;
    expect(c, PropertyId::TD, true, "E7");
    expect(c, PropertyId::Antisymmetric, true, "E7");
    expect(c, PropertyId::T1, false, "E7");
    const auto rel = specialization_preorder(c);
    if (rel.transitive) fail_space(r, c, "E7: cycle relation should not be transitive");
    if (!rel.antisymmetric) fail_space(r, c, "E7: cycle relation should be antisymmetric");
    const auto t = topological_modification(c);
    if (t.opens().size() != 2) fail_topology(r, t, "E7: modification is not antidiscrete");
    if (holds(conv_of_topology(t), PropertyId::TD))
      fail_space(r, conv_of_topology(t), "E7: antidiscrete modification cannot be T_D");
  }
  return r;
}

// ---------------------------------------------------------------------------

struct Figure1Profile {
  bool top, cadh, clim, cirr, cprin, s0, t0, t1, td, psd, qsober, wsober, sober;
};

SuiteResult suite_figure1() {
  SuiteResult r{"figure1", 0, {}, {}};
  r.notes.push_back(
      "covers: the diagram of weak diagonality and separation conditions; "
      "irreducible/compact filter comparison; T1 => TD => T0 chain");
  r.notes.push_back(
      "degenerate: the Noetherian characterization (every filter compact) is automatic on "
      "finite topologies and is asserted, not meaningfully tested");
  r.notes.push_back(
      "excluded: the 'diagonal' and 'epitopological' nodes carry no definition here; edges "
      "through them are asserted between their defined endpoints");

  struct WitnessWanted {
    PropertyId have, lack;
    bool found = false;
  };
  std::vector<WitnessWanted> non_implications = {
      {PropertyId::T0, PropertyId::TD, false},
      {PropertyId::TD, PropertyId::T1, false},
      {PropertyId::QuasiSober, PropertyId::WeaklySober, false},
      {PropertyId::Sober, PropertyId::T0, false},
      {PropertyId::WeaklySober, PropertyId::Sober, false},
      {PropertyId::S0, PropertyId::T0, false},
      {PropertyId::T0, PropertyId::S0, false},
  };
  // Closed limits without topologicity requires a table that is not
  // finitely deep, so that witness is searched in the full universe below.
  bool clim_not_top_witness = false;

  auto run = [&](const FiniteConvergence& c) {
    ++r.cases;
    Figure1Profile p{};
    p.top = holds(c, PropertyId::Topological);
    p.cadh = holds(c, PropertyId::ClosedAdherences);
    p.clim = holds(c, PropertyId::ClosedLimits);
    p.cirr = holds(c, PropertyId::ClosedIrreducibleLimits);
    p.cprin = holds(c, PropertyId::ClosedPrincipalLimits);
    p.s0 = holds(c, PropertyId::S0);
    p.t0 = holds(c, PropertyId::T0);
    p.t1 = holds(c, PropertyId::T1);
    p.td = holds(c, PropertyId::TD);
    p.psd = holds(c, PropertyId::Pseudotopological);
    p.qsober = holds(c, PropertyId::QuasiSober);
    p.wsober = holds(c, PropertyId::WeaklySober);
    p.sober = holds(c, PropertyId::Sober);

    auto edge = [&](bool a, bool b, const std::string& note) {
      if (a && !b) fail_space(r, c, "edge violated: " + note);
    };
    edge(p.top, p.cadh, "topological => closed adherences");
    edge(p.top, p.clim, "topological => closed limits");
    edge(p.cadh, p.cprin, "closed adherences => closed ultrafilter limits");
    edge(p.clim, p.s0, "closed limits => S0");
    edge(p.clim, p.cprin, "closed limits => closed ultrafilter limits");
    edge(p.clim, p.cirr, "closed limits => closed irreducible limits");
    edge(p.cirr, p.cprin, "closed irreducible limits => closed principal limits");
    edge(p.s0, p.cprin, "S0 => closed principal limits");
    edge(p.t1, p.s0, "T1 => S0");
    edge(p.t1, p.td, "T1 => TD");
    edge(p.td, p.t0, "TD => T0");
    edge(p.psd && p.cprin, p.clim, "pseudotopological collapse onto closed limits");
    edge(p.psd && p.cprin, p.cirr, "pseudotopological collapse onto closed irreducible limits");
    // On finite carriers S0 makes every limit absorb the limits of its
    // points, so the whole left chain collapses; topologicity is exactly
    // finite depth plus closed limits.
    if (p.s0 != p.clim) fail_space(r, c, "finite collapse violated: S0 differs from closed limits");
    if (p.top != (p.psd && p.clim))
      fail_space(r, c, "finite collapse violated: topological differs from finitely deep + closed limits");
    if (p.cadh != p.cprin)
      fail_space(r, c, "finite collapse violated: closed adherences differ from closed principal limits");

    // On a finite carrier the ultrafilters are the principal ones, so the
    // two ultrafilter nodes coincide with the principal-limit node, and
    // every ultrafilter is irreducible.
    for (int x = 0; x < c.size(); ++x) {
      if (!is_irreducible(c, singleton(x)))
        fail_space(r, c, "a principal ultrafilter failed to be irreducible");
      if (is_compact_filter(c, singleton(x)) != is_irreducible(c, singleton(x)))
        fail_space(r, c, "compact and irreducible disagree on an ultrafilter");
    }
    for (Mask m = 1; m < subset_count(c.size()); ++m) {
      if (is_irreducible(c, Subset(m)) && !is_compact_filter(c, Subset(m)))
        fail_space(r, c, "an irreducible filter failed to be compact");
    }

    for (auto& w : non_implications) {
      if (w.found) continue;
      auto value = [&](PropertyId id) {
        switch (id) {
          case PropertyId::T0: return p.t0;
          case PropertyId::TD: return p.td;
          case PropertyId::T1: return p.t1;
          case PropertyId::S0: return p.s0;
          case PropertyId::QuasiSober: return p.qsober;
          case PropertyId::WeaklySober: return p.wsober;
          case PropertyId::Sober: return p.sober;
          case PropertyId::ClosedLimits: return p.clim;
          case PropertyId::Topological: return p.top;
          default: return holds(c, id);
        }
      };
      if (value(w.have) && !value(w.lack)) w.found = true;
    }
  };
  enumerate_spaces({3, EnumMode::FiniteDepth}, run);
  enumerate_spaces({4, EnumMode::FiniteDepth}, run);
  enumerate_spaces({3, EnumMode::Full}, [&](const FiniteConvergence& c) {
    run(c);
    if (!clim_not_top_witness && holds(c, PropertyId::ClosedLimits) &&
        !holds(c, PropertyId::Topological))
      clim_not_top_witness = true;
  });

  for (const auto& w : non_implications)
    if (!w.found)
      r.failures.push_back({"", "missing witness for " + property_name(w.have) +
                                    " not implying " + property_name(w.lack)});
  if (!clim_not_top_witness)
    r.failures.push_back(
        {"", "missing witness for closed_limits not implying topological (full universe)"});

  // Degenerate Noetherian form: every principal filter on a finite
  // topological space is compact.
  for (const auto& t : all_topologies(3)) {
    ++r.cases;
    const auto c = conv_of_topology(t);
    for (Mask m = 1; m < subset_count(c.size()); ++m)
      if (!is_compact_filter(c, Subset(m)))
        fail_space(r, c, "a filter on a finite topological space failed to be compact");
  }
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult suite_wsober_equiv() {
  SuiteResult r{"wsober_equiv", 0, {}, {}};
  r.notes.push_back(
      "covers: weak sobriety = weak quasi-sobriety + aas (with the antisymmetric variant "
      "under closed principal limits); antisymmetric => T0; equal-limit characterization "
      "under closed principal limits; weakly sober + closed irreducible limits => sober; "
      "the powerset-points corollary");
  r.notes.push_back(
      "degenerate: the dense-subspace clause of the powerset-points corollary is an "
      "equality of carriers on finite sets");
  long with_cprin = 0;

  auto run = [&](const FiniteConvergence& c) {
    ++r.cases;
    const bool wsober = holds(c, PropertyId::WeaklySober);
    const bool wq = holds(c, PropertyId::WeaklyQuasiSober);
    const bool aas = holds(c, PropertyId::Aas);
    const bool anti = holds(c, PropertyId::Antisymmetric);
    const bool t0 = holds(c, PropertyId::T0);
    const bool s0 = holds(c, PropertyId::S0);
    const bool cprin = holds(c, PropertyId::ClosedPrincipalLimits);

    if (wsober != (wq && aas)) fail_space(r, c, "weakly sober differs from weakly quasi-sober + aas");
    if (anti && !t0) fail_space(r, c, "an antisymmetric space failed to be T0");
    if (t0 && s0 && !anti) fail_space(r, c, "T0 + S0 did not force antisymmetry");
    if (cprin) {
      ++with_cprin;
      if (wsober != (wq && anti))
        fail_space(r, c, "three-way equivalence failed (antisymmetric variant)");
      if (wsober != (wq && aas)) fail_space(r, c, "three-way equivalence failed (aas variant)");
      if (wsober && !t0) fail_space(r, c, "weakly sober with closed principal limits must be T0");
      for (int x = 0; x < c.size(); ++x)
        for (int y = 0; y < c.size(); ++y) {
          const Subset lx = c.limit(singleton(x)), ly = c.limit(singleton(y));
          const bool both = lx.contains(x) && lx.contains(y) && ly.contains(x) && ly.contains(y);
          if (both != (lx == ly))
            fail_space(r, c, "equal-limit characterization failed under closed principal limits");
        }
      if (c.size() <= 4) {
        const auto lattice = std::make_shared<const FiniteConvLattice>(powerset_lattice(c));
        const auto ps = PointSpace::build(lattice, Category::Lat);
        if (holds(ps.conv(), PropertyId::WeaklySober) != aas)
          fail_space(r, c, "points of the powerset lattice: weak sobriety differs from aas");
      }
    }
    if (wsober && holds(c, PropertyId::ClosedIrreducibleLimits) && !holds(c, PropertyId::Sober))
      fail_space(r, c, "weakly sober with closed irreducible limits failed to be sober");
  };
  for_each_fd(4, run);
  enumerate_spaces({3, EnumMode::Full}, run);
  r.notes.push_back("hypothesis closed_principal_limits held on " + std::to_string(with_cprin) +
                    " instances");
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult suite_main() {
  SuiteResult r{"main", 0, {}, {}};
  r.notes.push_back(
      "covers: the principal-ultrafilter characterization (both directions); T_D in weakly "
      "sober spaces; the four T_D formulations on finite topologies; finite T_D = "
      "antisymmetry; preservation of T_D by finer structures, subspaces and finite products");
  r.notes.push_back(
      "degenerate: 'every (ultra)filter is principal' holds outright on finite carriers; the "
      "meaningful finite content is that irreducible filters are principal ultrafilters");

  auto run = [&](const FiniteConvergence& c) {
    ++r.cases;
    const bool wsober = holds(c, PropertyId::WeaklySober);
    const bool td = holds(c, PropertyId::TD);
    const bool anti = holds(c, PropertyId::Antisymmetric);
    const bool s0 = holds(c, PropertyId::S0);
    const bool t0 = holds(c, PropertyId::T0);
    const bool fd = holds(c, PropertyId::FiniteDepth);
    const bool cprin = holds(c, PropertyId::ClosedPrincipalLimits);
    const bool transitive = specialization_preorder(c).transitive;

    if (td != anti) fail_space(r, c, "T_D differs from antisymmetry on a finite carrier");
    if (cprin && !transitive) fail_space(r, c, "closed principal limits without transitivity");
    if (s0 && !transitive) fail_space(r, c, "S0 without transitivity");
    if (fd && transitive && !s0) fail_space(r, c, "finitely deep + transitive but not S0");

    if (wsober && td && fd) {
      // the only irreducible filters are the principal ultrafilters
      for (Mask m = 1; m < subset_count(c.size()); ++m)
        if (is_irreducible(c, Subset(m)) && Subset(m).size() != 1)
          fail_space(r, c, "weakly sober + T_D + finite depth left a non-principal irreducible filter");
      if (!holds(c, PropertyId::Sober))
        fail_space(r, c, "weakly sober + T_D + finite depth failed to be sober");
    }
    if (s0 && t0 && !(wsober && td))
      fail_space(r, c, "S0 + T0 (with all irreducible ultrafilters principal) must be weakly sober and T_D");

    // T_D passes to finer structures and subspaces.
    for (Mask a = 1; a < subset_count(c.size()); ++a) {
      if (td && !holds(subspace_conv(c, Subset(a)).first, PropertyId::TD))
        fail_space(r, c, "a subspace of a T_D space is not T_D");
    }
  };
  enumerate_spaces({3, EnumMode::Full}, run);
  for_each_fd(4, run);

  // The four formulations on finite topologies.
  for (const auto& t : all_topologies(4)) {
    ++r.cases;
    const auto c = conv_of_topology(t);
    const bool form34 = holds(c, PropertyId::TD);  // forms (3) and (4), checked jointly
    bool form1 = true, form2 = true;
    for (int x = 0; x < c.size(); ++x) {
      bool w1 = false, w2 = false;
      for (Subset u : t.opens()) {
        if (!u.contains(x)) continue;
        if (t.is_open(u.without(x))) w1 = true;
        if ((c.limit(singleton(x)) & u) == singleton(x)) w2 = true;
      }
      form1 = form1 && w1;
      form2 = form2 && w2;
    }
    if (form1 != form34 || form2 != form34)
      fail_topology(r, t, "the four T_D formulations disagree on a topology");
  }

  // Finer structures inside the two shared-carrier universes.
  {
    const auto fd3 = enumerate_spaces({3, EnumMode::FiniteDepth});
    for (const auto& xi : fd3)
      for (const auto& theta : fd3) {
        if (!finer_or_equal(theta, xi)) continue;
        ++r.cases;
        if (holds(xi, PropertyId::TD) && !holds(theta, PropertyId::TD))
          fail_space(r, theta, "a finer convergence lost T_D");
      }
  }
  // Binary products of finitely deep two-point spaces.
  {
    const auto fd2 = enumerate_spaces({2, EnumMode::FiniteDepth});
    for (const auto& a : fd2)
      for (const auto& b : fd2) {
        ++r.cases;
        if (holds(a, PropertyId::TD) && holds(b, PropertyId::TD) &&
            !holds(product_conv(a, b).conv, PropertyId::TD))
          fail_space(r, product_conv(a, b).conv, "a finite product of T_D spaces lost T_D");
      }
  }
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult suite_sober_td() {
  SuiteResult r{"soberTd", 0, {}, {}};
  r.notes.push_back(
      "covers: the equivalences for S0 + T0 spaces: weakly sober + T_D, sober + T_D, "
      "hereditary sobriety, sobriety of every finer structure, and the identification of the "
      "space with the points of its powerset lattice");
  r.notes.push_back(
      "degenerate: conditions (1) and (2) — irreducible (ultra)filters are principal — hold "
      "outright on finite carriers, so (3)-(7) are asserted unconditionally on this universe");

  enumerate_spaces({3, EnumMode::Full, {PropertyId::S0, PropertyId::T0}},
                   [&](const FiniteConvergence& c) {
    ++r.cases;
    if (!(holds(c, PropertyId::WeaklySober) && holds(c, PropertyId::TD)))
      fail_space(r, c, "(3) failed: not weakly sober and T_D");
    if (!(holds(c, PropertyId::Sober) && holds(c, PropertyId::TD)))
      fail_space(r, c, "(4) failed: not sober and T_D");
    for (Mask a = 1; a < subset_count(c.size()); ++a)
      if (!holds(subspace_conv(c, Subset(a)).first, PropertyId::Sober))
        fail_space(r, c, "(5) failed: a subspace is not sober");

    // (6): every finer table, enumerated by shrinking each limit set.
    {
      const int n = c.size();
      std::vector<Mask> order;
      for (Mask m = 1; m < subset_count(n); ++m) order.push_back(m);
      std::stable_sort(order.begin(), order.end(),
                       [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
      std::vector<Subset> limits(subset_count(n));
      bool ok = true;
      auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (!ok) return;
        if (idx == order.size()) {
          const auto theta = FiniteConvergence::build(c.carrier_ptr(), limits);
          if (!holds(theta, PropertyId::Sober)) {
            fail_space(r, theta, "(6) failed: a finer convergence is not sober");
            ok = false;
          }
          return;
        }
        const Mask m = order[idx];
        Subset floor;
        for (int x = 0; x < n; ++x) {
          const Mask sup = m | (Mask(1) << x);
          if (sup != m) floor = floor | limits[sup];
        }
        if (std::popcount(m) == 1) floor = floor | Subset(m);
        const Subset cap = c.limit(Subset(m));
        if (!floor.subset_of(cap)) return;
        Mask free = cap.bits & ~floor.bits;
        for (Mask extra = free;; extra = (extra - 1) & free) {
          limits[m] = Subset(floor.bits | extra);
          self(self, idx + 1);
          if (extra == 0) break;
        }
      };
      rec(rec, 0);
    }

    // (7): the canonical comparison with the points of the powerset lattice.
    const auto lattice = std::make_shared<const FiniteConvLattice>(powerset_lattice(c));
    const auto ps = PointSpace::build(lattice, Category::Lat);
    if (ps.point_count() != c.size()) {
      fail_space(r, c, "(7) failed: extra points of the powerset lattice");
    } else {
      const SpaceMap h = canonical_point_embedding(c, ps);
      if (!h.bijective() || !is_continuous(h, c, ps.conv()) ||
          !is_continuous(h.inverse(), ps.conv(), c))
        fail_space(r, c, "(7) failed: canonical map is not a homeomorphism");
    }
  });
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult suite_ptl_block() {
  SuiteResult r{"ptL_block", 0, {}, {}};
  r.notes.push_back(
      "covers: points spaces are weakly quasi-sober; circles of point filters; bullets of "
      "closed/open elements; closed limits passing to the points space; the five-way "
      "equivalence under closed point limits; the aas criterion; bullet-regularity of the "
      "points space; openness-regularity making the points space topological; the canonical "
      "dense embedding into the points of the powerset lattice");
  r.notes.push_back(
      "degenerate: density of the canonical embedding is equality of carriers on finite "
      "sets (all ultrafilters are principal)");
  long hyp_point_limits_closed = 0, hyp_closed_limits = 0, hyp_oregular = 0;

  generate_conv_lattices(16, [&](const FiniteConvLattice& l) {
    ++r.cases;
    const auto shared = std::make_shared<const FiniteConvLattice>(l);
    const auto ps = PointSpace::build(shared, Category::Lat);
    const auto& conv = ps.conv();
    const FiniteLattice& lat = l.lattice();

    for (int i = 0; i < ps.point_count(); ++i)
      if (ps.circle_filter(singleton(i)).min_element != ps.rep(i))
        fail_lattice(r, l, "circle of a point filter is not the point itself");

    if (!holds(conv, PropertyId::WeaklyQuasiSober))
      fail_lattice(r, l, "points space is not weakly quasi-sober");

    const auto closed = closed_elements(l);
    const auto open = open_elements(l);
    for (int ce : closed)
      if (!set_status(conv, ps.bullet(ce)).closed)
        fail_lattice(r, l, "bullet of a closed element is not closed");
    for (int oe : open)
      if (!set_status(conv, ps.bullet(oe)).open)
        fail_lattice(r, l, "bullet of an open element is not open");

    auto is_closed_elt = [&](int e) {
      return std::find(closed.begin(), closed.end(), e) != closed.end();
    };
    if (has_closed_limits(l)) {
      ++hyp_closed_limits;
      for (Mask f = 1; f < subset_count(ps.point_count()); ++f)
        if (!set_status(conv, conv.limit(Subset(f))).closed)
          fail_lattice(r, l, "closed lattice limits did not close the point limits");
    }
    bool point_limits_closed = true;
    for (int p : ps.reps())
      if (!is_closed_elt(l.lim(p))) point_limits_closed = false;
    if (point_limits_closed) {
      ++hyp_point_limits_closed;
      for (int i = 0; i < ps.point_count(); ++i)
        if (!set_status(conv, conv.limit(singleton(i))).closed)
          fail_lattice(r, l, "closed point limits did not close principal limits of points");
      // five-way equivalence
      const bool b1 = holds(conv, PropertyId::WeaklySober);
      const bool b2 = holds(conv, PropertyId::Antisymmetric);
      const bool b3 = holds(conv, PropertyId::Aas);
      const bool b4 = aas_in_lattice(ps);
      bool b5 = true;
      for (int x : ps.reps())
        for (int y : ps.reps())
          if (x != y && l.lim(x) == l.lim(y)) b5 = false;
      if (b1 != b2 || b2 != b3 || b3 != b4 || b4 != b5)
        fail_lattice(r, l, "five-way equivalence failed under closed point limits");
    }
    if (aas_in_lattice(ps) &&
        !(holds(conv, PropertyId::Aas) && holds(conv, PropertyId::WeaklySober)))
      fail_lattice(r, l, "the aas criterion did not make the points space weakly sober");

    {
      std::vector<Subset> bullets;
      for (int e = 0; e < lat.size(); ++e) bullets.push_back(ps.bullet(e));
      if (!is_z_regular_space(conv, bullets))
        fail_lattice(r, l, "points space is not regular for the bullet family");
      const auto pp = pt_prime(ps);
      std::vector<Subset> qbullets;
      for (int e = 0; e < lat.size(); ++e) qbullets.push_back(pp.quotient.q.image(ps.bullet(e)));
      if (!is_z_regular_space(pp.conv, qbullets))
        fail_lattice(r, l, "quotient points space is not regular for the projected bullets");
    }

    if (is_z_regular_lattice(l, open) && enough_elements(ps).enough_open) {
      ++hyp_oregular;
      if (!holds(conv, PropertyId::Topological))
        fail_lattice(r, l, "openness-regular with enough open elements but points not topological");
    }
  });

  // Canonical embedding of a space into the points of its powerset lattice.
  enumerate_spaces({3, EnumMode::Full}, [&](const FiniteConvergence& c) {
    ++r.cases;
    const auto lattice = std::make_shared<const FiniteConvLattice>(powerset_lattice(c));
    for (Category cat : {Category::Lat, Category::Frm, Category::Cofrm}) {
      const auto ps = PointSpace::build(lattice, cat);
      if (ps.point_count() != c.size()) {
        fail_space(r, c, "powerset lattice has points beyond the principal ultrafilters");
        continue;
      }
      const SpaceMap h = canonical_point_embedding(c, ps);
      Subset image;
      for (int x = 0; x < c.size(); ++x) image = image.with(h(x));
      if (!is_dense(ps.conv(), image)) fail_space(r, c, "canonical image is not dense");
      if (!h.bijective() || !is_continuous(h, c, ps.conv()) ||
          !is_continuous(h.inverse(), ps.conv(), c))
        fail_space(r, c, "canonical embedding is not a homeomorphism onto the points");
    }
  });

  r.notes.push_back("hypothesis closed point limits held on " +
                    std::to_string(hyp_point_limits_closed) + " instances");
  r.notes.push_back("hypothesis closed limits held on " + std::to_string(hyp_closed_limits) +
                    " instances");
  r.notes.push_back("hypothesis openness-regularity with enough opens held on " +
                    std::to_string(hyp_oregular) + " instances");
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult suite_ptprime_block() {
  SuiteResult r{"ptprime_block", 0, {}, {}};
  r.notes.push_back(
      "covers: saturation of open/closed subsets; the quotient map is open and closed and "
      "induces the topological modification; the down-set description of preimages of "
      "closed-element complements; the limit formulas under closed limits; aas of the "
      "quotient; the upper-topology description; simplified quotient limits under "
      "regularity; topological and sober conclusions for the quotient; open surjective "
      "images of topological spaces; the bullet description of open/closed subsets of "
      "powerset points");
  long hyp_closed_limits = 0, hyp_enough_closed = 0, hyp_simplified = 0, hyp_sober = 0;

  generate_conv_lattices(16, [&](const FiniteConvLattice& l) {
    ++r.cases;
    const auto shared = std::make_shared<const FiniteConvLattice>(l);
    const auto ps = PointSpace::build(shared, Category::Lat);
    const auto pp = pt_prime(ps);
    const auto& q = pp.quotient.q;
    const FiniteLattice& lat = l.lattice();
    const int np = ps.point_count();
    const int nc = static_cast<int>(pp.quotient.class_reps.size());

    for (Mask s = 0; s < subset_count(np); ++s) {
      const SetStatus st = set_status(ps.conv(), Subset(s));
      if (st.open || st.closed) {
        if (q.preimage(q.image(Subset(s))) != Subset(s))
          fail_lattice(r, l, "an open or closed subset of the points is not saturated");
      }
      if (st.open && !set_status(pp.conv, q.image(Subset(s))).open)
        fail_lattice(r, l, "the quotient map failed to be open");
      if (st.closed && !set_status(pp.conv, q.image(Subset(s))).closed)
        fail_lattice(r, l, "the quotient map failed to be closed");
    }
    {
      const auto t_pt = topological_modification(ps.conv());
      const auto t_pp = topological_modification(pp.conv);
      std::vector<Subset> preimages;
      for (Subset v : t_pp.opens()) preimages.push_back(q.preimage(v));
      std::sort(preimages.begin(), preimages.end());
      if (preimages != t_pt.opens())
        fail_lattice(r, l, "the topological modification of the points is not initial for q");
    }
    const auto closed = closed_elements(l);
    auto down_classes = [&](int e) {
      Subset out;
      for (int v = 0; v < nc; ++v)
        if (lat.leq(pp.quotient.class_reps[static_cast<std::size_t>(v)], e)) out = out.with(v);
      return out;
    };
    for (int ce : closed)
      if (q.preimage(full_set(nc) - down_classes(ce)) != full_set(np) - ps.bullet(ce))
        fail_lattice(r, l, "preimage of a closed-element complement is not the bullet complement");

    if (has_closed_limits(l)) {
      ++hyp_closed_limits;
      for (Mask f = 1; f < subset_count(np); ++f) {
        const int cmin = ps.circle_filter(Subset(f)).min_element;
        Subset want;
        for (int i = 0; i < np; ++i)
          if (lat.leq(l.lim(ps.rep(i)), l.lim(cmin))) want = want.with(i);
        if (ps.conv().limit(Subset(f)) != want)
          fail_lattice(r, l, "closed limits: point limits are not the down-set of the circle limit");
      }
      for (Mask s = 1; s < subset_count(nc); ++s) {
        const Subset lim = pp.conv.limit(Subset(s));
        for (int u = 0; u < nc; ++u)
          for (int v = 0; v < nc; ++v)
            if (lim.contains(u) &&
                lat.leq(pp.quotient.class_reps[static_cast<std::size_t>(v)],
                        pp.quotient.class_reps[static_cast<std::size_t>(u)]) &&
                !lim.contains(v))
              fail_lattice(r, l, "closed limits: quotient limits are not down-closed");
      }
      for (int i = 0; i < np; ++i) {
        const int v = q(i);
        if (pp.conv.limit(singleton(v)) != down_classes(l.lim(ps.rep(i))))
          fail_lattice(r, l, "closed limits: principal quotient limit is not the down-set of the limit");
      }
      // the displayed union: quotient limits are unions of down-sets of
      // circle limits over the filters projecting into the given one
      for (Mask s = 1; s < subset_count(nc); ++s) {
        Subset expect;
        for (Mask f = 1; f < subset_count(np); ++f)
          if (Subset(s).subset_of(q.image(Subset(f)))) {
            const int cmin = ps.circle_filter(Subset(f)).min_element;
            expect = expect | down_classes(l.lim(cmin));
          }
        if (pp.conv.limit(Subset(s)) != expect)
          fail_lattice(r, l, "closed limits: quotient limit differs from the union formula");
      }
      if (!holds(pp.conv, PropertyId::Aas))
        fail_lattice(r, l, "closed limits: the quotient failed to be aas");
    }

    {
      const auto report = upper_topology_check(ps);
      if (report.hypothesis_met) {
        ++hyp_enough_closed;
        if (!report.holds)
          fail_lattice(r, l, "upper-topology description of the quotient modification failed");
      }
    }

    const auto open = open_elements(l);
    for (const auto& z : {open, closed}) {
      if (!is_z_regular_lattice(l, z)) continue;
      ++hyp_simplified;
      for (int v = 0; v < nc; ++v) {
        const Subset direct = pp.conv.limit(singleton(v));
        const Subset via_preimage = q.image(ps.conv().limit(q.preimage(singleton(v))));
        if (direct != via_preimage)
          fail_lattice(r, l, "simplified quotient limit differs from the preimage route");
        for (int w = 0; w < np; ++w)
          if (q(w) == v && direct != q.image(ps.conv().limit(singleton(w))))
            fail_lattice(r, l, "simplified quotient limit differs across the fiber");
      }
    }

    if (holds(ps.conv(), PropertyId::Topological) && !holds(pp.conv, PropertyId::Topological))
      fail_lattice(r, l, "a topological points space has a non-topological quotient");

    if (is_z_regular_lattice(l, open) && enough_elements(ps).enough_open && has_closed_limits(l)) {
      ++hyp_sober;
      if (!(holds(pp.conv, PropertyId::Sober) && holds(pp.conv, PropertyId::Topological)))
        fail_lattice(r, l, "the quotient failed to be a sober topological space");
    }
  });

  // Powerset lattices: open/closed subsets of the points are bullets of
  // their singleton part, and the two conclusions for topological inputs.
  for (const auto& t : all_topologies(3)) {
    ++r.cases;
    const auto conv = conv_of_topology(t);
    const auto lattice = std::make_shared<const FiniteConvLattice>(powerset_lattice(conv));
    const auto ps = PointSpace::build(lattice, Category::Lat);
    const auto pp = pt_prime(ps);
    const SpaceMap h = canonical_point_embedding(conv, ps);
    for (Mask s = 0; s < subset_count(ps.point_count()); ++s) {
      const SetStatus st = set_status(ps.conv(), Subset(s));
      if (!st.open && !st.closed) continue;
      Subset trace;  // the subset of the base space carried by s
      for (int x = 0; x < conv.size(); ++x)
        if (Subset(s).contains(h(x))) trace = trace.with(x);
      if (ps.bullet(static_cast<int>(trace.bits)) != Subset(s))
        fail_topology(r, t, "an open or closed set of points is not the bullet of its trace");
    }
    const auto enough = enough_elements(ps);
    if (!enough.enough_closed || !enough.enough_open)
      fail_topology(r, t, "a powerset lattice lacked enough open or closed elements");
    if (!holds(ps.conv(), PropertyId::Topological) ||
        !holds(ps.conv(), PropertyId::WeaklyQuasiSober))
      fail_topology(r, t, "points of a topological powerset lattice are not topological");
    if (!holds(pp.conv, PropertyId::Topological) || !holds(pp.conv, PropertyId::Sober))
      fail_topology(r, t, "quotient points of a topological powerset lattice are not sober");
  }

  // Continuous open onto images of topological convergences.
  for (const auto& t : all_topologies(3)) {
    const auto xi = conv_of_topology(t);
    const int n = xi.size();
    if (n == 0) continue;
    for (int k = 1; k <= n; ++k) {
      auto target = make_points(k, "q");
      std::vector<int> table(static_cast<std::size_t>(n), 0);
      while (true) {
        const SpaceMap f(xi.carrier_ptr(), target, table);
        if (f.surjective()) {
          const auto tau = final_conv(f, xi);
          bool open_map = true;
          for (Subset o : t.opens())
            if (!set_status(tau, f.image(o)).open) open_map = false;
          if (open_map) {
            ++r.cases;
            if (!is_continuous(f, xi, tau))
              fail_space(r, xi, "final convergence failed continuity");
            if (!holds(tau, PropertyId::Topological))
              fail_space(r, tau, "open onto image of a topological space is not topological");
          }
        }
        int i = 0;
        while (i < n && table[static_cast<std::size_t>(i)] == k - 1) {
          table[static_cast<std::size_t>(i)] = 0;
          ++i;
        }
        if (i == n) break;
        ++table[static_cast<std::size_t>(i)];
      }
    }
  }

  r.notes.push_back("hypothesis closed limits held on " + std::to_string(hyp_closed_limits) +
                    " instances");
  r.notes.push_back("hypothesis enough closed elements held on " +
                    std::to_string(hyp_enough_closed) + " instances");
  r.notes.push_back("hypothesis Z-regularity for saturated bullets held on " +
                    std::to_string(hyp_simplified) + " instances");
  r.notes.push_back("hypothesis for the sober quotient held on " + std::to_string(hyp_sober) +
                    " instances");
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult suite_sobrification() {
  SuiteResult r{"sobrification", 0, {}, {}};
  r.notes.push_back(
      "covers: the quotient of powerset points is the sobrification; limits of irreducible "
      "filters are c-irreducible and closures of c-irreducible sets are limits of "
      "irreducible ultrafilters of the modification; closure of an irreducible limit equals "
      "the modified limit; the aas condition on T0 topologies");
  r.notes.push_back(
      "degenerate: on finite T0 topologies the aas condition holds because all ultrafilters "
      "are principal; the free-ultrafilter phenomenon has no finite form");
  long t0_cases = 0;

  for (const auto& t : all_topologies(4)) {
    ++r.cases;
    const auto report = verify_sobrification_theorem(t);
    if (report.t0) ++t0_cases;
    for (const auto& f : report.failures) fail_topology(r, t, f);
    const auto sob = sobrify(t);
    // the carrier is exactly the family of point closures
    std::vector<Subset> closures;
    for (int x = 0; x < t.size(); ++x) {
      const Subset cl = t.closure(singleton(x));
      if (std::find(closures.begin(), closures.end(), cl) == closures.end())
        closures.push_back(cl);
    }
    if (closures.size() != sob.s_points().size())
      fail_topology(r, t, "irreducible closed sets are not exactly the point closures");
    if (report.t0) {
      const auto conv = conv_of_topology(t);
      if (!holds(conv, PropertyId::Aas))
        fail_topology(r, t, "a T0 topology failed the equal-limits condition");
    }
  }

  auto run_cirr = [&](const FiniteConvergence& c) {
    ++r.cases;
    const auto t = topological_modification(c);
    const auto tconv = conv_of_topology(t);
    for (Mask m = 1; m < subset_count(c.size()); ++m) {
      if (!is_irreducible(c, Subset(m))) continue;
      const Subset lim = c.limit(Subset(m));
      if (!is_c_irreducible(c, lim)) fail_space(r, c, "an irreducible limit is not c-irreducible");
      if (t.closure(lim) != tconv.limit(Subset(m)))
        fail_space(r, c, "closure of an irreducible limit differs from the modified limit");
    }
    for (Mask m = 1; m < subset_count(c.size()); ++m) {
      const Subset s(m);
      const bool cirr = is_c_irreducible(c, s);
      const bool cl_irr = [&] {
        const auto irr = irreducible_closed_sets(t);
        return std::find(irr.begin(), irr.end(), t.closure(s)) != irr.end();
      }();
      if (cirr != cl_irr)
        fail_space(r, c, "c-irreducibility differs from irreducibility of the closure");
      if (cirr) {
        bool witnessed = false;
        for (int w = 0; w < c.size() && !witnessed; ++w)
          witnessed = tconv.limit(singleton(w)) == t.closure(s);
        if (!witnessed)
          fail_space(r, c, "closure of a c-irreducible set is not a principal modified limit");
      }
    }
  };
  enumerate_spaces({3, EnumMode::FiniteDepth}, run_cirr);
  for (const auto& t : all_topologies(3)) run_cirr(conv_of_topology(t));
  for (const auto& c : {fixtures::e1(), fixtures::e2(), fixtures::e3(), fixtures::e4(),
                        fixtures::e5(), fixtures::e6(), fixtures::e7()})
    run_cirr(c);

  r.notes.push_back("T0 inputs among the topologies: " + std::to_string(t0_cases));
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "paper_examples", "figure1",       "wsober_equiv", "main",
      "soberTd",        "ptL_block",     "ptprime_block", "sobrification"};
  return names;
}

SuiteResult verify_suite(const std::string& name) {
  if (name == "paper_examples") return suite_paper_examples();
  if (name == "figure1") return suite_figure1();
  if (name == "wsober_equiv") return suite_wsober_equiv();
  if (name == "main") return suite_main();
  if (name == "soberTd") return suite_sober_td();
  if (name == "ptL_block") return suite_ptl_block();
  if (name == "ptprime_block") return suite_ptprime_block();
  if (name == "sobrification") return suite_sobrification();
  throw UnknownSuite(name);
}

std::string format_suite(const SuiteResult& result) {
  std::ostringstream out;
  out << "SUITE " << result.name << ' ' << (result.passed() ? "PASS" : "FAIL") << ' '
      << result.cases << ' ' << result.failures.size() << '\n';
  for (const auto& note : result.notes) out << "# " << note << '\n';
  for (const auto& f : result.failures) {
    out << "# failure: " << f.note << '\n';
    if (!f.witness.empty()) out << f.witness;
  }
  return out.str();
}

const std::vector<std::pair<std::string, std::string>>& suite_coverage() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"example multigeneric (E1)", "paper_examples"},
      {"example multigeneric-S0 (E2)", "paper_examples"},
      {"example finite-depth-not-sober (E3)", "paper_examples"},
      {"example sober-finite-depth-not-T0 (E4)", "paper_examples"},
      {"example weakly-sober-not-sober (E5)", "paper_examples"},
      {"example sober-top-mod-not-sober (E6)", "paper_examples"},
      {"example T_D cycle (E7)", "paper_examples"},
      {"figure: weak diagonality and separation diagram", "figure1"},
      {"lemma: irreducible filters are compact; compact ultrafilters are irreducible", "figure1"},
      {"lemma: Noetherian = every filter compact (degenerate on finite carriers)", "figure1"},
      {"chain T1 => TD => T0 with strictness witnesses", "figure1"},
      {"prop: weakly sober = weakly quasi-sober + aas (+ antisymmetric variant)", "wsober_equiv"},
      {"lemma: equal limits of principal ultrafilters under closed limits", "wsober_equiv"},
      {"prop: weakly sober + closed irreducible limits => sober", "wsober_equiv"},
      {"cor: weak sobriety of powerset points = the equal-limits condition", "wsober_equiv"},
      {"thm: weakly sober + T_D <=> irreducible ultrafilters principal (S0+T0)", "main"},
      {"prop: T_D + weakly sober => irreducible filters principal (+ sober under depth)", "main"},
      {"lemma: the four T_D formulations on topologies", "main"},
      {"lemma: finite T_D = antisymmetry; transitivity vs closed principal limits", "main"},
      {"prop: T_D preserved by finer structures, subspaces, finite products", "main"},
      {"cor: the seven equivalences for S0+T0 spaces of finite depth", "soberTd"},
      {"prop: points spaces are weakly quasi-sober", "ptL_block"},
      {"lemma: circle of a principal point filter", "ptL_block"},
      {"lemma: bullets of closed/open elements are closed/open", "ptL_block"},
      {"prop: closed lattice limits close point-space limits", "ptL_block"},
      {"cor: the five-way equivalence under closed point limits", "ptL_block"},
      {"prop: the aas criterion for points spaces", "ptL_block"},
      {"lemma: points spaces are bullet-regular (and quotients for projected bullets)", "ptL_block"},
      {"prop: openness-regularity with enough opens makes points topological", "ptL_block"},
      {"prop: spaces embed densely into their powerset points (equality here)", "ptL_block"},
      {"lemma: open/closed subsets of points are saturated", "ptprime_block"},
      {"cor: the quotient map is open and closed and induces the modification", "ptprime_block"},
      {"lemma: preimages of closed-element complements", "ptprime_block"},
      {"lemma: limit formulas under closed limits", "ptprime_block"},
      {"cor: the quotient is aas under closed limits", "ptprime_block"},
      {"thm: the upper-topology description of the quotient modification", "ptprime_block"},
      {"lemma: simplified quotient limits under regularity for saturated bullets", "ptprime_block"},
      {"prop: topological points make a topological quotient", "ptprime_block"},
      {"cor: sober topological quotients", "ptprime_block"},
      {"prop: open onto continuous images preserve topologicity", "ptprime_block"},
      {"prop: open/closed subsets of powerset points are bullets of their trace", "ptprime_block"},
      {"cor: powerset points of topological spaces (topological + sober quotient)", "ptprime_block"},
      {"thm: the quotient of powerset points is the sobrification", "sobrification"},
      {"lemma: c-irreducible sets and irreducible ultrafilter limits", "sobrification"},
      {"cor: closure of an irreducible limit is the modified limit", "sobrification"},
      {"rem: the aas condition on T0 topologies (free ultrafilters out of scope)", "sobrification"},
  };
  return table;
}

}  // namespace fincov

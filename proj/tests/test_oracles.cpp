// Independent brute-force oracles for the structural constructions: each
// one recomputes the expected object from its universal property over an
// exhaustively enumerated universe and compares with the library result.

#include <doctest.h>

#include "fincov/enumeration.hpp"
#include "fincov/fixtures.hpp"
#include "fincov/points.hpp"
#include "helpers.hpp"

using namespace fincov;
using test::sub;

TEST_CASE("final convergence is the finest structure making f continuous") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> pick2(0, 1), pick3(0, 2);
  const auto targets2 = enumerate_spaces({2, EnumMode::Full});
  const auto targets3 = enumerate_spaces({3, EnumMode::Full});
  for (int i = 0; i < 8; ++i) {
    const auto xi = test::random_full(3, rng);
    for (int k = 2; k <= 3; ++k) {
      std::vector<int> table;
      for (int x = 0; x < 3; ++x) table.push_back(k == 2 ? pick2(rng) : pick3(rng));
      const SpaceMap f(xi.carrier_ptr(), make_points(k), table);
      const auto& universe = k == 2 ? targets2 : targets3;
      std::vector<FiniteConvergence> continuous_into;
      for (const auto& tau : universe) {
        const SpaceMap g(xi.carrier_ptr(), tau.carrier_ptr(), table);
        if (is_continuous(g, xi, tau)) continuous_into.push_back(tau);
      }
      REQUIRE_FALSE(continuous_into.empty());
      const auto finest = sup_conv(continuous_into);
      CHECK(final_conv(f, xi).table() == finest.table());
    }
  }
}

TEST_CASE("initial convergence is the coarsest structure making f continuous") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> pick(0, 2);
  const auto sources = enumerate_spaces({3, EnumMode::Full});
  for (int i = 0; i < 8; ++i) {
    const auto tau = test::random_full(3, rng);
    std::vector<int> table = {pick(rng), pick(rng), pick(rng)};
    const SpaceMap f(make_points(3), tau.carrier_ptr(), table);
    std::vector<FiniteConvergence> continuous_from;
    for (const auto& xi : sources) {
      const SpaceMap g(xi.carrier_ptr(), tau.carrier_ptr(), table);
      if (is_continuous(g, xi, tau)) continuous_from.push_back(xi);
    }
    REQUIRE_FALSE(continuous_from.empty());
    const auto coarsest = inf_conv(continuous_from);
    CHECK(initial_conv(f, tau).table() == coarsest.table());
  }
}

TEST_CASE("the topological modification is the finest coarser topology") {
  std::mt19937 rng(107);
  const auto topologies = enumerate_topologies(3);
  for (int i = 0; i < 12; ++i) {
    const auto xi = i % 2 ? test::random_full(3, rng) : test::random_fd(3, rng);
    const FiniteTopology* best = nullptr;
    for (const auto& t : topologies) {
      if (!finer_or_equal(xi, conv_of_topology(t))) continue;
      if (!best || finer_or_equal(conv_of_topology(t), conv_of_topology(*best))) best = &t;
    }
    REQUIRE(best != nullptr);
    // the coarser-than-xi topologies form a lattice, so the maximum is real
    for (const auto& t : topologies)
      if (finer_or_equal(xi, conv_of_topology(t)))
        CHECK(finer_or_equal(conv_of_topology(*best), conv_of_topology(t)));
    CHECK(topological_modification(xi) == *best);
  }
}

TEST_CASE("the finite-depth modification is the finest coarser deep structure") {
  std::mt19937 rng(109);
  const auto deep = enumerate_spaces({3, EnumMode::FiniteDepth});
  for (int i = 0; i < 12; ++i) {
    const auto xi = test::random_full(3, rng);
    const FiniteConvergence* best = nullptr;
    for (const auto& d : deep) {
      if (!finer_or_equal(xi, d)) continue;
      if (!best || finer_or_equal(d, *best)) best = &d;
    }
    REQUIRE(best != nullptr);
    for (const auto& d : deep)
      if (finer_or_equal(xi, d)) CHECK(finer_or_equal(*best, d));
    CHECK(finite_depth_modification(xi) == *best);
  }
}

TEST_CASE("the points construction against a from-scratch recomputation") {
  std::mt19937 rng(113);
  auto recompute = [](const FiniteConvLattice& l, Category cat, const PointSpace& ps) {
    const FiniteLattice& lat = l.lattice();
    // points straight from the definitions
    std::vector<int> reps;
    for (int p = 0; p < lat.size(); ++p) {
      if (p == lat.bottom()) continue;
      if (!lat.leq(p, l.lim(p))) continue;
      const bool prime = cat == Category::Cofrm ? is_join_prime_element(lat, p)
                         : cat == Category::Frm ? is_completely_prime_filter(lat, {p})
                                                : is_prime_filter(lat, {p});
      if (prime) reps.push_back(p);
    }
    REQUIRE(reps == ps.reps());
    const int np = static_cast<int>(reps.size());
    auto bullet = [&](int e) {
      Subset out;
      for (int i = 0; i < np; ++i)
        if (lat.leq(reps[static_cast<std::size_t>(i)], e)) out = out.with(i);
      return out;
    };
    for (Mask f = 1; f < subset_count(np); ++f) {
      // circle of the principal filter, then the displayed limit formula
      Mask circle = 0;
      for (int e = 0; e < lat.size(); ++e)
        if (Subset(f).subset_of(bullet(e))) circle |= Mask(1) << e;
      const int min = lat.meet_of(circle);
      REQUIRE(((circle >> min) & 1u) == 1u);  // the trace is a filter
      CHECK(ps.conv().limit(Subset(f)) == bullet(l.lim(min)));
    }
  };
  for (int i = 0; i < 10; ++i) {
    const auto c = test::random_full(3, rng);
    const auto l = std::make_shared<const FiniteConvLattice>(powerset_lattice(c));
    for (Category cat : {Category::Lat, Category::Frm, Category::Cofrm})
      recompute(*l, cat, PointSpace::build(l, cat));
  }
  // a few non-powerset shapes with pinned-to-top limits
  for (const FiniteLattice& base : {chain_lattice(5), n5_lattice(), diamond_stack_lattice(2)}) {
    auto sp = std::make_shared<const FiniteLattice>(base);
    const auto cl = std::make_shared<const FiniteConvLattice>(
        FiniteConvLattice::build(sp, std::vector<int>(base.size(), base.top())));
    recompute(*cl, Category::Lat, PointSpace::build(cl, Category::Lat));
  }
}

TEST_CASE("on finite topological spaces sobriety is exactly T0") {
  for (int n = 0; n <= 4; ++n)
    enumerate_topologies(n, [&](const FiniteTopology& t) {
      const auto c = conv_of_topology(t);
      CHECK(check_property(c, PropertyId::Sober).holds ==
            check_property(c, PropertyId::T0).holds);
      CHECK(check_property(c, PropertyId::QuasiSober).holds);
    });
}

TEST_CASE("weak sobriety coincides with aas on finite carriers") {
  std::mt19937 rng(127);
  for (int i = 0; i < 40; ++i) {
    const auto c = i % 2 ? test::random_fd(5, rng) : test::random_full(3, rng);
    CHECK(check_property(c, PropertyId::WeaklySober).holds ==
          check_property(c, PropertyId::Aas).holds);
  }
}

TEST_CASE("comparison agrees with continuity of the identity") {
  std::mt19937 rng(131);
  for (int i = 0; i < 40; ++i) {
    const auto a = test::random_full(3, rng);
    const auto b = test::random_full(3, rng);
    const auto id = identity_map(a.carrier_ptr());
    const Comparison c = compare(a, b);
    CHECK(is_continuous(id, a, b) ==
          (c == Comparison::Finer || c == Comparison::Equal));
    CHECK(is_continuous(id, b, a) ==
          (c == Comparison::Coarser || c == Comparison::Equal));
  }
}

#include <doctest.h>

#include "fincov/enumeration.hpp"
#include "fincov/fixtures.hpp"
#include "fincov/sobrification.hpp"
#include "helpers.hpp"

using namespace fincov;
using test::sub;

TEST_CASE("c-irreducibility") {
  const auto e6 = fixtures::e6();
  CHECK(is_c_irreducible(e6, sub({0, 1})));  // the limit of the irreducible {x,y}
  CHECK(is_c_irreducible(e6, sub({0})));
  CHECK_FALSE(is_c_irreducible(discrete_conv(make_points(2)), sub({0, 1})));

  SUBCASE("closure characterization on random spaces") {
    std::mt19937 rng(71);
    for (int i = 0; i < 25; ++i) {
      const auto c = test::random_full(3, rng);
      const auto t = topological_modification(c);
      const auto irr = irreducible_closed_sets(t);
      for (Mask m = 1; m < 8; ++m)
        CHECK(is_c_irreducible(c, Subset(m)) ==
              (std::find(irr.begin(), irr.end(), t.closure(Subset(m))) != irr.end()));
    }
  }
}

TEST_CASE("irreducible closed sets") {
  SUBCASE("Sierpinski") {
    const auto irr = irreducible_closed_sets(fixtures::sierpinski());
    CHECK(irr == std::vector<Subset>{sub({0}), sub({0, 1})});
  }
  SUBCASE("discrete: singletons") {
    const auto irr = irreducible_closed_sets(discrete_topology(make_points(3)));
    CHECK(irr == std::vector<Subset>{sub({0}), sub({1}), sub({2})});
  }
  SUBCASE("antidiscrete: the whole carrier") {
    const auto irr = irreducible_closed_sets(antidiscrete_topology(make_points(2)));
    CHECK(irr == std::vector<Subset>{sub({0, 1})});
  }
}

TEST_CASE("sobrification") {
  SUBCASE("a sober space is its own sobrification") {
    const auto s = sobrify(fixtures::sierpinski());
    CHECK(s.s_points().size() == 2);
    CHECK(s.e_injective());
    const auto base = conv_of_topology(fixtures::sierpinski());
    const auto lifted = conv_of_topology(s.s_top());
    CHECK(find_homeomorphism(base, lifted).has_value());
    CHECK(s.e(0) == 0);
    CHECK(s.e(1) == 1);
  }
  SUBCASE("T0 topologies: e itself is a homeomorphism") {
    enumerate_topologies(3, [&](const FiniteTopology& t) {
      const auto conv = conv_of_topology(t);
      const auto s = sobrify(t);
      if (check_property(conv, PropertyId::T0).holds) {
        CHECK(s.e_injective());
        CHECK(s.s_points().size() == static_cast<std::size_t>(t.size()));
        std::vector<int> table;
        for (int x = 0; x < t.size(); ++x) table.push_back(s.e(x));
        const auto s_conv = conv_of_topology(s.s_top());
        const SpaceMap e_map(conv.carrier_ptr(), s_conv.carrier_ptr(), table);
        CHECK(e_map.bijective());
        CHECK(is_continuous(e_map, conv, s_conv));
        CHECK(is_continuous(e_map.inverse(), s_conv, conv));
      } else {
        CHECK_FALSE(s.e_injective());
      }
    });
  }
  SUBCASE("antidiscrete carriers collapse to a single point") {
    const auto s = sobrify(antidiscrete_topology(make_points(2)));
    CHECK(s.s_points().size() == 1);
    CHECK(s.e(0) == s.e(1));
  }
}

TEST_CASE("the quotient of powerset points is the sobrification") {
  SUBCASE("Sierpinski") {
    const auto report = verify_sobrification_theorem(fixtures::sierpinski());
    CHECK(report.holds());
    CHECK(report.t0);
    CHECK(report.canonical_homeomorphism);
    CHECK(report.e_equals_q_after_h);
  }
  SUBCASE("non-T0 input: the identification still holds, the embedding clause is skipped") {
    const auto report = verify_sobrification_theorem(antidiscrete_topology(make_points(2)));
    CHECK(report.holds());
    CHECK_FALSE(report.t0);
    CHECK(report.canonical_homeomorphism);
  }
  SUBCASE("every topology on up to 3 points") {
    for (int n = 0; n <= 3; ++n)
      enumerate_topologies(
          n, [&](const FiniteTopology& t) { CHECK(verify_sobrification_theorem(t).holds()); });
  }
}

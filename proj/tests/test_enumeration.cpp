#include <doctest.h>

#include <set>

#include "fincov/enumeration.hpp"
#include "fincov/suites.hpp"
#include "helpers.hpp"

using namespace fincov;

namespace {

// Independent count of the full-table universe: limit tables decompose into
// one antitone boolean function per carrier point, constrained by the point
// axiom, so the total is a product of down-set counts.
long full_count_oracle(int n) {
  const int subsets = static_cast<int>(subset_count(n)) - 1;  // nonempty subsets
  long product = 1;
  for (int t = 0; t < n; ++t) {
    long count = 0;
    for (Mask dn = 0; dn < (Mask(1) << subsets); ++dn) {
      // dn encodes the family of nonempty subsets whose limit contains t
      bool down_closed = true;
      for (Mask a = 1; a <= static_cast<Mask>(subsets) && down_closed; ++a)
        for (Mask b = 1; b <= static_cast<Mask>(subsets) && down_closed; ++b)
          if ((a & ~b) == 0 && ((dn >> (b - 1)) & 1u) && !((dn >> (a - 1)) & 1u))
            down_closed = false;
      const bool point_axiom = ((dn >> (singleton(t).bits - 1)) & 1u) != 0;
      if (down_closed && point_axiom) ++count;
    }
    product *= count;
  }
  return product;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_spaces({2, EnumMode::FiniteDepth}).size() == 4);
  CHECK(enumerate_spaces({3, EnumMode::FiniteDepth}).size() == 64);
  CHECK(enumerate_spaces({1, EnumMode::Full}).size() == 1);
  CHECK(enumerate_spaces({2, EnumMode::Full}).size() == 9);
  CHECK(enumerate_spaces({3, EnumMode::Full}).size() ==
        static_cast<std::size_t>(full_count_oracle(3)));
  CHECK(full_count_oracle(3) == 2744);
  CHECK_THROWS_AS(enumerate_spaces({6, EnumMode::FiniteDepth}), TooLarge);
  CHECK_THROWS_AS(enumerate_spaces({4, EnumMode::Full}), TooLarge);
}

TEST_CASE("property preconditions filter the stream") {
  long manual = 0;
  enumerate_spaces({3, EnumMode::Full}, [&](const FiniteConvergence& c) {
    if (check_property(c, PropertyId::S0).holds && check_property(c, PropertyId::T0).holds)
      ++manual;
  });
  const auto filtered =
      enumerate_spaces({3, EnumMode::Full, {PropertyId::S0, PropertyId::T0}});
  CHECK(static_cast<long>(filtered.size()) == manual);
  CHECK(manual == 136);
  for (const auto& c : filtered) {
    CHECK(check_property(c, PropertyId::S0).holds);
    CHECK(check_property(c, PropertyId::T0).holds);
  }
}

TEST_CASE("every enumerated table is distinct and valid") {
  std::set<std::vector<Mask>> seen;
  enumerate_spaces({3, EnumMode::Full}, [&](const FiniteConvergence& c) {
    std::vector<Mask> key;
    for (const Subset s : c.table()) key.push_back(s.bits);
    CHECK(seen.insert(key).second);
  });
  CHECK(seen.size() == 2744);
}

TEST_CASE("topology enumeration") {
  CHECK(enumerate_topologies(0).size() == 1);
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);

  SUBCASE("the topological spaces among full tables are exactly the topologies") {
    long topological = 0;
    enumerate_spaces({3, EnumMode::Full}, [&](const FiniteConvergence& c) {
      if (check_property(c, PropertyId::Topological).holds) ++topological;
    });
    CHECK(topological == 29);
  }
  SUBCASE("round trip through the convergence") {
    enumerate_topologies(3, [&](const FiniteTopology& t) {
      CHECK(topological_modification(conv_of_topology(t)) == t);
    });
  }
}

TEST_CASE("lattice generation") {
  long total = 0, chains3 = 0, b2 = 0;
  std::set<std::vector<int>> seen_chain3;
  generate_conv_lattices(16, [&](const FiniteConvLattice& l) {
    ++total;
    if (l.size() == 3 && l.lattice().name(0) == "c0") {
      ++chains3;
      CHECK(seen_chain3.insert(l.lam()).second);
    }
    if (l.size() == 4 && l.lattice().name(0) == "b00") ++b2;
  });
  CHECK(total >= 10000);
  CHECK(total == 11190);  // deterministic catalog; guards the generator
  // 3-chain: antitone pairs lam(c1) >= lam(c2), counted by brute force
  long expect = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (b <= a) ++expect;
  CHECK(chains3 == expect);
  // two-bit boolean lattice: brute force over all maps on the three
  // non-bottom elements
  const auto base = boolean_lattice(2);
  long expect_b2 = 0;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      for (int t = 0; t < 4; ++t) {
        // u = lam(b10), v = lam(b01), t = lam(b11); antitone needs t below both
        if (base.leq(t, u) && base.leq(t, v)) ++expect_b2;
      }
  CHECK(b2 == expect_b2);
  MESSAGE("generated lattice instances: ", total);
}

TEST_CASE("survey finds implications and witnesses") {
  const auto res = survey({3, EnumMode::FiniteDepth},
                          {PropertyId::T1, PropertyId::TD, PropertyId::T0});
  CHECK(res.universe_size == 64);
  CHECK_FALSE(res.entry(PropertyId::T1, PropertyId::TD).counterexample.has_value());
  CHECK_FALSE(res.entry(PropertyId::TD, PropertyId::T0).counterexample.has_value());
  CHECK(res.entry(PropertyId::TD, PropertyId::T1).counterexample.has_value());
  CHECK(res.entry(PropertyId::T0, PropertyId::TD).counterexample.has_value());

  const auto res4 = survey({4, EnumMode::FiniteDepth},
                           {PropertyId::WeaklySober, PropertyId::Sober});
  CHECK(res4.entry(PropertyId::WeaklySober, PropertyId::Sober).counterexample.has_value());
  const auto res3 = survey({3, EnumMode::FiniteDepth},
                           {PropertyId::Sober, PropertyId::T0});
  CHECK(res3.entry(PropertyId::Sober, PropertyId::T0).counterexample.has_value());
}

TEST_CASE("suites are deterministic") {
  const auto a = verify_suite("paper_examples");
  const auto b = verify_suite("paper_examples");
  CHECK(format_suite(a) == format_suite(b));
  CHECK(a.passed());
  CHECK(a.cases == 7);
  CHECK_THROWS_AS(verify_suite("nonsense"), UnknownSuite);
}

TEST_CASE("coverage: every verified statement lives in exactly one suite") {
  std::set<std::string> names(suite_names().begin(), suite_names().end());
  std::set<std::string> statements;
  for (const auto& [statement, suite] : suite_coverage()) {
    CHECK(names.count(suite) == 1);
    CHECK(statements.insert(statement).second);
  }
  CHECK(statements.size() >= 40);
}

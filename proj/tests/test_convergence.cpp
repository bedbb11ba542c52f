#include <doctest.h>

#include "fincov/fixtures.hpp"
#include "fincov/properties.hpp"
#include "helpers.hpp"

using namespace fincov;
using test::sub;

namespace {

// Independent oracle: adherence straight from the definition, the union of
// limits over all meshing principal filters.
Subset adherence_oracle(const FiniteConvergence& c, Subset b) {
  Subset out;
  for (Mask m = 1; m < subset_count(c.size()); ++m)
    if (Subset(m).meets(b)) out = out | c.limit(Subset(m));
  return out;
}

// Independent oracle: limit of a topology through neighborhood filters.
Subset topology_limit_oracle(const FiniteTopology& t, Subset a) {
  Subset out;
  for (int x = 0; x < t.size(); ++x) {
    bool conv = true;
    for (Subset o : t.opens())
      if (o.contains(x) && !a.subset_of(o)) conv = false;
    if (conv) out = out.with(x);
  }
  return out;
}

}  // namespace

TEST_CASE("building validates the axioms") {
  auto pts = make_points({"x", "y", "z"});

  SUBCASE("E6 table is valid and finitely deep") {
    const auto c = fixtures::e6();
    CHECK(c.finite_depth_hint());
    CHECK(c.limit(sub({0})) == sub({0, 1}));
    CHECK(c.limit(sub({0, 2})) == sub({1}));
    CHECK(c.limit(sub({0, 1, 2})) == sub({1}));
  }
  SUBCASE("a point that does not converge to itself is rejected") {
    std::vector<Subset> limits(8);
    limits[1] = Subset();  // lim{x} = {}
    limits[2] = sub({1});
    limits[4] = sub({2});
    CHECK_THROWS_AS(FiniteConvergence::build(pts, limits), PointAxiomViolation);
  }
  SUBCASE("monotonicity violations are rejected") {
    std::vector<Subset> limits(8, Subset());
    limits[1] = sub({0});
    limits[2] = sub({1});
    limits[4] = sub({2});
    limits[3] = sub({0, 1});  // lim{x,y} must sit inside lim{x}
    CHECK_THROWS_AS(FiniteConvergence::build(pts, limits), MonotonicityViolation);
  }
  SUBCASE("E3 is valid but not finitely deep") {
    const auto c = fixtures::e3();
    CHECK_FALSE(c.finite_depth_hint());
    CHECK(c.limit(sub({0, 1})).empty());
  }
  SUBCASE("finite-depth builder requires reflexivity") {
    CHECK_THROWS_AS(
        FiniteConvergence::finite_depth(make_points(2), {sub({1}), sub({1})}),
        NotReflexive);
  }
  SUBCASE("empty filters have no limit") {
    CHECK_THROWS_AS(fixtures::e6().limit(Subset()), EmptyFilterBase);
  }
}

TEST_CASE("finite-depth builder matches the arrow description") {
  // arrows z->x, x<->y
  const auto c = fixtures::e1();
  CHECK(c.limit(sub({0, 1, 2})) == sub({0}));
  CHECK(c.limit(sub({1, 2})) == sub({0}));
  CHECK(c.limit(sub({2})) == sub({2, 0}));

  const auto discrete = discrete_conv(make_points(2));
  CHECK(discrete.limit(sub({0})) == sub({0}));
  CHECK(discrete.limit(sub({0, 1})).empty());

  const auto anti = antidiscrete_conv(make_points(2));
  for (Mask m = 1; m < 4; ++m) CHECK(anti.limit(Subset(m)) == full_set(2));
}

TEST_CASE("adherence agrees with the definitional oracle") {
  CHECK(adherence(fixtures::e6(), sub({0})) == sub({0, 1}));
  CHECK(adherence_oracle(fixtures::e6(), sub({0})) == sub({0, 1}));

  const auto anti = antidiscrete_conv(make_points(3));
  CHECK(adherence(anti, sub({1})) == full_set(3));
  const auto disc = discrete_conv(make_points(2));
  CHECK(adherence(disc, sub({0, 1})) == sub({0, 1}));

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto c = test::random_fd(4, rng);
    for (Mask m = 1; m < subset_count(4); ++m)
      CHECK(adherence(c, Subset(m)) == adherence_oracle(c, Subset(m)));
  }
  for (int i = 0; i < 50; ++i) {
    const auto c = test::random_full(3, rng);
    for (Mask m = 1; m < subset_count(3); ++m)
      CHECK(adherence(c, Subset(m)) == adherence_oracle(c, Subset(m)));
  }
}

TEST_CASE("mesh") {
  CHECK(mesh(sub({0}), sub({0, 1})));
  CHECK_FALSE(mesh(sub({0}), sub({1})));
  CHECK_FALSE(mesh(Subset(), full_set(3)));
}

TEST_CASE("closed and open subsets") {
  const auto c = fixtures::e6();
  SUBCASE("direct definitional scan on E6") {
    // lim{y} = {x,y,z} escapes {x,y}, so {x,y} is not closed.
    CHECK_FALSE(set_status(c, sub({0, 1})).closed);
  }
  SUBCASE("the empty set is open and closed") {
    const auto st = set_status(c, Subset());
    CHECK(st.closed);
    CHECK(st.open);
  }
  SUBCASE("in a discrete space everything is open and closed") {
    const auto d = discrete_conv(make_points(3));
    for (Mask m = 0; m < 8; ++m) {
      CHECK(set_status(d, Subset(m)).closed);
      CHECK(set_status(d, Subset(m)).open);
    }
  }
  SUBCASE("openness is complementation of closedness") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
      const auto x = test::random_full(3, rng);
      for (Mask m = 0; m < 8; ++m)
        CHECK(set_status(x, Subset(m)).open ==
              set_status(x, full_set(3) - Subset(m)).closed);
    }
  }
}

TEST_CASE("topological modification") {
  SUBCASE("E6 and the cycle collapse to the antidiscrete topology") {
    CHECK(topological_modification(fixtures::e6()).opens().size() == 2);
    CHECK(topological_modification(fixtures::e7()).opens().size() == 2);
  }
  SUBCASE("the modification of a topology's convergence returns the topology") {
    const auto t = fixtures::sierpinski();
    CHECK(topological_modification(conv_of_topology(t)) == t);
  }
  SUBCASE("idempotence and comparison with the finite-depth reflector") {
    std::mt19937 rng(3);
    for (int i = 0; i < 60; ++i) {
      const auto c = i % 2 ? test::random_fd(4, rng) : test::random_full(3, rng);
      const auto l = finite_depth_modification(c);
      const auto t = conv_of_topology(topological_modification(c));
      CHECK(finer_or_equal(c, l));
      CHECK(finer_or_equal(l, t));
      CHECK(finite_depth_modification(l) == l);
      CHECK(topological_modification(t) == topological_modification(c));
    }
  }
}

TEST_CASE("finite-depth modification of E3") {
  const auto l = finite_depth_modification(fixtures::e3());
  CHECK(l.limit(sub({0, 1})) == sub({0, 1}));
  CHECK(l.finite_depth_hint());
  CHECK(check_property(fixtures::e3(), PropertyId::Sober).holds);
  CHECK_FALSE(check_property(l, PropertyId::Sober).holds);
}

TEST_CASE("convergence of a topology") {
  const auto t = fixtures::sierpinski();
  const auto c = conv_of_topology(t);
  CHECK(c.limit(sub({1})) == sub({0, 1}));
  CHECK(c.limit(sub({0})) == sub({0}));
  CHECK(c.limit(sub({0, 1})) == sub({0}));
  for (Mask m = 1; m < 4; ++m)
    CHECK(c.limit(Subset(m)) == topology_limit_oracle(t, Subset(m)));

  CHECK(conv_of_topology(discrete_topology(make_points(3))) ==
        discrete_conv(make_points(3)));
  CHECK(conv_of_topology(antidiscrete_topology(make_points(3))) ==
        antidiscrete_conv(make_points(3)));
}

TEST_CASE("comparison and lattice operations") {
  const auto d = discrete_conv(make_points(3));
  const auto a = antidiscrete_conv(make_points(3));
  CHECK(compare(d, a) == Comparison::Finer);
  CHECK(compare(a, d) == Comparison::Coarser);
  CHECK(compare(d, d) == Comparison::Equal);

  const auto e6 = fixtures::e6();
  CHECK(compare(e6, conv_of_topology(topological_modification(e6))) == Comparison::Finer);

  CHECK_THROWS_AS(compare(e6, discrete_conv(make_points({"a", "b", "c"}))), CarrierMismatch);

  const FiniteConvergence both[] = {fixtures::e1(), fixtures::e2()};
  const auto s = sup_conv(both);
  const auto i = inf_conv(both);
  for (Mask m = 1; m < 8; ++m) {
    CHECK(s.limit(Subset(m)) == (both[0].limit(Subset(m)) & both[1].limit(Subset(m))));
    CHECK(i.limit(Subset(m)) == (both[0].limit(Subset(m)) | both[1].limit(Subset(m))));
  }
  const auto d_xyz = discrete_conv(fixtures::e1().carrier_ptr());
  const auto a_xyz = antidiscrete_conv(fixtures::e1().carrier_ptr());
  const FiniteConvergence with_discrete[] = {fixtures::e1(), d_xyz};
  CHECK(sup_conv(with_discrete) == d_xyz);
  const FiniteConvergence with_anti[] = {fixtures::e1(), a_xyz};
  CHECK(inf_conv(with_anti) == a_xyz);
  CHECK_THROWS_AS(sup_conv(std::span<const FiniteConvergence>{}), EmptyList);
}

TEST_CASE("initial, final, subspace, product, quotient") {
  SUBCASE("subspace of a discrete space is discrete") {
    const auto d = discrete_conv(make_points(3));
    const auto [s, incl] = subspace_conv(d, sub({0, 2}));
    CHECK(s == discrete_conv(s.carrier_ptr()));
  }
  SUBCASE("subspace table of E6 on {x,y} by direct computation") {
    const auto [s, incl] = subspace_conv(fixtures::e6(), sub({0, 1}));
    // lim{x} = {x,y} and lim{y} = X restrict to {x,y}
    CHECK(s.limit(sub({0})) == sub({0, 1}));
    CHECK(s.limit(sub({1})) == sub({0, 1}));
    CHECK(s.limit(sub({0, 1})) == sub({0, 1}));
  }
  SUBCASE("the induced structure on a limit set minus its generic point") {
    // lim{x,y} = {x,y,z} in E4 has generic point z; the subspace on the
    // remainder {x,y} has every limit equal to {x,y}, by hand.
    const auto e4 = fixtures::e4();
    const Subset rest = e4.limit(sub({0, 1})).without(2);
    const auto [s, incl] = subspace_conv(e4, rest);
    for (Mask m = 1; m < subset_count(s.size()); ++m)
      CHECK(s.limit(Subset(m)) == full_set(2));
  }
  SUBCASE("product of one-point spaces") {
    const auto one = discrete_conv(make_points(1));
    CHECK(product_conv(one, one).conv.size() == 1);
  }
  SUBCASE("the adjunction between initial and final structures") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < 60; ++i) {
      const auto xi = test::random_full(3, rng);
      const auto tau = test::random_fd(3, rng);
      std::vector<int> table = {pick(rng), pick(rng), pick(rng)};
      const SpaceMap f(xi.carrier_ptr(), tau.carrier_ptr(), table);
      const bool cont = is_continuous(f, xi, tau);
      CHECK(cont == finer_or_equal(final_conv(f, xi), tau));
      CHECK(cont == finer_or_equal(xi, initial_conv(f, tau)));
    }
  }
  SUBCASE("quotient needs a surjection") {
    const auto d = discrete_conv(make_points(2));
    const SpaceMap c(d.carrier_ptr(), d.carrier_ptr(), {0, 0});
    CHECK_THROWS_AS(quotient_conv(c, d), NotSurjective);
  }
}

TEST_CASE("continuity") {
  const auto e6 = fixtures::e6();
  CHECK(is_continuous(identity_map(e6.carrier_ptr()), e6, e6));
  const auto coarser = conv_of_topology(topological_modification(e6));
  CHECK(is_continuous(identity_map(e6.carrier_ptr()), e6, coarser));
  CHECK_FALSE(is_continuous(identity_map(e6.carrier_ptr()), coarser, e6));
  // constant maps are continuous into anything
  const SpaceMap c(e6.carrier_ptr(), e6.carrier_ptr(), {1, 1, 1});
  CHECK(is_continuous(c, e6, e6));
}

TEST_CASE("density") {
  const auto e6 = fixtures::e6();
  CHECK(is_dense(e6, full_set(3)));
  CHECK(is_dense(e6, sub({1})));  // lim{y} is everything
  CHECK_FALSE(is_dense(discrete_conv(make_points(2)), sub({0})));
}

TEST_CASE("homeomorphism search") {
  const auto e1 = fixtures::e1();
  SUBCASE("identity on the same structure") {
    const auto h = find_homeomorphism(e1, e1);
    REQUIRE(h.has_value());
    CHECK(h->table() == std::vector<int>{0, 1, 2});
  }
  SUBCASE("a renaming is found") {
    // same arrows with points listed in another order: y' <-> z', x' -> y'
    const auto renamed = FiniteConvergence::finite_depth(
        make_points({"u", "v", "w"}), {test::sub({0, 1}), test::sub({1, 2}), test::sub({1, 2})});
    // u -> v, v <-> w : matches E1 with x=v, y=w (mutual pair), z=u
    const auto h = find_homeomorphism(e1, renamed);
    REQUIRE(h.has_value());
    CHECK(is_continuous(*h, e1, renamed));
    CHECK(is_continuous(h->inverse(), renamed, e1));
  }
  SUBCASE("discrete and antidiscrete are not homeomorphic") {
    CHECK_FALSE(
        find_homeomorphism(discrete_conv(make_points(2)), antidiscrete_conv(make_points(2)))
            .has_value());
  }
}

TEST_CASE("empty and one-point carriers") {
  const auto empty = FiniteConvergence::build(make_points(0), std::vector<Subset>(1));
  CHECK(empty.size() == 0);
  CHECK(empty.finite_depth_hint());
  CHECK(is_dense(empty, Subset()));
  for (PropertyId id : all_properties()) CHECK(check_property(empty, id).holds);

  const auto one = discrete_conv(make_points(1));
  CHECK(one.limit(sub({0})) == sub({0}));
  CHECK(check_property(one, PropertyId::Topological).holds);
}

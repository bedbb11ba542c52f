#include "fincov/fixtures.hpp"

namespace fincov::fixtures {

namespace {

Subset of(std::initializer_list<int> pts) {
  Subset s;
  for (int p : pts) s = s.with(p);
  return s;
}

}  // namespace

FiniteConvergence e1() {
  auto pts = make_points({"x", "y", "z"});
  return FiniteConvergence::finite_depth(pts, {of({0, 1}), of({0, 1}), of({2, 0})});
}

FiniteConvergence e2() {
  auto pts = make_points({"x", "y", "z"});
  return FiniteConvergence::finite_depth(pts, {of({0, 1}), of({0, 1}), of({2})});
}

FiniteConvergence e3() {
  auto pts = make_points({"x", "y", "s", "t"});
  std::vector<Subset> limits(subset_count(4));
  limits[singleton(0).bits] = of({0, 1, 2});
  limits[singleton(1).bits] = of({0, 1, 3});
  limits[singleton(2).bits] = of({2});
  limits[singleton(3).bits] = of({3});
  // every non-singleton filter fails to converge
  return FiniteConvergence::build(pts, std::move(limits));
}

FiniteConvergence e4() {
  auto pts = make_points({"x", "y", "z", "s", "t"});
  return FiniteConvergence::finite_depth(
      pts, {of({0, 1, 2, 3}), of({0, 1, 2, 4}), of({0, 1, 2}), of({3}), of({4})});
}

FiniteConvergence e5() {
  auto pts = make_points({"x", "y", "t", "s", "w", "z"});
  return FiniteConvergence::finite_depth(
      pts, {of({0, 1, 3, 2}), of({0, 1, 2, 4}), of({2}), of({3}), of({4}), of({5, 0})});
}

FiniteConvergence e6() {
  auto pts = make_points({"x", "y", "z"});
  return FiniteConvergence::finite_depth(pts, {of({0, 1}), of({0, 1, 2}), of({1, 2})});
}

FiniteConvergence e7() {
  auto pts = make_points({"x", "y", "z"});
  return FiniteConvergence::finite_depth(pts, {of({0, 1}), of({1, 2}), of({2, 0})});
}

FiniteTopology sierpinski() {
  auto pts = make_points({"a", "b"});
  return FiniteTopology::build(pts, {Subset(0), of({1}), of({0, 1})});
}

}  // namespace fincov::fixtures

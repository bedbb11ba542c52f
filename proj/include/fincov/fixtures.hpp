#ifndef FINCOV_FIXTURES_HPP
#define FINCOV_FIXTURES_HPP

#include "fincov/convergence.hpp"

namespace fincov::fixtures {

// Bundled example spaces, small convergences that separate the sobriety and
// separation notions from one another. E1..E7 are referenced by these names
// in the CLI and the verification suites.

/// E1: three points, two of them with the same limits; T0, quasi-sober,
/// not weakly sober.  Arrows: z->x, x<->y.
FiniteConvergence e1();

/// E2: like E1 but with z isolated; S0 instead of T0.
FiniteConvergence e2();

/// E3: four points, only singletons converge; sober, not T0, not finitely
/// deep, and its finite-depth modification is not sober.
FiniteConvergence e3();

/// E4: five points; sober, finitely deep, not T0.
FiniteConvergence e4();

/// E5: six points; T0, weakly sober, finitely deep, not sober.
FiniteConvergence e5();

/// E6: three points; T0 and sober but its topological modification is the
/// antidiscrete topology.
FiniteConvergence e6();

/// E7: the three-point cycle; T_D with antidiscrete topological
/// modification.
FiniteConvergence e7();

/// Two points a < b, opens {}, {b}, {a b}.
FiniteTopology sierpinski();

}  // namespace fincov::fixtures

#endif

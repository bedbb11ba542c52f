#ifndef FINCOV_ERRORS_HPP
#define FINCOV_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fincov {

// Base class for all structure-validation and usage errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct PointAxiomViolation : Error {
  int point;
  explicit PointAxiomViolation(int point, const std::string& name)
      : Error("point axiom violated: " + name + " is not a limit of its own principal ultrafilter"),
        point(point) {}
};

struct MonotonicityViolation : Error {
  std::uint32_t small, big;
  MonotonicityViolation(std::uint32_t small, std::uint32_t big)
      : Error("monotonicity violated: limit of the larger set is not contained in limit of the smaller"),
        small(small), big(big) {}
};

struct MissingEntry : Error {
  std::uint32_t subset;
  explicit MissingEntry(std::uint32_t subset)
      : Error("limit table has no entry for a nonempty subset"), subset(subset) {}
};

struct EmptyFilterBase : Error {
  EmptyFilterBase() : Error("the empty set does not generate a filter") {}
};

struct NotReflexive : Error {
  int point;
  explicit NotReflexive(int point, const std::string& name)
      : Error("relation is not reflexive at " + name), point(point) {}
};

struct CarrierMismatch : Error {
  CarrierMismatch() : Error("operands live on different carriers") {}
};

struct EmptyList : Error {
  EmptyList() : Error("expected a nonempty list of structures") {}
};

struct NotSurjective : Error {
  NotSurjective() : Error("quotient requires a surjective map") {}
};

struct NotAPartialOrder : Error {
  explicit NotAPartialOrder(const std::string& why) : Error("not a partial order: " + why) {}
};

struct MeetMissing : Error {
  int a, b;
  MeetMissing(int a, int b) : Error("pair of elements has no meet"), a(a), b(b) {}
};

struct JoinMissing : Error {
  int a, b;
  JoinMissing(int a, int b) : Error("pair of elements has no join"), a(a), b(b) {}
};

struct NotAntitone : Error {
  int a, b;
  NotAntitone(int a, int b)
      : Error("limit assignment is not antitone on principal filters"), a(a), b(b) {}
};

struct NoPseudocomplement : Error {
  int element;
  explicit NoPseudocomplement(int element)
      : Error("element has no pseudocomplement"), element(element) {}
};

struct NotMonotone : Error {
  NotMonotone() : Error("lattice map is not monotone") {}
};

struct NotAPoint : Error {
  NotAPoint() : Error("preimage filter is not a point of the source lattice") {}
};

struct UnknownProperty : Error {
  explicit UnknownProperty(const std::string& name) : Error("unknown property: " + name) {}
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error("size cap exceeded: " + what) {}
};

struct InvalidTopology : Error {
  explicit InvalidTopology(const std::string& why) : Error("not a topology: " + why) {}
};

}  // namespace fincov

#endif

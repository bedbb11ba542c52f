#ifndef FINCOV_DSL_HPP
#define FINCOV_DSL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fincov/lattice.hpp"

namespace fincov::dsl {

/// Parse error with source position and what was expected there.
struct SyntaxError : Error {
  int line, col;
  SyntaxError(int line, int col, const std::string& expected)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
              ": expected " + expected),
        line(line), col(col) {}
};

struct DuplicateName : Error {
  explicit DuplicateName(const std::string& name) : Error("duplicate name: " + name) {}
};

struct UnknownPoint : Error {
  explicit UnknownPoint(const std::string& name) : Error("unknown point: " + name) {}
};

struct ArityError : Error {
  explicit ArityError(const std::string& what) : Error("arity error: " + what) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& name) : Error("unknown declaration: " + name) {}
};

struct Decl {
  std::string name;
  int line = 0, col = 0;
  std::variant<FiniteConvergence, FiniteTopology, FiniteConvLattice, SpaceMap> value;
  std::string map_source, map_target;  // set for map declarations only

  bool is_space() const { return std::holds_alternative<FiniteConvergence>(value); }
  bool is_topology() const { return std::holds_alternative<FiniteTopology>(value); }
  bool is_lattice() const { return std::holds_alternative<FiniteConvLattice>(value); }
  bool is_map() const { return std::holds_alternative<SpaceMap>(value); }
};

/// A parsed document: named spaces, topologies, lattices and maps. Names are
/// unique and forward references are rejected.
struct Document {
  std::vector<Decl> decls;

  const Decl* find(const std::string& name) const;
  const Decl& at(const std::string& name) const;  // throws UnknownName
};

Document parse(const std::string& text);

// Canonical rendering; parse(render(doc)) reproduces the document.
std::string render_space(const std::string& name, const FiniteConvergence& conv);
std::string render_topology(const std::string& name, const FiniteTopology& top);
std::string render_lattice(const std::string& name, const FiniteConvLattice& lattice);
std::string render_map(const std::string& name, const SpaceMap& map,
                       const std::string& source_name, const std::string& target_name);
std::string render(const Document& doc);

/// DOT digraph: one node per point, one edge per specialization arrow,
/// loops omitted.
std::string to_dot(const std::string& name, const FiniteConvergence& conv);

}  // namespace fincov::dsl

#endif

#include "fincov/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fincov/dsl.hpp"
#include "fincov/fixtures.hpp"
#include "fincov/points.hpp"
#include "fincov/sobrification.hpp"
#include "fincov/suites.hpp"

namespace fincov::cli {

namespace {

dsl::Document builtin_document() {
  dsl::Document doc;
  auto add_space = [&](const std::string& name, FiniteConvergence c) {
    doc.decls.push_back(dsl::Decl{name, 0, 0, std::move(c), "", ""});
  };
  add_space("E1", fixtures::e1());
  add_space("E2", fixtures::e2());
  add_space("E3", fixtures::e3());
  add_space("E4", fixtures::e4());
  add_space("E5", fixtures::e5());
  add_space("E6", fixtures::e6());
  add_space("E7", fixtures::e7());
  doc.decls.push_back(dsl::Decl{"Sierpinski", 0, 0, fixtures::sierpinski(), "", ""});
  return doc;
}

struct Context {
  dsl::Document user;
  dsl::Document builtin = builtin_document();

  const dsl::Decl& at(const std::string& name) const {
    if (const dsl::Decl* d = user.find(name)) return *d;
    return builtin.at(name);
  }
};

FiniteConvergence as_space(const dsl::Decl& d) {
  if (d.is_space()) return std::get<FiniteConvergence>(d.value);
  if (d.is_topology()) return conv_of_topology(std::get<FiniteTopology>(d.value));
  throw Error(d.name + " is not a space");
}

std::string describe_witness(const PointSet& pts, const Witness& w) {
  std::string out = w.detail;
  for (Subset s : w.subsets) out += " " + pts.render(s);
  for (int p : w.points) out += " " + pts.name(p);
  return out;
}

int cmd_check(const Context& ctx, const std::string& name, const std::string& props_csv,
              bool all, std::ostream& out) {
  const FiniteConvergence conv = as_space(ctx.at(name));
  std::vector<PropertyId> props;
  if (all || props_csv.empty()) {
    props = all_properties();
  } else {
    std::stringstream ss(props_csv);
    std::string item;
    while (std::getline(ss, item, ',')) props.push_back(property_from_name(item));
  }
  bool ok = true;
  for (PropertyId id : props) {
    const PropertyVerdict v = check_property(conv, id);
    out << property_name(id) << '=' << (v.holds ? "true" : "false") << '\n';
    if (!v.holds) {
      ok = false;
      out << "  witness:" << describe_witness(conv.carrier(), *v.witness) << '\n';
    }
  }
  return ok ? 0 : 1;
}

int cmd_modify(const Context& ctx, const std::string& name, bool top, bool depth,
               std::ostream& out) {
  const FiniteConvergence conv = as_space(ctx.at(name));
  if (top == depth) throw Error("choose exactly one of --top and --finite-depth");
  if (top)
    out << dsl::render_topology(name + "_top", topological_modification(conv));
  else
    out << dsl::render_space(name + "_fd", finite_depth_modification(conv));
  return 0;
}

PointSpace point_space_of(const dsl::Decl& d, Category cat) {
  if (d.is_lattice())
    return PointSpace::build(std::make_shared<const FiniteConvLattice>(
                                 std::get<FiniteConvLattice>(d.value)),
                             cat);
  return PointSpace::build(
      std::make_shared<const FiniteConvLattice>(powerset_lattice(as_space(d))), cat);
}

int cmd_pt(const Context& ctx, const std::string& name, const std::string& cat_name,
           std::ostream& out) {
  const PointSpace ps = point_space_of(ctx.at(name), category_from_name(cat_name));
  out << "# points of " << name << " (" << cat_name << "): ";
  for (int i = 0; i < ps.point_count(); ++i)
    out << (i ? ", " : "") << ps.base().lattice().name(ps.rep(i));
  out << '\n' << dsl::render_space(name + "_pt", ps.conv());
  return 0;
}

int cmd_ptprime(const Context& ctx, const std::string& name, const std::string& cat_name,
                std::ostream& out) {
  const PointSpace ps = point_space_of(ctx.at(name), category_from_name(cat_name));
  const PtPrime pp = pt_prime(ps);
  out << "# classes of " << name << " (limits of points): ";
  for (std::size_t i = 0; i < pp.quotient.class_reps.size(); ++i)
    out << (i ? ", " : "")
        << ps.base().lattice().name(pp.quotient.class_reps[i]);
  out << '\n' << dsl::render_space(name + "_ptprime", pp.conv);
  return 0;
}

int cmd_sobrify(const Context& ctx, const std::string& name, std::ostream& out) {
  const dsl::Decl& d = ctx.at(name);
  FiniteTopology top = antidiscrete_topology(make_points(0));
  if (d.is_topology()) {
    top = std::get<FiniteTopology>(d.value);
  } else {
    const FiniteConvergence conv = as_space(d);
    if (!check_property(conv, PropertyId::Topological).holds)
      throw Error(name + " is not topological; sobrification is defined for topologies");
    top = topological_modification(conv);
  }
  const Sobrification s = sobrify(top);
  for (int x = 0; x < top.size(); ++x)
    out << "# e: " << top.carrier().name(x) << " -> "
        << s.s_top().carrier().name(s.e(x)) << '\n';
  out << dsl::render_topology(name + "_sober", s.s_top());
  return 0;
}

int cmd_mine(int n, const std::string& mode, const std::string& props_csv, std::ostream& out) {
  EnumSpec spec;
  spec.n = n;
  if (mode == "fd")
    spec.mode = EnumMode::FiniteDepth;
  else if (mode == "full")
    spec.mode = EnumMode::Full;
  else
    throw Error("mode must be fd or full");
  std::vector<PropertyId> props;
  if (props_csv.empty()) {
    props = all_properties();
  } else {
    std::stringstream ss(props_csv);
    std::string item;
    while (std::getline(ss, item, ',')) props.push_back(property_from_name(item));
  }
  const SurveyResult res = survey(spec, props);
  out << "# universe: " << res.universe_size << " spaces (n=" << n << ", " << mode << ")\n";
  for (const SurveyEntry& e : res.entries) {
    if (!e.counterexample) {
      out << property_name(e.premise) << " => " << property_name(e.conclusion) << "  (on "
          << e.holds_on << " premise instances)\n";
    } else {
      out << property_name(e.premise) << " !=> " << property_name(e.conclusion) << '\n'
          << dsl::render_space("counterexample", *e.counterexample);
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, bool all, std::ostream& out) {
  std::vector<std::string> names;
  if (all)
    names = suite_names();
  else
    names.push_back(suite);
  bool ok = true;
  for (const std::string& n : names) {
    const SuiteResult r = verify_suite(n);
    out << format_suite(r);
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

int cmd_export(const Context& ctx, const std::string& name, std::ostream& out) {
  out << dsl::to_dot(name, as_space(ctx.at(name)));
  return 0;
}

}  // namespace

std::string builtin_document_text() { return dsl::render(builtin_document()); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for finite convergence spaces and convergence lattices"};
  app.require_subcommand(1);
  std::string file;
  app.add_option("--file", file, "document with space/topology/lattice/map declarations");

  std::string name, props, cat = "lat", mode = "fd", suite;
  bool all = false, top = false, fd = false, dot = false;
  int n = 3;

  auto* check = app.add_subcommand("check", "evaluate properties of a space");
  check->add_option("name", name)->required();
  check->add_option("--props", props, "comma-separated property names");
  check->add_flag("--all", all, "check every property");

  auto* modify = app.add_subcommand("modify", "topological or finite-depth modification");
  modify->add_option("name", name)->required();
  modify->add_flag("--top", top);
  modify->add_flag("--finite-depth", fd);

  auto* pt = app.add_subcommand("pt", "space of points of a lattice (or of a powerset)");
  pt->add_option("name", name)->required();
  pt->add_option("--cat", cat, "lat, frm or cofrm");

  auto* ptp = app.add_subcommand("ptprime", "quotient of the space of points");
  ptp->add_option("name", name)->required();
  ptp->add_option("--cat", cat, "lat, frm or cofrm");

  auto* sob = app.add_subcommand("sobrify", "sobrification of a finite topology");
  sob->add_option("name", name)->required();

  auto* mine = app.add_subcommand("mine", "implication survey over an enumerated universe");
  mine->add_option("-n", n, "carrier size")->required();
  mine->add_option("--mode", mode, "fd or full");
  mine->add_option("--props", props, "comma-separated property names");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name");
  verify->add_flag("--all", all);

  auto* exp = app.add_subcommand("export", "DOT export of the specialization arrows");
  exp->add_option("name", name)->required();
  exp->add_flag("--dot", dot);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    Context ctx;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error("cannot open " + file);
      std::stringstream ss;
      ss << in.rdbuf();
      ctx.user = dsl::parse(ss.str());
    }
    if (check->parsed()) return cmd_check(ctx, name, props, all, out);
    if (modify->parsed()) return cmd_modify(ctx, name, top, fd, out);
    if (pt->parsed()) return cmd_pt(ctx, name, cat, out);
    if (ptp->parsed()) return cmd_ptprime(ctx, name, cat, out);
    if (sob->parsed()) return cmd_sobrify(ctx, name, out);
    if (mine->parsed()) return cmd_mine(n, mode, props, out);
    if (verify->parsed()) {
      if (!all && suite.empty()) throw Error("choose --suite <name> or --all");
      return cmd_verify(suite, all, out);
    }
    if (exp->parsed()) return cmd_export(ctx, name, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace fincov::cli

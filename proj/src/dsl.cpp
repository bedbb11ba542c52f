#include "fincov/dsl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fincov::dsl {

namespace {

struct Token {
  enum Kind { End, Ident, LBrace, RBrace, Sep, Comma, Arrow, BiArrow, Less } kind = End;
  std::string text;
  int line = 1, col = 1;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {"space",  "lattice", "topology", "map",
                                           "points", "elements", "depth",   "finite",
                                           "arrows", "lim",      "leq",     "opens",
                                           "from",   "to"};
  return kw;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string t) {
    out.push_back(Token{k, std::move(t), line, col});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      push(Token::Sep, "\n");
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '{') { push(Token::LBrace, "{"); ++i; ++col; continue; }
    if (c == '}') { push(Token::RBrace, "}"); ++i; ++col; continue; }
    if (c == ';') { push(Token::Sep, ";"); ++i; ++col; continue; }
    if (c == ',') { push(Token::Comma, ","); ++i; ++col; continue; }
    if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        push(Token::Arrow, "->");
        i += 2;
        col += 2;
        continue;
      }
      throw SyntaxError(line, col, "'->'");
    }
    if (c == '<') {
      if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
        push(Token::BiArrow, "<->");
        i += 3;
        col += 3;
        continue;
      }
      push(Token::Less, "<");
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(Token::Ident, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    throw SyntaxError(line, col, "a token");
  }
  out.push_back(Token{Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  Document run() {
    Document doc;
    skip_seps();
    while (peek().kind != Token::End) {
      parse_decl(doc);
      skip_seps();
    }
    return doc;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  void skip_seps() {
    while (peek().kind == Token::Sep) ++pos_;
  }
  Token expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) throw SyntaxError(peek().line, peek().col, what);
    return next();
  }
  std::string expect_name(const std::string& what) {
    const Token t = expect(Token::Ident, what);
    if (keywords().count(t.text)) throw SyntaxError(t.line, t.col, what + " (not a keyword)");
    return t.text;
  }
  std::string expect_keyword(const std::string& kw) {
    const Token t = expect(Token::Ident, "'" + kw + "'");
    if (t.text != kw) throw SyntaxError(t.line, t.col, "'" + kw + "'");
    return t.text;
  }

  int point_index(const PointSet& pts, const Token& t) const {
    auto idx = pts.index_of(t.text);
    if (!idx) throw UnknownPoint(t.text);
    return *idx;
  }

  Subset parse_subset(const PointSet& pts) {
    expect(Token::LBrace, "'{'");
    Subset s;
    while (peek().kind == Token::Ident) s = s.with(point_index(pts, next()));
    expect(Token::RBrace, "'}'");
    return s;
  }

  std::vector<std::string> parse_name_list() {
    std::vector<std::string> names;
    while (peek().kind == Token::Ident && !keywords().count(peek().text))
      names.push_back(next().text);
    if (names.empty()) throw SyntaxError(peek().line, peek().col, "a name");
    return names;
  }

  void check_fresh(const Document& doc, const std::string& name) const {
    if (doc.find(name)) throw DuplicateName(name);
  }

  void parse_decl(Document& doc) {
    const Token t = expect(Token::Ident, "'space', 'topology', 'lattice' or 'map'");
    if (t.text == "space") return parse_space(doc, t);
    if (t.text == "topology") return parse_topology(doc, t);
    if (t.text == "lattice") return parse_lattice(doc, t);
    if (t.text == "map") return parse_map(doc, t);
    throw SyntaxError(t.line, t.col, "'space', 'topology', 'lattice' or 'map'");
  }

  [[noreturn]] static void rethrow_at(const Error& e, int line, int col) {
    throw Error("at " + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }

  void parse_space(Document& doc, const Token& kw) {
    const std::string name = expect_name("a space name");
    check_fresh(doc, name);
    expect(Token::LBrace, "'{'");
    skip_seps();
    expect_keyword("points");
    PointSet pts{parse_name_list()};
    const int n = pts.size();

    bool depth_finite = false;
    std::vector<Subset> arrow_rows(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) arrow_rows[static_cast<std::size_t>(x)] = singleton(x);
    bool saw_arrows = false;
    std::map<Mask, std::pair<Subset, Token>> explicit_lims;

    skip_seps();
    while (peek().kind != Token::RBrace) {
      const Token st = expect(Token::Ident, "'depth', 'arrows', 'lim' or '}'");
      if (st.text == "depth") {
        expect_keyword("finite");
        depth_finite = true;
      } else if (st.text == "arrows") {
        saw_arrows = true;
        while (true) {
          const Token a = expect(Token::Ident, "a point name");
          const int src = point_index(pts, a);
          const Token arr = next();
          if (arr.kind != Token::Arrow && arr.kind != Token::BiArrow)
            throw SyntaxError(arr.line, arr.col, "'->' or '<->'");
          const Token b = expect(Token::Ident, "a point name");
          const int dst = point_index(pts, b);
          arrow_rows[static_cast<std::size_t>(src)] =
              arrow_rows[static_cast<std::size_t>(src)].with(dst);
          if (arr.kind == Token::BiArrow)
            arrow_rows[static_cast<std::size_t>(dst)] =
                arrow_rows[static_cast<std::size_t>(dst)].with(src);
          if (peek().kind != Token::Comma) break;
          next();
        }
      } else if (st.text == "lim") {
        const Subset a = parse_subset(pts);
        expect(Token::Arrow, "'->'");
        const Subset b = parse_subset(pts);
        if (a.empty())
          throw SyntaxError(st.line, st.col, "a nonempty subset (the empty set carries no filter)");
        if (explicit_lims.count(a.bits))
          throw SyntaxError(st.line, st.col, "a single limit entry per subset");
        explicit_lims.emplace(a.bits, std::make_pair(b, st));
      } else {
        throw SyntaxError(st.line, st.col, "'depth', 'arrows', 'lim' or '}'");
      }
      if (peek().kind != Token::RBrace) expect(Token::Sep, "';' or a newline");
      skip_seps();
    }
    expect(Token::RBrace, "'}'");

    // Singleton rows: explicit entries take precedence but must agree with
    // any arrows given for the same point.
    std::vector<Subset> rows = arrow_rows;
    for (int x = 0; x < n; ++x) {
      auto it = explicit_lims.find(singleton(x).bits);
      if (it == explicit_lims.end()) continue;
      const Subset t = it->second.first;
      if (!arrow_rows[static_cast<std::size_t>(x)].without(x).subset_of(t))
        throw SyntaxError(it->second.second.line, it->second.second.col,
                          "a limit consistent with the arrows");
      rows[static_cast<std::size_t>(x)] = t;
    }

    auto carrier = std::make_shared<const PointSet>(pts);
    try {
      if (depth_finite) {
        FiniteConvergence conv = FiniteConvergence::finite_depth(carrier, rows);
        for (const auto& [mask, entry] : explicit_lims) {
          if (Subset(mask).size() <= 1) continue;
          if (conv.limit(Subset(mask)) != entry.first)
            throw SyntaxError(entry.second.line, entry.second.col,
                              "a limit consistent with finite depth");
        }
        doc.decls.push_back(Decl{name, kw.line, kw.col, std::move(conv), "", ""});
      } else {
        std::vector<Subset> table(subset_count(n));
        std::vector<bool> defined(subset_count(n), false);
        for (int x = 0; x < n; ++x) {
          if (saw_arrows || explicit_lims.count(singleton(x).bits)) {
            table[singleton(x).bits] = rows[static_cast<std::size_t>(x)];
            defined[singleton(x).bits] = true;
          }
        }
        for (const auto& [mask, entry] : explicit_lims) {
          table[mask] = entry.first;
          defined[mask] = true;
        }
        for (Mask m = 1; m < subset_count(n); ++m)
          if (!defined[m]) throw MissingEntry(m);
        doc.decls.push_back(
            Decl{name, kw.line, kw.col, FiniteConvergence::build(carrier, table), "", ""});
      }
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      rethrow_at(e, kw.line, kw.col);
    }
  }

  void parse_topology(Document& doc, const Token& kw) {
    const std::string name = expect_name("a topology name");
    check_fresh(doc, name);
    expect(Token::LBrace, "'{'");
    skip_seps();
    expect_keyword("points");
    PointSet pts{parse_name_list()};
    skip_seps();
    expect_keyword("opens");
    std::vector<Subset> opens;
    while (peek().kind == Token::LBrace) opens.push_back(parse_subset(pts));
    skip_seps();
    expect(Token::RBrace, "'}'");
    try {
      doc.decls.push_back(Decl{
          name, kw.line, kw.col,
          FiniteTopology::build(std::make_shared<const PointSet>(pts), std::move(opens)), "", ""});
    } catch (const Error& e) {
      rethrow_at(e, kw.line, kw.col);
    }
  }

  void parse_lattice(Document& doc, const Token& kw) {
    const std::string name = expect_name("a lattice name");
    check_fresh(doc, name);
    expect(Token::LBrace, "'{'");
    skip_seps();
    expect_keyword("elements");
    const std::vector<std::string> names = parse_name_list();
    const int n = static_cast<int>(names.size());
    auto index = [&](const Token& t) {
      for (int i = 0; i < n; ++i)
        if (names[static_cast<std::size_t>(i)] == t.text) return i;
      throw UnknownPoint(t.text);
    };
    std::vector<Mask> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = Mask(1) << i;

    skip_seps();
    if (peek().kind == Token::Ident && peek().text == "leq") {
      next();
      while (true) {
        const int a = index(expect(Token::Ident, "an element name"));
        expect(Token::Less, "'<'");
        const int b = index(expect(Token::Ident, "an element name"));
        up[static_cast<std::size_t>(a)] |= Mask(1) << b;
        if (peek().kind != Token::Comma) break;
        next();
      }
      skip_seps();
    }
    // Transitive closure of the declared covers.
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if ((up[static_cast<std::size_t>(a)] >> b) & 1u) {
            const Mask m = up[static_cast<std::size_t>(a)] | up[static_cast<std::size_t>(b)];
            if (m != up[static_cast<std::size_t>(a)]) {
              up[static_cast<std::size_t>(a)] = m;
              grew = true;
            }
          }
    }

    expect_keyword("lim");
    std::vector<int> lam(static_cast<std::size_t>(n), -1);
    while (true) {
      const Token from = expect(Token::Ident, "an element name");
      expect(Token::Arrow, "'->'");
      const Token to = expect(Token::Ident, "an element name");
      const int a = index(from), b = index(to);
      if (lam[static_cast<std::size_t>(a)] >= 0)
        throw ArityError("element " + from.text + " has two limit entries");
      lam[static_cast<std::size_t>(a)] = b;
      if (peek().kind != Token::Comma) break;
      next();
    }
    for (int i = 0; i < n; ++i)
      if (lam[static_cast<std::size_t>(i)] < 0)
        throw ArityError("element " + names[static_cast<std::size_t>(i)] + " has no limit entry");
    skip_seps();
    expect(Token::RBrace, "'}'");
    try {
      auto lattice = std::make_shared<const FiniteLattice>(FiniteLattice::build(
          names, [&](int a, int b) { return ((up[static_cast<std::size_t>(a)] >> b) & 1u) != 0; }));
      doc.decls.push_back(Decl{name, kw.line, kw.col,
                               FiniteConvLattice::build(std::move(lattice), std::move(lam)), "", ""});
    } catch (const Error& e) {
      rethrow_at(e, kw.line, kw.col);
    }
  }

  void parse_map(Document& doc, const Token& kw) {
    const std::string name = expect_name("a map name");
    check_fresh(doc, name);
    expect_keyword("from");
    const std::string src_name = expect_name("a space name");
    expect_keyword("to");
    const std::string dst_name = expect_name("a space name");
    const Decl* src = doc.find(src_name);
    const Decl* dst = doc.find(dst_name);
    if (!src || !src->is_space()) throw UnknownName(src_name);
    if (!dst || !dst->is_space()) throw UnknownName(dst_name);
    const auto& sconv = std::get<FiniteConvergence>(src->value);
    const auto& dconv = std::get<FiniteConvergence>(dst->value);

    expect(Token::LBrace, "'{'");
    skip_seps();
    std::vector<int> table(static_cast<std::size_t>(sconv.size()), -1);
    while (peek().kind == Token::Ident) {
      const Token a = expect(Token::Ident, "a point name");
      expect(Token::Arrow, "'->'");
      const Token b = expect(Token::Ident, "a point name");
      const int x = point_index(sconv.carrier(), a);
      const int y = point_index(dconv.carrier(), b);
      if (table[static_cast<std::size_t>(x)] >= 0)
        throw ArityError("point " + a.text + " is mapped twice");
      table[static_cast<std::size_t>(x)] = y;
      if (peek().kind == Token::Comma) {
        next();
        continue;
      }
      skip_seps();
    }
    expect(Token::RBrace, "'}'");
    for (int x = 0; x < sconv.size(); ++x)
      if (table[static_cast<std::size_t>(x)] < 0)
        throw ArityError("point " + sconv.carrier().name(x) + " is not mapped");
    doc.decls.push_back(Decl{name, kw.line, kw.col,
                             SpaceMap(sconv.carrier_ptr(), dconv.carrier_ptr(), table),
                             src_name, dst_name});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

const Decl* Document::find(const std::string& name) const {
  for (const Decl& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

const Decl& Document::at(const std::string& name) const {
  const Decl* d = find(name);
  if (!d) throw UnknownName(name);
  return *d;
}

Document parse(const std::string& text) { return Parser(text).run(); }

std::string render_space(const std::string& name, const FiniteConvergence& conv) {
  std::ostringstream out;
  out << "space " << name << " {\n  points";
  for (int x = 0; x < conv.size(); ++x) out << ' ' << conv.carrier().name(x);
  out << ";\n";
  if (conv.finite_depth_hint()) {
    out << "  depth finite;\n";
    std::vector<std::string> arrows;
    for (int x = 0; x < conv.size(); ++x)
      for (int y = 0; y < conv.size(); ++y) {
        if (x == y || !conv.limit(singleton(x)).contains(y)) continue;
        const bool mutual = conv.limit(singleton(y)).contains(x);
        if (mutual && y < x) continue;  // rendered once as <->
        arrows.push_back(conv.carrier().name(x) + (mutual ? "<->" : "->") +
                         conv.carrier().name(y));
      }
    if (!arrows.empty()) {
      out << "  arrows ";
      for (std::size_t i = 0; i < arrows.size(); ++i)
        out << (i ? ", " : "") << arrows[i];
      out << ";\n";
    }
  } else {
    for (Mask m = 1; m < subset_count(conv.size()); ++m)
      out << "  lim " << conv.carrier().render(Subset(m)) << " -> "
          << conv.carrier().render(conv.limit(Subset(m))) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_topology(const std::string& name, const FiniteTopology& top) {
  std::ostringstream out;
  out << "topology " << name << " {\n  points";
  for (int x = 0; x < top.size(); ++x) out << ' ' << top.carrier().name(x);
  out << ";\n  opens";
  for (Subset o : top.opens()) out << ' ' << top.carrier().render(o);
  out << ";\n}\n";
  return out.str();
}

std::string render_lattice(const std::string& name, const FiniteConvLattice& cl) {
  const FiniteLattice& l = cl.lattice();
  std::ostringstream out;
  out << "lattice " << name << " {\n  elements";
  for (int e = 0; e < l.size(); ++e) out << ' ' << l.name(e);
  out << ";\n";
  std::vector<std::string> covers;
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (a == b || !l.leq(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < l.size() && covering; ++c)
        if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) covering = false;
      if (covering) covers.push_back(l.name(a) + "<" + l.name(b));
    }
  if (!covers.empty()) {
    out << "  leq ";
    for (std::size_t i = 0; i < covers.size(); ++i) out << (i ? ", " : "") << covers[i];
    out << ";\n";
  }
  out << "  lim ";
  for (int e = 0; e < l.size(); ++e)
    out << (e ? ", " : "") << l.name(e) << "->" << l.name(cl.lam()[static_cast<std::size_t>(e)]);
  out << ";\n}\n";
  return out.str();
}

std::string render_map(const std::string& name, const SpaceMap& map,
                       const std::string& source_name, const std::string& target_name) {
  std::ostringstream out;
  out << "map " << name << " from " << source_name << " to " << target_name << " {\n  ";
  for (int x = 0; x < map.source().size(); ++x)
    out << (x ? ", " : "") << map.source().name(x) << "->" << map.target().name(map(x));
  out << "\n}\n";
  return out.str();
}

std::string render(const Document& doc) {
  std::string out;
  for (const Decl& d : doc.decls) {
    if (d.is_space()) out += render_space(d.name, std::get<FiniteConvergence>(d.value));
    if (d.is_topology()) out += render_topology(d.name, std::get<FiniteTopology>(d.value));
    if (d.is_lattice()) out += render_lattice(d.name, std::get<FiniteConvLattice>(d.value));
    if (d.is_map())
      out += render_map(d.name, std::get<SpaceMap>(d.value), d.map_source, d.map_target);
  }
  return out;
}

std::string to_dot(const std::string& name, const FiniteConvergence& conv) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int x = 0; x < conv.size(); ++x)
    out << "  \"" << conv.carrier().name(x) << "\";\n";
  for (int x = 0; x < conv.size(); ++x)
    for (int y = 0; y < conv.size(); ++y)
      if (x != y && conv.limit(singleton(x)).contains(y))
        out << "  \"" << conv.carrier().name(x) << "\" -> \"" << conv.carrier().name(y)
            << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fincov::dsl

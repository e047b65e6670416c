#include "salg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace salg {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + message),
      pos_(pos),
      message_(message) {}

namespace {

const std::set<std::string, std::less<>> kKeywords{
    "superalgebra", "even", "odd", "rel", "end", "derivation", "point", "hcpair",
    "size", "equations", "module", "rho", "bracket", "sample"};

enum class Tok { Ident, Number, Symbol, Eof };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') {
        throw ParseError(start, "decimal notation is not accepted; write rationals as p/q");
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Symbol, "->", start});
      advance(2);
      continue;
    }
    if (std::string_view("+-*/^()[],;:=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), start});
      advance(1);
      continue;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::Eof, "", pos});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Eof:
      return "end of input";
    case Tok::Number:
      return "number " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool at_keyword(std::string_view k) const { return peek().kind == Tok::Ident && peek().text == k; }
  bool at_eof() const { return peek().kind == Tok::Eof; }
  bool accept_symbol(std::string_view s) {
    if (!at_symbol(s)) return false;
    next();
    return true;
  }
  bool accept_keyword(std::string_view k) {
    if (!at_keyword(k)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(peek().pos, "expected " + what + ", found " + describe(peek()));
  }
  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) fail("'" + std::string(s) + "'");
  }
  void expect_keyword(std::string_view k) {
    if (!accept_keyword(k)) fail("'" + std::string(k) + "'");
  }
  void expect_eof() {
    if (!at_eof()) fail("end of input");
  }
  Token expect_name(const std::string& what) {
    if (peek().kind != Tok::Ident || kKeywords.contains(peek().text)) fail(what);
    return next();
  }
  unsigned long expect_number(const std::string& what) {
    if (peek().kind != Tok::Number) fail(what);
    const Token t = next();
    if (t.text.size() > 9) throw ParseError(t.pos, "number too large here");
    return std::stoul(t.text);
  }

  Scalar scalar(Field field) {
    const bool negative = accept_symbol("-");
    if (peek().kind != Tok::Number) fail("a number");
    std::string text = next().text;
    if (accept_symbol("/")) {
      if (peek().kind != Tok::Number) fail("a denominator");
      const Token den = next();
      if (std::all_of(den.text.begin(), den.text.end(), [](char c) { return c == '0'; })) {
        throw ParseError(den.pos, "zero denominator");
      }
      text += "/" + den.text;
    }
    const Scalar s = Scalar::parse(text, field);
    return negative ? -s : s;
  }

  SuperPoly poly(const RingPtr& ring) {
    SuperPoly acc(ring);
    bool negate = false;
    if (at_symbol("-") || at_symbol("+")) negate = next().text == "-";
    SuperPoly t = term(ring);
    acc = negate ? -t : t;
    while (at_symbol("+") || at_symbol("-")) {
      const Token op = next();
      if (!starts_atom()) throw ParseError(op.pos, "dangling '" + op.text + "'");
      SuperPoly rhs = term(ring);
      if (op.text == "+") {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  PolyMatrix matrix(const RingPtr& ring) {
    PolyMatrix m;
    expect_symbol("[");
    do {
      expect_symbol("[");
      std::vector<SuperPoly> row;
      do {
        row.push_back(poly(ring));
      } while (accept_symbol(","));
      expect_symbol("]");
      m.push_back(std::move(row));
    } while (accept_symbol(","));
    expect_symbol("]");
    return m;
  }

  ScalarMatrix scalar_matrix(Field field, std::size_t n) {
    const SourcePos at = peek().pos;
    const RingPtr none = SuperRing::make({}, {}, field);
    const PolyMatrix m = matrix(none);
    ScalarMatrix out;
    for (const auto& row : m) {
      if (row.size() != n) throw ParseError(at, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
      std::vector<Scalar> r;
      for (const auto& e : row) r.push_back(e.constant_term());
      out.push_back(std::move(r));
    }
    if (out.size() != n) throw ParseError(at, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    return out;
  }

  PointIdeal point(Field field) {
    PointIdeal pt;
    do {
      const Token name = expect_name("a generator name");
      expect_symbol("=");
      if (!pt.coords.emplace(name.text, scalar(field)).second) {
        throw ParseError(name.pos, "coordinate " + name.text + " given twice");
      }
    } while (accept_symbol(","));
    return pt;
  }

  /// `name -> poly` pairs separated by ';'. Returns (name token, image).
  std::vector<std::pair<Token, SuperPoly>> images(const RingPtr& source, const RingPtr& target) {
    std::vector<std::pair<Token, SuperPoly>> out;
    do {
      if (at_eof() || at_keyword("end")) break;
      const Token name = expect_name("a generator name");
      if (!source->find(name.text)) throw ParseError(name.pos, "unknown generator '" + name.text + "'");
      for (const auto& [seen, img] : out) {
        if (seen.text == name.text) throw ParseError(name.pos, "image of " + name.text + " given twice");
      }
      expect_symbol("->");
      out.emplace_back(name, poly(target));
    } while (accept_symbol(";"));
    return out;
  }

 private:
  bool starts_atom() const {
    return peek().kind == Tok::Number || at_symbol("(") ||
           (peek().kind == Tok::Ident && !kKeywords.contains(peek().text));
  }

  SuperPoly term(const RingPtr& ring) {
    SuperPoly acc = factor(ring);
    while (at_symbol("*")) {
      const Token op = next();
      if (!starts_atom()) throw ParseError(op.pos, "dangling '*'");
      acc = acc * factor(ring);
    }
    return acc;
  }

  SuperPoly factor(const RingPtr& ring) {
    SuperPoly base = atom(ring);
    if (at_symbol("^")) {
      const Token op = next();
      if (peek().kind != Tok::Number) throw ParseError(op.pos, "dangling '^'");
      base = base.pow(static_cast<unsigned>(expect_number("an exponent")));
    }
    return base;
  }

  SuperPoly atom(const RingPtr& ring) {
    if (peek().kind == Tok::Number) {
      std::string text = next().text;
      if (at_symbol("/")) {
        const Token op = next();
        if (peek().kind != Tok::Number) throw ParseError(op.pos, "only integer literals can be divided");
        const Token den = next();
        if (std::all_of(den.text.begin(), den.text.end(), [](char c) { return c == '0'; })) {
          throw ParseError(den.pos, "zero denominator");
        }
        text += "/" + den.text;
      }
      return SuperPoly::constant(ring, Scalar::parse(text, ring->field()));
    }
    if (accept_symbol("(")) {
      SuperPoly inner = poly(ring);
      expect_symbol(")");
      return inner;
    }
    if (peek().kind != Tok::Ident || kKeywords.contains(peek().text)) fail("a number, generator or '('");
    const Token name = next();
    return resolve(name, ring);
  }

  /// A generator, or a run of odd generator names written without '*'.
  static SuperPoly resolve(const Token& name, const RingPtr& ring) {
    if (auto g = ring->find(name.text)) return SuperPoly::var(ring, *g);
    const std::string& s = name.text;
    // ways[i] = number of splits of s[i..] into odd names (capped at 2), next[i] = first piece
    std::vector<int> ways(s.size() + 1, 0);
    std::vector<std::size_t> piece(s.size() + 1, 0);
    ways[s.size()] = 1;
    for (std::size_t i = s.size(); i-- > 0;) {
      for (std::size_t j = 0; j < ring->num_odd(); ++j) {
        const std::string& n = ring->odd_names()[j];
        if (s.compare(i, n.size(), n) == 0 && ways[i + n.size()] > 0) {
          if (ways[i] == 0) piece[i] = j;
          ways[i] = std::min(2, ways[i] + ways[i + n.size()]);
        }
      }
    }
    if (ways[0] == 0) throw ParseError(name.pos, "unknown generator '" + s + "'");
    if (ways[0] > 1) throw ParseError(name.pos, "ambiguous product of odd generators '" + s + "'");
    SuperPoly out = SuperPoly::constant(ring, 1);
    for (std::size_t i = 0; i < s.size();) {
      const std::size_t j = piece[i];
      out = out * SuperPoly::odd_var(ring, j);
      i += ring->odd_names()[j].size();
    }
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::vector<std::string> name_list(Parser& p, std::map<std::string, SourcePos>& seen) {
  std::vector<std::string> names;
  while (p.peek().kind == Tok::Ident && !kKeywords.contains(p.peek().text)) {
    const Token t = p.next();
    if (!seen.emplace(t.text, t.pos).second) throw ParseError(t.pos, "generator " + t.text + " declared twice");
    names.push_back(t.text);
  }
  return names;
}

AlgebraDoc algebra_block(Parser& p, Field field, std::map<std::string, SourcePos>& spans) {
  p.expect_keyword("superalgebra");
  AlgebraDoc doc;
  doc.name = p.expect_name("an algebra name").text;
  std::map<std::string, SourcePos> seen;
  std::vector<std::string> even, odd;
  if (p.accept_keyword("even")) even = name_list(p, seen);
  if (p.accept_keyword("odd")) odd = name_list(p, seen);
  for (const auto& [name, pos] : seen) spans.emplace("generator " + name, pos);
  if (odd.size() > 63) throw ParseError(p.peek().pos, "at most 63 odd generators are supported");
  doc.ring = SuperRing::make(even, odd, field);
  if (p.accept_keyword("rel")) {
    do {
      spans.emplace("relation " + std::to_string(doc.relations.size() + 1), p.peek().pos);
      SuperPoly r = p.poly(doc.ring);
      if (!r.is_zero()) doc.relations.push_back(std::move(r));
    } while (p.accept_symbol(";"));
  }
  p.expect_keyword("end");
  return doc;
}

DerivationDecl derivation_block(Parser& p, const RingPtr& ring,
                                std::map<std::string, SourcePos>& spans) {
  p.expect_keyword("derivation");
  DerivationDecl d;
  d.name = p.expect_name("a derivation name").text;
  p.expect_symbol(":");
  for (auto& [tok, img] : p.images(ring, ring)) {
    const Generator g = *ring->find(tok.text);
    if (!img.has_parity(g.parity + Parity::Odd)) {
      throw ParseError(tok.pos, "parity violation: an odd derivation must send " + tok.text +
                                    " to an element of the opposite parity, got " + img.str());
    }
    spans.emplace("image " + tok.text, tok.pos);
    d.images.emplace_back(tok.text, std::move(img));
  }
  p.expect_keyword("end");
  return d;
}

HCPair pair_block(Parser& p, Field field, std::map<std::string, SourcePos>& spans) {
  p.expect_keyword("hcpair");
  const std::string name = p.expect_name("a pair name").text;
  p.expect_keyword("size");
  const SourcePos size_pos = p.peek().pos;
  const std::size_t n = p.expect_number("the matrix size");
  if (n == 0 || n > 9) throw ParseError(size_pos, "matrix size must be between 1 and 9");
  const RingPtr ring = EvenGroupSpec::coordinate_ring_for(n, field);

  std::vector<SuperPoly> equations;
  if (p.accept_keyword("equations")) {
    do {
      spans.emplace("equation " + std::to_string(equations.size() + 1), p.peek().pos);
      SuperPoly e = p.poly(ring);
      if (!e.is_zero()) equations.push_back(std::move(e));
    } while (p.accept_symbol(";"));
  }
  p.expect_keyword("module");
  const std::size_t t = p.expect_number("the module dimension");
  if (t > 16) throw ParseError(p.peek().pos, "module dimension above 16 is not supported");

  PolyMatrix rho = poly_identity(ring, t);
  std::vector<std::vector<ScalarMatrix>> bracket(t, std::vector<ScalarMatrix>(t, scalar_zero(n, n, field)));
  std::vector<ScalarMatrix> samples;
  std::set<std::pair<std::size_t, std::size_t>> given;
  for (;;) {
    const SourcePos at = p.peek().pos;
    if (p.accept_keyword("rho")) {
      spans.emplace("rho", at);
      rho = p.matrix(ring);
      if (rho.size() != t || std::any_of(rho.begin(), rho.end(), [&](const auto& r) { return r.size() != t; })) {
        throw ParseError(at, "rho must be a " + std::to_string(t) + "x" + std::to_string(t) + " matrix");
      }
    } else if (p.accept_keyword("bracket")) {
      const SourcePos ip = p.peek().pos;
      const std::size_t i = p.expect_number("a basis index");
      const std::size_t j = p.expect_number("a basis index");
      if (i == 0 || j == 0 || i > t || j > t) throw ParseError(ip, "basis index out of range");
      if (!given.insert({std::min(i, j), std::max(i, j)}).second) {
        throw ParseError(ip, "bracket " + std::to_string(i) + " " + std::to_string(j) + " given twice");
      }
      spans.emplace("bracket " + std::to_string(i) + " " + std::to_string(j), at);
      const ScalarMatrix m = p.scalar_matrix(field, n);
      bracket[i - 1][j - 1] = m;
      bracket[j - 1][i - 1] = m;
    } else if (p.accept_keyword("sample")) {
      spans.emplace("sample " + std::to_string(samples.size() + 1), at);
      samples.push_back(p.scalar_matrix(field, n));
    } else {
      break;
    }
  }
  p.expect_keyword("end");
  return HCPair{name, EvenGroupSpec(n, std::move(equations), std::move(samples), field), t,
                std::move(rho), std::move(bracket)};
}

std::string join_polys(const std::vector<SuperPoly>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += "; ";
    out += ps[i].str();
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += " " + n;
  return out;
}

}  // namespace

GeneratorImages DerivationDecl::generator_images(const RingPtr& ring) const {
  GeneratorImages out(ring->num_even() + ring->num_odd(), SuperPoly(ring));
  for (const auto& [name, img] : images) {
    const Generator g = *ring->find(name);
    out[g.parity == Parity::Even ? g.index : ring->num_even() + g.index] = img;
  }
  return out;
}

Manifest parse_manifest(std::string_view text, Field field) {
  Parser p(text);
  Manifest m;
  if (p.at_keyword("hcpair")) {
    m.doc = PairDoc{pair_block(p, field, m.spans)};
    p.expect_eof();
    return m;
  }
  if (!p.at_keyword("superalgebra")) p.fail("'superalgebra' or 'hcpair'");
  AlgebraDoc doc = algebra_block(p, field, m.spans);
  if (p.at_keyword("derivation")) doc.derivation = derivation_block(p, doc.ring, m.spans);
  while (p.at_keyword("point")) {
    const SourcePos at = p.peek().pos;
    p.next();
    PointIdeal pt = p.point(field);
    for (const auto& [name, value] : pt.coords) {
      const auto g = doc.ring->find(name);
      if (!g || g->parity != Parity::Even) {
        throw ParseError(at, "point coordinate " + name + " is not an even generator");
      }
    }
    m.spans.emplace("point " + std::to_string(doc.points.size() + 1), at);
    doc.points.push_back(std::move(pt));
  }
  p.expect_eof();
  m.doc = std::move(doc);
  return m;
}

AlgebraDoc parse_algebra(std::string_view text, Field field) {
  Manifest m = parse_manifest(text, field);
  if (auto* a = std::get_if<AlgebraDoc>(&m.doc)) return std::move(*a);
  throw ParseError({1, 1}, "expected a superalgebra document, found an hcpair");
}

HCPair parse_pair(std::string_view text, Field field) {
  Manifest m = parse_manifest(text, field);
  if (auto* p = std::get_if<PairDoc>(&m.doc)) return std::move(p->pair);
  throw ParseError({1, 1}, "expected an hcpair document, found a superalgebra");
}

std::string render_manifest(const Manifest& m) {
  std::string out;
  if (const auto* a = std::get_if<AlgebraDoc>(&m.doc)) {
    out += "superalgebra " + a->name + "\n";
    if (a->ring->num_even()) out += "  even" + join_names(a->ring->even_names()) + "\n";
    if (a->ring->num_odd()) out += "  odd" + join_names(a->ring->odd_names()) + "\n";
    if (!a->relations.empty()) out += "  rel " + join_polys(a->relations) + "\n";
    out += "end\n";
    if (a->derivation) {
      out += "derivation " + a->derivation->name + ":";
      for (std::size_t i = 0; i < a->derivation->images.size(); ++i) {
        const auto& [name, img] = a->derivation->images[i];
        out += (i ? "; " : " ") + name + " -> " + img.str();
      }
      out += " end\n";
    }
    for (const auto& pt : a->points) {
      out += "point";
      bool first = true;
      for (const auto& [name, value] : pt.coords) {
        out += (first ? " " : ", ") + name + " = " + value.str();
        first = false;
      }
      out += "\n";
    }
    return out;
  }
  const HCPair& p = std::get<PairDoc>(m.doc).pair;
  out += "hcpair " + p.name + " size " + std::to_string(p.group.size()) + "\n";
  if (!p.group.equations().empty()) out += "  equations " + join_polys(p.group.equations()) + "\n";
  out += "  module " + std::to_string(p.dim) + "\n";
  if (p.dim) out += "  rho " + render(p.rho) + "\n";
  for (std::size_t i = 0; i < p.dim; ++i) {
    for (std::size_t j = i; j < p.dim; ++j) {
      if (is_zero(p.bracket[i][j])) continue;
      out += "  bracket " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
             render(p.bracket[i][j]) + "\n";
    }
  }
  for (const auto& s : p.group.samples()) out += "  sample " + render(s) + "\n";
  return out + "end\n";
}

SuperPoly parse_poly(std::string_view text, const RingPtr& ring) {
  Parser p(text);
  SuperPoly f = p.poly(ring);
  p.expect_eof();
  return f;
}

std::vector<SuperPoly> parse_poly_list(std::string_view text, const RingPtr& ring) {
  Parser p(text);
  std::vector<SuperPoly> out;
  if (p.at_eof()) return out;
  do {
    out.push_back(p.poly(ring));
  } while (p.accept_symbol(","));
  p.expect_eof();
  return out;
}

GeneratorImages parse_images(std::string_view text, const RingPtr& source, const RingPtr& target) {
  Parser p(text);
  if (p.peek().kind == Tok::Ident && p.peek(1).kind == Tok::Symbol && p.peek(1).text == ":") {
    p.next();
    p.next();
  }
  GeneratorImages out(source->num_even() + source->num_odd(), SuperPoly(target));
  for (auto& [tok, img] : p.images(source, target)) {
    const Generator g = *source->find(tok.text);
    out[g.parity == Parity::Even ? g.index : source->num_even() + g.index] = std::move(img);
  }
  p.expect_eof();
  return out;
}

PointIdeal parse_point(std::string_view text, Field field) {
  Parser p(text);
  PointIdeal pt = p.point(field);
  p.expect_eof();
  return pt;
}

HCElement parse_hc_element(std::string_view text, const HCGroup& group) {
  Parser p(text);
  const RingPtr& ring = group.coefficients().ring();
  const std::size_t n = group.pair().group.size();
  std::optional<PolyMatrix> g;
  std::vector<SuperPoly> odd(group.pair().dim, SuperPoly(ring));
  while (!p.at_eof()) {
    const Token key = p.expect_name("'g' or 'e'");
    p.expect_symbol("=");
    const SourcePos at = p.peek().pos;
    if (key.text == "g") {
      g = p.matrix(ring);
      if (g->size() != n || std::any_of(g->begin(), g->end(), [&](const auto& r) { return r.size() != n; })) {
        throw ParseError(at, "g must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
      }
    } else if (key.text == "e") {
      p.expect_symbol("[");
      std::vector<SuperPoly> given;
      if (!p.at_symbol("]")) {
        do {
          given.push_back(p.poly(ring));
        } while (p.accept_symbol(","));
      }
      p.expect_symbol("]");
      if (given.size() != odd.size()) {
        throw ParseError(at, "expected " + std::to_string(odd.size()) + " odd coefficients");
      }
      odd = std::move(given);
    } else {
      throw ParseError(key.pos, "unknown element part '" + key.text + "'");
    }
    if (!p.accept_symbol(";")) break;
  }
  p.expect_eof();
  return group.make(g ? *g : poly_identity(ring, n), odd);
}

}  // namespace salg

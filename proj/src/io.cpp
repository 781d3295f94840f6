#include "abtor/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace abtor {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  auto k = line.find('#');
  return trim(k == std::string::npos ? line : line.substr(0, k));
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    fail(Errc::Parse, "expected an integer for " + what + ", got '" + s + "'");
  }
  if (pos != s.size()) fail(Errc::Parse, "expected an integer for " + what + ", got '" + s + "'");
  return v;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  fail(Errc::Parse, "unknown generator '" + name + "'");
}

// ---------------------------------------------------------------------------
// Expressions.

struct Token {
  enum Kind { Int, Ident, Op, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i)});
      i = j;
    } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, static_cast<char>(c))});
      ++i;
    } else {
      fail(Errc::Parse, std::string("unexpected character '") + static_cast<char>(c) + "' in expression");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

constexpr long kMaxExponent = 100000;

// Recursive descent over any ring R. `leaf` maps integers and identifiers,
// `divide` and `power` supply the partial operations.
template <class R>
class ExprParser {
public:
  std::function<R(const BigInt&)> integer;
  std::function<R(const std::string&)> variable;
  std::function<R(const R&, const R&)> divide;
  std::function<R(const R&, long)> power;

  R parse(const std::string& text) {
    toks_ = tokenize(text);
    pos_ = 0;
    if (toks_.front().kind == Token::End) fail(Errc::Parse, "empty expression");
    R r = sum();
    if (peek().kind != Token::End) fail(Errc::Parse, "unexpected '" + peek().text + "' in expression");
    return r;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(const std::string& op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  R sum() {
    R r = product();
    while (true) {
      if (accept("+")) {
        r = r + product();
      } else if (accept("-")) {
        r = r - product();
      } else {
        return r;
      }
    }
  }

  R product() {
    R r = unary();
    while (true) {
      if (accept("*")) {
        r = r * unary();
      } else if (accept("/")) {
        r = divide(r, unary());
      } else {
        return r;
      }
    }
  }

  R unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return powered();
  }

  long exponent() {
    bool paren = accept("(");
    bool neg = false;
    if (accept("-")) {
      neg = true;
    } else {
      accept("+");
    }
    if (peek().kind != Token::Int) fail(Errc::Parse, "expected an integer exponent");
    const std::string digits = toks_[pos_++].text;
    if (digits.size() > 6 || std::stol(digits) > kMaxExponent) fail(Errc::TooLarge, "exponent " + digits + " is too large");
    if (paren && !accept(")")) fail(Errc::Parse, "missing ')' after exponent");
    long k = std::stol(digits);
    return neg ? -k : k;
  }

  R powered() {
    R base = atom();
    if (accept("^")) return power(base, exponent());
    return base;
  }

  R atom() {
    const Token t = peek();
    if (t.kind == Token::Int) {
      ++pos_;
      return integer(BigInt(t.text));
    }
    if (t.kind == Token::Ident) {
      ++pos_;
      return variable(t.text);
    }
    if (accept("(")) {
      R r = sum();
      if (!accept(")")) fail(Errc::Parse, "missing ')'");
      return r;
    }
    fail(Errc::Parse, t.kind == Token::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <class R>
R field_power(const R& x, long k, const R& one) {
  R base = k < 0 ? one / x : x;
  R r = one;
  for (long n = k < 0 ? -k : k; n > 0; n >>= 1) {
    if (n & 1) r = r * base;
    if (n > 1) base = base * base;
  }
  return r;
}

// Variable index for `t`, `tK` or `sK` in a ring with `vars` variables.
std::optional<std::size_t> laurent_index(const std::string& name, std::size_t vars) {
  if (vars == 0) return std::nullopt;
  if (name == "t") return vars - 1;
  if (name.size() >= 2 && (name[0] == 't' || name[0] == 's') && name[1] != '0' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos && name.size() <= 6) {
    std::size_t k = std::stoul(name.substr(1));
    std::size_t limit = name[0] == 't' ? vars : vars - 1;
    if (k >= 1 && k <= limit) return k - 1;
  }
  return std::nullopt;
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  auto toks = split_ws(text);
  if (toks.size() == 1 && toks[0] == "1") return Word(n);
  std::vector<int> letters;
  for (const auto& tok : toks) {
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long k = caret == std::string::npos ? 1 : parse_long(tok.substr(caret + 1), "the power of " + name);
    if (k > kMaxExponent || k < -kMaxExponent) fail(Errc::TooLarge, "word exponent is too large");
    int g = static_cast<int>(index_of(names, name)) + 1;
    for (long j = 0; j < (k < 0 ? -k : k); ++j) letters.push_back(k < 0 ? -g : g);
  }
  return Word(n, letters);
}

GroupRingElem parse_group_ring(const std::string& text, const std::vector<std::string>& names) {
  // Terms are separated by + and - surrounded by spaces or at the start;
  // each term is [integer*]word.
  GroupRingElem out(names.size());
  std::string s = trim(text);
  if (s.empty()) fail(Errc::Parse, "empty group ring element");
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  std::string cur;
  auto flush = [&] {
    if (trim(cur).empty()) fail(Errc::Parse, "empty term in '" + text + "'");
    terms.emplace_back(sign, trim(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool at_start = trim(cur).empty() && terms.empty();
    bool separated = i > 0 && s[i - 1] == ' ' && i + 1 < s.size() && s[i + 1] == ' ';
    if ((c == '+' || c == '-') && (separated || (at_start && i == 0))) {
      if (!(at_start && i == 0)) flush();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  flush();
  for (const auto& [sg, term] : terms) {
    BigInt coeff = sg;
    std::string word = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff *= BigInt(parse_long(trim(term.substr(0, star)), "a coefficient"));
      word = trim(term.substr(star + 1));
    } else if (std::isdigit(static_cast<unsigned char>(term[0])) && term != "1") {
      coeff *= BigInt(parse_long(term, "a coefficient"));
      word = "1";
    }
    out.add(parse_word(word, names), coeff);
  }
  return out;
}

std::vector<std::string> laurent_names(std::size_t vars, bool fibered) {
  if (vars == 1) return {"t"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= vars; ++i)
    names.push_back(fibered ? (i == vars ? "t" : "s" + std::to_string(i)) : "t" + std::to_string(i));
  return names;
}

MultiLaurent parse_laurent(const std::string& text, std::size_t vars) {
  bool indexed_t = false, indexed_s = false;
  ExprParser<MultiLaurent> p;
  p.integer = [&](const BigInt& n) { return MultiLaurent::constant(vars, n); };
  p.variable = [&](const std::string& name) {
    auto k = laurent_index(name, vars);
    if (!k) fail(Errc::Parse, "unknown variable '" + name + "' for " + std::to_string(vars) + " variable(s)");
    (name[0] == 's' ? indexed_s : indexed_t) |= name.size() > 1;
    if (name == "t" && vars > 1) indexed_s = true;
    if (indexed_s && indexed_t) fail(Errc::Parse, "variables t1.. and s1.., t cannot be mixed");
    return MultiLaurent::variable(vars, *k);
  };
  p.divide = [](const MultiLaurent& a, const MultiLaurent& b) {
    auto q = divide_exact(a, b);
    if (!q) fail(Errc::NotDivisible, "division is not exact in the Laurent ring");
    return *q;
  };
  p.power = [](const MultiLaurent& a, long k) {
    if (k < 0 && !a.is_unit()) fail(Errc::NotDivisible, "negative power of a non-monomial");
    return a.pow(static_cast<int>(k));
  };
  return p.parse(text);
}

MultiLaurent parse_laurent(const std::string& text) {
  std::size_t max_t = 0, max_s = 0;
  bool plain_t = false;
  for (const auto& tok : tokenize(text)) {
    if (tok.kind != Token::Ident) continue;
    const std::string& s = tok.text;
    if (s == "t") {
      plain_t = true;
      continue;
    }
    bool numbered = s.size() >= 2 && s.size() <= 6 && (s[0] == 't' || s[0] == 's') &&
                    s.find_first_not_of("0123456789", 1) == std::string::npos;
    if (!numbered) fail(Errc::Parse, "unknown variable '" + s + "'");
    std::size_t k = std::stoul(s.substr(1));
    (s[0] == 't' ? max_t : max_s) = std::max(s[0] == 't' ? max_t : max_s, k);
  }
  std::size_t vars = 1;
  if (max_s > 0) vars = max_s + 1;
  else if (max_t > 0 && !plain_t) vars = max_t;
  else if (max_t > 0) fail(Errc::Parse, "variables t and t1.. cannot be mixed");
  return parse_laurent(text, vars);
}

Rational parse_rational_expr(const std::string& text) {
  ExprParser<Rational> p;
  p.integer = [](const BigInt& n) { return Rational(n); };
  p.variable = [](const std::string& name) -> Rational { fail(Errc::Parse, "unexpected symbol '" + name + "' over Q"); };
  p.divide = [](const Rational& a, const Rational& b) { return a / b; };
  p.power = [](const Rational& a, long k) { return field_power(a, k, Rational(1)); };
  return p.parse(text);
}

RationalFunction parse_rational_function(const std::string& text) {
  ExprParser<RationalFunction> p;
  p.integer = [](const BigInt& n) { return RationalFunction(Rational(n)); };
  p.variable = [](const std::string& name) {
    if (name != "t") fail(Errc::Parse, "unexpected symbol '" + name + "' over Q(t)");
    return RationalFunction::t();
  };
  p.divide = [](const RationalFunction& a, const RationalFunction& b) { return a / b; };
  p.power = [](const RationalFunction& a, long k) { return field_power(a, k, RationalFunction(Rational(1))); };
  return p.parse(text);
}

CyclotomicElem parse_cyclotomic(const std::string& text, const CyclotomicField& field) {
  ExprParser<CyclotomicElem> p;
  p.integer = [&](const BigInt& n) { return field.from_rational(Rational(n)); };
  p.variable = [&](const std::string& name) {
    if (name != "z") fail(Errc::Parse, "unexpected symbol '" + name + "' over Q(zeta)");
    return field.zeta_pow(1);
  };
  p.divide = [](const CyclotomicElem& a, const CyclotomicElem& b) { return a / b; };
  p.power = [&](const CyclotomicElem& a, long k) { return field_power(a, k, field.one()); };
  return p.parse(text);
}

Presentation parse_presentation(std::istream& in) {
  std::optional<std::vector<std::string>> gens;
  std::vector<Word> rels;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    auto where = " (line " + std::to_string(lineno) + ")";
    if (s.rfind("gens:", 0) == 0) {
      if (gens) fail(Errc::Parse, "generators declared twice" + where);
      gens = split_ws(s.substr(5));
    } else if (s.rfind("rel:", 0) == 0) {
      if (!gens) fail(Errc::Parse, "relator before the generator declaration" + where);
      try {
        rels.push_back(parse_word(s.substr(4), *gens));
      } catch (const Error& e) {
        fail(e.code(), e.what() + where);
      }
    } else {
      fail(Errc::Parse, "expected 'gens:' or 'rel:'" + where);
    }
  }
  if (!gens) fail(Errc::Parse, "missing 'gens:' line");
  return Presentation(*gens, rels);
}

std::string FieldSpec::str() const {
  switch (kind) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::RationalFunction:
      return "Q(t)";
    case FieldKind::Cyclotomic:
      return "Q(zeta " + std::to_string(conductor) + ")";
  }
  return "";
}

FieldSpec parse_field_spec(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q") return {FieldKind::Rational, 0};
  if (s == "Q(t)") return {FieldKind::RationalFunction, 0};
  if (s.rfind("Q(zeta", 0) == 0 && s.back() == ')') {
    long n = parse_long(s.substr(6, s.size() - 7), "the conductor");
    if (n < 1 || n > 1000) fail(Errc::Parse, "conductor must lie in 1..1000");
    return {FieldKind::Cyclotomic, static_cast<int>(n)};
  }
  fail(Errc::Parse, "unknown field '" + raw + "' (expected Q, Q(t) or Q(zeta n))");
}

ChainComplexText parse_chain_complex_text(std::istream& in) {
  ChainComplexText out;
  bool have_field = false, have_dims = false;
  std::vector<std::vector<std::string>>* block = nullptr;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    auto where = " (line " + std::to_string(lineno) + ")";
    auto colon = s.find(':');
    std::string head = colon == std::string::npos ? "" : trim(s.substr(0, colon));
    std::string rest = colon == std::string::npos ? "" : trim(s.substr(colon + 1));
    auto words = split_ws(head);
    if (head == "field") {
      out.field = parse_field_spec(rest);
      have_field = true;
      block = nullptr;
    } else if (head == "dims") {
      auto toks = split_ws(rest);
      if (toks.empty()) fail(Errc::Parse, "empty dims" + where);
      out.dims.clear();
      for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
        long d = parse_long(*it, "a dimension");
        if (d < 0 || d > 1000) fail(Errc::Parse, "dimension out of range" + where);
        out.dims.push_back(static_cast<std::size_t>(d));
      }
      have_dims = true;
      block = nullptr;
    } else if (words.size() == 2 && (words[0] == "boundary" || words[0] == "homology")) {
      if (!have_dims) fail(Errc::Parse, "dims must precede " + words[0] + " blocks" + where);
      long i = parse_long(words[1], "a degree");
      const std::size_t m = out.dims.size() - 1;
      bool is_boundary = words[0] == "boundary";
      if (i < (is_boundary ? 1 : 0) || i > static_cast<long>(m)) fail(Errc::Parse, words[0] + " degree out of range" + where);
      auto& target = is_boundary ? out.boundaries : out.homology;
      if (target.count(static_cast<std::size_t>(i))) fail(Errc::Parse, words[0] + " " + words[1] + " given twice" + where);
      block = &target[static_cast<std::size_t>(i)];
      if (!rest.empty()) block->push_back(split_ws(rest));
    } else if (block && colon == std::string::npos) {
      block->push_back(split_ws(s));
    } else {
      fail(Errc::Parse, "unexpected line '" + s + "'" + where);
    }
  }
  if (!have_field) fail(Errc::Parse, "missing 'field:' line");
  if (!have_dims) fail(Errc::Parse, "missing 'dims:' line");
  for (const auto& [i, rows] : out.homology)
    for (const auto& row : rows)
      if (row.size() != out.dims[i]) fail(Errc::Parse, "homology " + std::to_string(i) + " vectors need " + std::to_string(out.dims[i]) + " entries");
  return out;
}

SurfaceAutomorphism parse_automorphism(std::istream& in) {
  std::optional<std::size_t> genus;
  std::vector<std::string> names;
  std::vector<std::optional<Word>> images;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    auto where = " (line " + std::to_string(lineno) + ")";
    auto colon = s.find(':');
    if (colon == std::string::npos) fail(Errc::Parse, "expected 'key: value'" + where);
    auto head = split_ws(s.substr(0, colon));
    std::string rest = trim(s.substr(colon + 1));
    if (head.size() == 1 && head[0] == "genus") {
      if (genus) fail(Errc::Parse, "genus given twice" + where);
      long g = parse_long(rest, "the genus");
      if (g < 1 || g > 50) fail(Errc::Parse, "genus must lie in 1..50" + where);
      genus = static_cast<std::size_t>(g);
      names = SurfaceAutomorphism::generator_names(*genus);
      images.assign(names.size(), std::nullopt);
    } else if (head.size() == 2 && head[0] == "image") {
      if (!genus) fail(Errc::Parse, "genus must precede images" + where);
      std::size_t i = index_of(names, head[1]);
      if (images[i]) fail(Errc::Parse, "image of " + head[1] + " given twice" + where);
      try {
        images[i] = parse_word(rest, names);
      } catch (const Error& e) {
        fail(e.code(), e.what() + where);
      }
    } else {
      fail(Errc::Parse, "expected 'genus:' or 'image <gen>:'" + where);
    }
  }
  if (!genus) fail(Errc::Parse, "missing 'genus:' line");
  std::vector<Word> ws;
  for (std::size_t i = 0; i < images.size(); ++i)
    ws.push_back(images[i] ? *images[i] : Word::generator(names.size(), i));
  return SurfaceAutomorphism(*genus, ws);
}

}  // namespace abtor

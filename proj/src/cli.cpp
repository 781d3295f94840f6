#include "abtor/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abtor/chain_complex.hpp"
#include "abtor/io.hpp"
#include "abtor/lens.hpp"
#include "abtor/mapping_torus.hpp"
#include "abtor/norms.hpp"
#include "abtor/presentation.hpp"

namespace abtor::cli {

namespace {

constexpr const char* kUnitNote = "# defined up to ± monomial";

int internal_error_code() { return 4; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

// Reads a file argument, with `-` meaning the given stream.
std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream os;
  if (path == "-") {
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) fail(Errc::Parse, "cannot open '" + path + "'");
  os << f.rdbuf();
  return os.str();
}

void print_polynomial(std::ostream& out, const std::string& key, const MultiLaurent& f,
                      const std::vector<std::string>& names) {
  out << key << " = " << f.str(names) << "\n";
  out << "# variables: " << (names.empty() ? "none" : join(names)) << "\n";
}

std::vector<long> parse_direction(const std::string& text) {
  std::vector<long> s;
  std::istringstream is(text);
  for (std::string tok; is >> tok;) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || pos == 0) fail(Errc::Parse, "direction entries must be integers, got '" + tok + "'");
    s.push_back(v);
  }
  return s;
}

template <class Field>
void report_torsion(const ChainComplexText& text, const Field& field,
                    const std::function<typename Field::value_type(const std::string&)>& entry,
                    const std::function<std::string(const typename Field::value_type&)>& render, std::ostream& out) {
  auto c = build_complex<Field>(text, field, entry);
  auto h = build_homology<Field>(text, entry);
  if (h) {
    out << "torsion = " << render(torsion_with_homology(c, *h)) << "\n";
    out << "# sign-refined, N(C) = " << homology_sign_exponent(c) << "\n";
    return;
  }
  if (!c.is_acyclic()) {
    out << "torsion = 0 (complex not acyclic)\n";
    fail(Errc::NotAcyclic, "the complex has nonzero homology");
  }
  out << "torsion = " << render(torsion_acyclic(c)) << "\n";
}

struct Options {
  // fox
  std::string gens, word;
  std::vector<std::string> wrt;
  // files
  std::string file;
  long ideal = 1;
  bool ideal_given = false;
  std::string field;
  // lens
  int p = 0, q = 0, p2 = 0, q2 = 0;
  int bound = 2;
  // norm
  std::string poly, dir;
};

void cmd_fox(const Options& o, std::ostream& out) {
  std::istringstream is(o.gens);
  std::vector<std::string> names;
  for (std::string s; is >> s;) names.push_back(s);
  if (names.empty()) fail(Errc::Parse, "--gens lists no generators");
  auto a = parse_group_ring(o.word, names);
  std::vector<std::size_t> idx;
  for (const auto& w : o.wrt) {
    auto it = std::find(names.begin(), names.end(), w);
    if (it == names.end()) fail(Errc::Parse, "--wrt names unknown generator '" + w + "'");
    idx.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  out << higher_fox_derivative(a, idx).str(names) << "\n";
}

void cmd_alexander(const Options& o, std::istream& in, std::ostream& out) {
  std::istringstream text(slurp(o.file, in));
  auto p = parse_presentation(text);
  if (o.ideal < 0) fail(Errc::InvalidArgument, "--ideal must be nonnegative");
  auto a = alexander_matrix(p);
  auto d = order_delta(a, static_cast<std::size_t>(o.ideal));
  std::string key = o.ideal_given && o.ideal != 1 ? "Delta_" + std::to_string(o.ideal) : "Delta";
  print_polynomial(out, key, d.rep(), a.vars == 0 ? std::vector<std::string>{} : laurent_names(a.vars));
  out << kUnitNote << "\n";
  auto ab = abelianize(p);
  out << "# b1 = " << ab.betti;
  if (!ab.torsion.empty()) {
    out << ", torsion:";
    for (const auto& t : ab.torsion) out << " " << to_string(t);
  }
  out << "\n";
}

void cmd_chain_torsion(const Options& o, std::istream& in, std::ostream& out) {
  std::istringstream is(slurp(o.file, in));
  auto text = parse_chain_complex_text(is);
  if (!o.field.empty()) text.field = parse_field_spec(o.field);
  out << "# field: " << text.field.str() << "\n";
  switch (text.field.kind) {
    case FieldKind::Rational:
      report_torsion<RationalField>(
          text, RationalField{}, parse_rational_expr, [](const Rational& x) { return x.str(); }, out);
      break;
    case FieldKind::RationalFunction:
      report_torsion<RationalFunctionField>(
          text, RationalFunctionField{}, parse_rational_function, [](const RationalFunction& x) { return x.str(); },
          out);
      break;
    case FieldKind::Cyclotomic: {
      CyclotomicField k(text.field.conductor);
      report_torsion<CyclotomicField>(
          text, k, [&](const std::string& s) { return parse_cyclotomic(s, k); },
          [](const CyclotomicElem& x) { return x.str("z"); }, out);
      break;
    }
  }
}

void cmd_lens_invariants(const Options& o, std::ostream& out) {
  LensSpace l(o.p, o.q);
  out << l.str() << ", r = " << l.r() << "\n";
  for (int j = 1; j < l.p(); ++j) out << "torsion[j=" << j << "] = " << lens_torsion(l, j).canonical.str("z") << "\n";
  out << "maximal torsion = " << maximal_torsion(l).canonical.str("T") << "\n";
  auto [a, b] = linking_self(l);
  out << "lambda(T,T) = ±" << std::min(a, b).str() << " mod 1\n";
  out << kUnitNote << "\n";
}

void cmd_lens_classify(const Options& o, std::ostream& out) {
  LensSpace a(o.p, o.q), b(o.p2, o.q2);
  out << "homeomorphic (orientation-preserving): " << yes_no(homeomorphic(a, b)) << "\n";
  out << "homotopy equivalent: " << yes_no(homotopy_equivalent(a, b)) << "\n";
}

void cmd_lens_franz(const Options& o, std::ostream& out) {
  bool zero = franz_zero_check(o.p, o.bound);
  out << "franz zero check (p = " << o.p << ", B = " << o.bound
      << "): " << (zero ? "only the zero map" : "nonzero solution found") << "\n";
}

void cmd_mapping_torus(const Options& o, std::istream& in, std::ostream& out) {
  std::istringstream is(slurp(o.file, in));
  auto f = parse_automorphism(is);
  auto v = validate(f);
  out << "homology trivial: " << yes_no(v.homology_trivial) << "\n";
  out << "boundary fixed: " << yes_no(v.boundary_fixed) << "\n";
  auto delta = mapping_torus_torsion(f);
  print_polynomial(out, "Delta", delta, laurent_names(delta.var_count(), true));
  out << kUnitNote << "\n";
  out << "fiber norm = " << fiber_norm(f) << "\n";
}

// s-names, or a bare t with more than one variable, select s1..s{n-1} t.
bool fibered_style(const std::string& poly, std::size_t vars) {
  if (poly.find('s') != std::string::npos) return true;
  if (vars < 2) return false;
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly[i] == 't' && (i + 1 == poly.size() || !std::isdigit(static_cast<unsigned char>(poly[i + 1])))) return true;
  return false;
}

void cmd_norm(const Options& o, std::ostream& out) {
  auto s = parse_direction(o.dir);
  auto f = parse_laurent(o.poly, s.size());
  bool fibered = fibered_style(o.poly, s.size());
  auto names = s.empty() ? std::vector<std::string>{} : laurent_names(s.size(), fibered);
  out << "f = " << f.str(names) << "\n";
  long n = alexander_norm(f, s);
  out << "norm = " << n << "\n";
  if (s.size() == 1) out << "norm - 2|s| = " << n - 2 * std::labs(s[0]) << "\n";
}

}  // namespace

int exit_code(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::InvalidArgument:
    case Errc::ArityMismatch:
    case Errc::BadHomologyBasis:
    case Errc::DivisionByZero:
      return 1;
    case Errc::NotAcyclic:
    case Errc::NotDivisible:
    case Errc::RankObstruction:
    case Errc::Unsupported:
    case Errc::NotHomologyTrivial:
    case Errc::ZeroPolynomial:
      return 2;
    case Errc::TooLarge:
      return 3;
  }
  return internal_error_code();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian torsion invariants of groups, complexes and 3-manifolds", "abtor"};
  app.require_subcommand(1);
  Options o;

  auto* fox = app.add_subcommand("fox", "Fox derivative of a group ring element");
  fox->add_option("--gens", o.gens, "generator names, space-separated")->required();
  fox->add_option("--word", o.word, "word or integer combination of words")->required();
  fox->add_option("--wrt", o.wrt, "generator to differentiate by; repeat for higher derivatives")->required();

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a presentation file");
  alex->add_option("file", o.file, "presentation file or -")->required();
  auto* ideal = alex->add_option("--ideal", o.ideal, "order of the k-th elementary ideal instead of Delta_1");

  auto* chain = app.add_subcommand("chain-torsion", "torsion of a based chain complex file");
  chain->add_option("file", o.file, "chain complex file or -")->required();
  chain->add_option("--field", o.field, "override the field: Q, Q(t) or Q(zeta n)");

  auto* lens = app.add_subcommand("lens", "lens space invariants");
  lens->require_subcommand(1);
  auto* inv = lens->add_subcommand("invariants", "torsion, maximal torsion and linking of L(p,q)");
  inv->add_option("p", o.p)->required();
  inv->add_option("q", o.q)->required();
  auto* classify = lens->add_subcommand("classify", "compare L(p,q) and L(p',q')");
  classify->add_option("p", o.p)->required();
  classify->add_option("q", o.q)->required();
  classify->add_option("p2", o.p2)->required();
  classify->add_option("q2", o.q2)->required();
  auto* franz = lens->add_subcommand("franz", "bounded search for maps in Franz's lemma");
  franz->add_option("p", o.p)->required();
  franz->add_option("--bound", o.bound, "box bound B");

  auto* torus = app.add_subcommand("mapping-torus", "torsion of the mapping torus of a surface automorphism file");
  torus->add_option("file", o.file, "automorphism file or -")->required();

  auto* norm = app.add_subcommand("norm", "Alexander norm of a Laurent polynomial");
  norm->add_option("--poly", o.poly, "polynomial in t, t1..tn or s1..s{n-1}, t")->required();
  norm->add_option("--dir", o.dir, "integer direction, one entry per variable")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  o.ideal_given = ideal->count() > 0;

  try {
    if (*fox) cmd_fox(o, out);
    else if (*alex) cmd_alexander(o, in, out);
    else if (*chain) cmd_chain_torsion(o, in, out);
    else if (*inv) cmd_lens_invariants(o, out);
    else if (*classify) cmd_lens_classify(o, out);
    else if (*franz) cmd_lens_franz(o, out);
    else if (*torus) cmd_mapping_torus(o, in, out);
    else if (*norm) cmd_norm(o, out);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error_code();
  }
  return 0;
}

}  // namespace abtor::cli

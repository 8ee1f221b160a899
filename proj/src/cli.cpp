#include "octic/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "octic/interpolation.hpp"
#include "octic/passage.hpp"
#include "octic/primes.hpp"
#include "octic/reduction.hpp"

namespace octic::cli {

using Json = nlohmann::ordered_json;

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  std::array<Rational, 9> parse() {
    std::array<Rational, 9> out{};
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      const auto [coefficient, exponent] = term();
      out[static_cast<std::size_t>(exponent)] += coefficient * Rational(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  // term := number ['*'] ['x' ['^' digits]] | 'x' ['^' digits]
  std::pair<Rational, int> term() {
    Rational coefficient(1);
    bool has_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den = 1;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        den = digits();
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      coefficient = Rational(num, den);
      has_number = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'x') throw ParseError(pos_, "expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!has_number) throw ParseError(pos_, "expected a number or 'x'");
      return {coefficient, 0};
    }
    ++pos_;
    skip_space();
    int exponent = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      const Integer e = digits();
      if (e > 8) throw Error(ErrorCode::WrongDegree, "degree exceeds 8 at position " + std::to_string(at));
      exponent = static_cast<int>(e.get_si());
    }
    return {coefficient, exponent};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

int affine_degree(const std::array<Rational, 9>& c) {
  for (int k = 8; k >= 0; --k) {
    if (!c[static_cast<std::size_t>(k)].is_zero()) return k;
  }
  return -1;
}

struct Options {
  std::string curve, coeffs, roots, prime, target = "I4", shioda, tsuyumine;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  bool from_roots = false, factored = false, strict_octic = false;
};

class Emitter {
 public:
  explicit Emitter(bool factored) : factored_(factored) {}

  Json value(const Rational& x) const {
    if (!factored_) return x.to_string();
    const FactoredInteger num = factor_for_display(x.numerator());
    const FactoredInteger den = factor_for_display(x.denominator());
    Json j;
    j["value"] = x.to_string();
    j["factored"] = factored_rational_string(x);
    j["certified"] = num.fully_certified() && den.fully_certified();
    return j;
  }

  template <class Tag>
  Json vector(const GradedVector<Tag>& v) const {
    Json j = Json::object();
    for (int k = 2; k <= 10; ++k) j[std::string(Tag::kPrefix) + std::to_string(k)] = value(v.at(k));
    return j;
  }

 private:
  bool factored_;
};

CurveInput read_curve(const Options& o) {
  const int given = !o.curve.empty() + !o.coeffs.empty() + !o.roots.empty();
  if (given != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --curve, --coeffs, --roots");
  if (!o.curve.empty()) return make_curve(parse_polynomial(o.curve), o.strict_octic);
  if (!o.coeffs.empty()) {
    const auto list = parse_rational_list(o.coeffs);
    if (list.size() > 9) throw Error(ErrorCode::WrongDegree, "at most 9 coefficients c0..c8");
    std::array<Rational, 9> c{};
    std::copy(list.begin(), list.end(), c.begin());
    return make_curve(c, o.strict_octic);
  }
  auto roots = parse_root_list(o.roots);
  if (roots.size() == 7 && !o.strict_octic) roots.push_back(ProjectiveRoot::infinity());
  if (roots.size() != 8) throw Error(ErrorCode::WrongDegree, "an octic needs 8 roots (7 plus infinity without --strict-octic)");
  std::array<ProjectiveRoot, 8> r;
  std::copy(roots.begin(), roots.end(), r.begin());
  CurveInput curve = make_curve(SplitOctic(r));
  if (o.strict_octic && curve.affine_degree != 8) throw Error(ErrorCode::WrongDegree, "--strict-octic needs a degree 8 curve");
  return curve;
}

TsuyumineVector tsuyumine_for(const CurveInput& curve, const ShiodaVector& j, const Options& o) {
  if (!o.from_roots) return tsuyumine_from_shioda(j);
  if (!curve.roots) throw Error(ErrorCode::InvalidArgument, "--from-roots needs --roots");
  return tsuyumine_from_roots(*curve.roots);
}

ShiodaVector read_shioda(std::string_view text) {
  const auto list = parse_rational_list(text);
  if (list.size() != 9) throw Error(ErrorCode::InvalidArgument, "expected 9 values J2..J10");
  std::array<Rational, 9> v;
  std::copy(list.begin(), list.end(), v.begin());
  return ShiodaVector(v);
}

TsuyumineVector read_tsuyumine(std::string_view text) {
  const auto list = parse_rational_list(text);
  if (list.size() != 9) throw Error(ErrorCode::InvalidArgument, "expected 9 values I2..I10");
  std::array<Rational, 9> v;
  std::copy(list.begin(), list.end(), v.begin());
  return TsuyumineVector(v);
}

int parse_target(const std::string& t) {
  if (t.size() >= 2 && t[0] == 'I') {
    try {
      std::size_t used = 0;
      const int k = std::stoi(t.substr(1), &used);
      if (used == t.size() - 1 && ((k >= 2 && k <= 10) || k == 20)) return k;
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "target must be one of I2..I10, I20");
}

Integer read_prime(const Options& o) {
  if (o.prime.empty()) throw Error(ErrorCode::InvalidArgument, "--prime is required");
  Integer p;
  if (p.set_str(o.prime, 10) != 0) throw Error(ErrorCode::InvalidArgument, "--prime must be an integer");
  return p;
}

Json table_terms(const WeightedMonomialTable& t, const char* prefix) {
  Json out = Json::array();
  for (const auto& term : t.terms()) {
    Json j;
    j["monomial"] = monomial_name(term.exponents, prefix);
    j["coefficient"] = term.coefficient.to_string();
    out.push_back(std::move(j));
  }
  return out;
}

Json run_command(const std::string& command, const Options& o) {
  const Emitter emit(o.factored);
  Json out;
  out["command"] = command;

  if (command == "convert") {
    if (o.shioda.empty() == o.tsuyumine.empty()) {
      throw Error(ErrorCode::InvalidArgument, "give exactly one of --shioda, --tsuyumine");
    }
    if (!o.shioda.empty()) {
      const ShiodaVector j = read_shioda(o.shioda);
      out["shioda"] = emit.vector(j);
      out["tsuyumine"] = emit.vector(tsuyumine_from_shioda(j));
    } else {
      const TsuyumineVector i = read_tsuyumine(o.tsuyumine);
      out["tsuyumine"] = emit.vector(i);
      out["shioda"] = emit.vector(shioda_from_tsuyumine(i));
    }
    return out;
  }

  if (command == "cluster") {
    const Integer p = read_prime(o);
    std::vector<Rational> roots;
    for (const auto& r : parse_root_list(o.roots)) {
      if (r.is_infinite()) throw Error(ErrorCode::FiniteRootsRequired, "finite roots required");
      roots.push_back(r.alpha / r.beta);
    }
    const ClusterSignature sig = cluster_signature(roots, p);
    out["prime"] = p.get_str();
    out["roots"] = Json::array();
    for (const auto& r : roots) out["roots"].push_back(r.to_string());
    out["pairs"] = Json::array();
    for (const auto& pv : sig.pairs) {
      out["pairs"].push_back({{"i", pv.i + 1}, {"j", pv.j + 1}, {"valuation", pv.valuation.to_string()}});
    }
    out["multiset"] = Json::array();
    for (const auto& v : sig.multiset()) out["multiset"].push_back(v.to_string());
    out["clusters"] = Json::array();
    for (const auto& c : sig.clusters()) {
      Json members = Json::array();
      for (int i : c) members.push_back(i + 1);
      out["clusters"].push_back(std::move(members));
    }
    return out;
  }

  if (command == "verify-passage") {
    const int weight = parse_target(o.target);
    SeededOcticSampler sampler(o.seed);
    InterpolationOptions options;
    options.initial_samples = o.samples;
    const InterpolationResult result = rederive_passage_coefficients(weight, sampler, options);
    const WeightedMonomialTable& shipped = weight == 20 ? i20_in_shioda() : tsuyumine_in_shioda(weight);
    out["target"] = o.target;
    out["seed"] = o.seed;
    out["samples_used"] = result.samples_used;
    out["coefficients"] = table_terms(result.table, "J");
    out["match"] = result.table == shipped;
    out["discrepancies"] = Json::array();
    for (const auto& d : diff_tables(shipped, result.table)) {
      out["discrepancies"].push_back({{"monomial", monomial_name(d.monomial, "J")},
                                      {"shipped", d.reference.to_string()},
                                      {"rederived", d.computed.to_string()}});
    }
    return out;
  }

  const CurveInput curve = read_curve(o);
  out["curve"] = format_polynomial(curve.coefficients);
  const ShiodaVector j = shioda_invariants(curve.form);

  if (command == "invariants") {
    out["shioda"] = emit.vector(j);
    out["tsuyumine"] = emit.vector(tsuyumine_for(curve, j, o));
    out["tsuyumine_source"] = o.from_roots ? "roots" : "passage";
    out["discriminant"] = emit.value(discriminant(curve.form));
  } else if (command == "i20") {
    const Rational via_shioda = i20_from_shioda(j);
    out["i20_from_shioda"] = emit.value(via_shioda);
    if (curve.roots) {
      const Rational via_roots = i20_from_roots(*curve.roots);
      out["i20_from_roots"] = emit.value(via_roots);
      out["match"] = via_roots == via_shioda;
    }
  } else if (command == "absolute") {
    const Rational d = discriminant(curve.form);
    const AbsoluteInvariants a = absolute_invariants(tsuyumine_for(curve, j, o), d);
    out["discriminant"] = emit.value(d);
    out["absolute"] = Json::array();
    for (const auto& v : a.values) out["absolute"].push_back(emit.value(v));
  } else if (command == "reduction") {
    const ReductionVerdict v = classify_reduction(curve.form, read_prime(o));
    out["prime"] = v.prime.get_str();
    out["verdict"] = reduction_type_name(v.type);
    out["v_sh_discriminant"] = v.v_discriminant.to_string();
    out["v_sh_i20"] = v.v_i20.to_string();
    out["discriminant"] = emit.value(v.discriminant);
    out["i20"] = emit.value(v.i20);
    out["caveat"] = v.caveat;
  }
  return out;
}

void print_error(std::ostream& out, std::string_view code, int status, const std::string& message) {
  Json j;
  j["error"] = {{"code", code}, {"exit_code", status}, {"message", message}};
  out << j.dump(2) << '\n';
}

}  // namespace

std::array<Rational, 9> parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

std::string format_polynomial(const std::array<Rational, 9>& c) {
  std::string out;
  for (int k = 8; k >= 0; --k) {
    const Rational& v = c[static_cast<std::size_t>(k)];
    if (v.is_zero()) continue;
    const Rational mag = abs(v);
    if (v.sign() < 0) out += "-";
    else if (!out.empty()) out += "+";
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

CurveInput make_curve(const std::array<Rational, 9>& coefficients, bool strict_octic) {
  const int d = affine_degree(coefficients);
  if (d != 8 && (strict_octic || d != 7)) {
    throw Error(ErrorCode::WrongDegree, std::string("curve must have degree ") + (strict_octic ? "8" : "7 or 8") +
                                            ", got " + std::to_string(d));
  }
  return {coefficients, d, BinaryForm(std::vector<Rational>(coefficients.begin(), coefficients.end())), std::nullopt};
}

CurveInput make_curve(const SplitOctic& roots) {
  BinaryForm f = roots.form();
  std::array<Rational, 9> c;
  for (int k = 0; k <= 8; ++k) c[static_cast<std::size_t>(k)] = f[k];
  return {c, affine_degree(c), std::move(f), roots};
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) out.push_back(Rational::parse(item));
  return out;
}

std::vector<ProjectiveRoot> parse_root_list(std::string_view text) {
  std::vector<ProjectiveRoot> out;
  for (const auto& item : split_list(text)) {
    if (item == "inf") {
      out.push_back(ProjectiveRoot::infinity());
    } else if (const auto colon = item.find(':'); colon != std::string::npos) {
      out.push_back({Rational::parse(item.substr(0, colon)), Rational::parse(item.substr(colon + 1))});
    } else {
      out.push_back(ProjectiveRoot::finite(Rational::parse(item)));
    }
  }
  return out;
}

int exit_code(ErrorCode code) { return 10 + static_cast<int>(code); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of binary octics and genus 3 hyperelliptic curves", "octic"};
  app.require_subcommand(1);
  Options o;

  auto curve_flags = [&](CLI::App* sub) {
    sub->add_option("--curve", o.curve, "f(x) of degree 7 or 8, e.g. \"x^7+3/2*x-1\"");
    sub->add_option("--coeffs", o.coeffs, "coefficients c0,...,c8 of f(x)");
    sub->add_option("--roots", o.roots, "roots a, a/b, a:b or inf, comma separated");
    sub->add_flag("--strict-octic", o.strict_octic, "reject degree 7 input");
    sub->add_flag("--factored", o.factored, "add factored renderings of every rational");
  };
  auto* invariants = app.add_subcommand("invariants", "Shioda and Tsuyumine invariants and the discriminant");
  curve_flags(invariants);
  invariants->add_flag("--from-roots", o.from_roots, "Tsuyumine invariants from the S8 root sums");
  auto* convert = app.add_subcommand("convert", "convert between Shioda and Tsuyumine invariants");
  convert->add_option("--shioda", o.shioda, "J2,...,J10");
  convert->add_option("--tsuyumine", o.tsuyumine, "I2,...,I10");
  convert->add_flag("--factored", o.factored, "add factored renderings of every rational");
  auto* i20 = app.add_subcommand("i20", "the degree 20 invariant");
  curve_flags(i20);
  auto* absolute = app.add_subcommand("absolute", "weight 0 invariants I_k / J^k, J = D/(I2^2 I3^3)");
  curve_flags(absolute);
  absolute->add_flag("--from-roots", o.from_roots, "Tsuyumine invariants from the S8 root sums");
  auto* reduction = app.add_subcommand("reduction", "reduction type at a prime");
  curve_flags(reduction);
  reduction->add_option("--prime", o.prime, "prime p > 7")->required();
  auto* cluster = app.add_subcommand("cluster", "valuations of root differences of an affine model");
  cluster->add_option("--roots", o.roots, "finite roots, comma separated")->required();
  cluster->add_option("--prime", o.prime, "odd prime")->required();
  auto* verify = app.add_subcommand("verify-passage", "re-derive a passage table by interpolation");
  verify->add_option("--target", o.target, "I2..I10 or I20")->capture_default_str();
  verify->add_option("--samples", o.samples, "initial number of sampled octics (default: one per unknown)");
  verify->add_option("--seed", o.seed, "sampler seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(out, "usage", kUsageExitCode, e.what());
    return kUsageExitCode;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    out << run_command(command, o).dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    const int status = exit_code(e.code());
    print_error(out, error_code_name(e.code()), status, e.what());
    return status;
  }
}

}  // namespace octic::cli

#include "hconv/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <utility>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "hconv/bounds.hpp"
#include "hconv/corpus.hpp"
#include "hconv/errors.hpp"
#include "hconv/oracle.hpp"
#include "hconv/random.hpp"

namespace hconv::cli {
namespace {

constexpr double kSoundSlack = 1e-9;
constexpr double kIdentityTol = 1e-9;

class ConfigError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------- parsing

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError("cannot read '" + std::string(text) + "' as a real number");
  }
  return v;
}

double parse_entry(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_real(text);
  const double num = parse_real(text.substr(0, slash));
  const double den = parse_real(text.substr(slash + 1));
  if (den == 0.0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

// ---------------------------------------------------------------- output

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), end);
}

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

Cell opt(std::optional<double> v) { return v ? Cell{*v} : Cell{}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return format_real(v);
      return v;
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

std::string render(const Table& t, Format format) {
  std::string text;
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      text += (i ? "," : "") + t.columns[i];
    }
    text += '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        text += (i ? "," : "") + cell_text(row[i]);
      }
      text += '\n';
    }
    return text;
  }
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- options

struct OutputOptions {
  std::string format = "csv";
  std::string out;
};

struct GridOptions {
  std::string alpha_grid = "1/2";
  std::string lambda_grid = "1/3";
  std::string q_grid = "1";
  std::optional<std::string> s_grid;
  std::optional<std::string> p_grid;
  std::string h = "t";
  std::string convexity = "convex";
  std::string function = "exp:1";
  std::vector<double> interval{0.0, 1.0};
  std::uint64_t seed = kDefaultMembershipSeed;
  std::size_t samples = kDefaultMembershipSamples;
  std::string bound = "power-mean";
  std::optional<double> f4_sup;
  std::string kinds;
};

struct CorpusOptions {
  std::size_t cases = 0;
  std::uint64_t seed = kDefaultMembershipSeed;
  std::string variants;
  std::string s_grid = "1/2";
  std::optional<std::string> function;
  std::vector<double> interval{0.0, 1.0};
  std::string h = "t";
};

void add_output(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write the report to PATH instead of stdout");
}

void add_grid(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--alpha-grid", g.alpha_grid, "Comma separated alpha values")
      ->capture_default_str();
  cmd->add_option("--lambda-grid", g.lambda_grid, "Comma separated lambda values")
      ->capture_default_str();
  cmd->add_option("--q-grid", g.q_grid, "Comma separated q values")->capture_default_str();
  cmd->add_option("--s-grid", g.s_grid, "Comma separated s values");
  cmd->add_option("--p", g.p_grid,
                  "Comma separated Hölder exponents p; q becomes p/(p-1)");
  cmd->add_option("--h", g.h, "Modulus: t, t^s, t^NUMBER, 1 or 1/t")->capture_default_str();
  cmd->add_option("--class", g.convexity, "Class claimed for |f'|^q")
      ->check(CLI::IsMember({"convex", "concave"}))
      ->capture_default_str();
  cmd->add_option("--function", g.function, "poly:c0,c1,.. | pow:BETA,R | exp:K[,C]")
      ->capture_default_str();
  cmd->add_option("--interval", g.interval, "Interval endpoints A B")
      ->expected(2)
      ->allow_extra_args(false);
  cmd->add_option("--seed", g.seed, "Seed of the membership sampler")->capture_default_str();
  cmd->add_option("--samples", g.samples, "Membership samples per grid point")
      ->capture_default_str();
  cmd->add_option("--f4-sup", g.f4_sup, "Upper bound on |f''''| for classical-simpson");
}

// ---------------------------------------------------------------- grid runs

struct Point {
  double alpha;
  double lambda;
  double q;
  std::optional<double> s;
  std::optional<double> p;
};

bool needs_conjugate(BoundKind k) {
  switch (k) {
    case BoundKind::HolderHConvex:
    case BoundKind::HolderHConcave:
    case BoundKind::Alomari14a:
    case BoundKind::Sarikaya15:
    case BoundKind::Kirmaci16:
      return true;
    default:
      return false;
  }
}

std::vector<double> required_grid(std::string_view text, std::string_view name) {
  std::vector<double> g = parse_grid(text);
  if (g.empty()) throw ConfigError("empty " + std::string(name));
  return g;
}

std::vector<Point> expand(const GridOptions& o, bool conjugate) {
  const auto alphas = required_grid(o.alpha_grid, "--alpha-grid");
  const auto lambdas = required_grid(o.lambda_grid, "--lambda-grid");
  std::vector<std::optional<double>> ss{std::nullopt};
  if (o.s_grid) {
    ss.clear();
    for (double s : required_grid(*o.s_grid, "--s-grid")) ss.emplace_back(s);
  }
  std::vector<std::pair<double, std::optional<double>>> qp;
  if (o.p_grid) {
    if (!conjugate) throw ConfigError("--p only applies to Hölder-type bounds");
    for (double p : required_grid(*o.p_grid, "--p")) {
      if (!(p > 1.0)) throw ConfigError("--p values must exceed 1");
      qp.emplace_back(p / (p - 1.0), p);
    }
  } else {
    for (double q : required_grid(o.q_grid, "--q-grid")) {
      if (conjugate) {
        if (!(q > 1.0)) throw ConfigError("Hölder-type bounds need q > 1");
        qp.emplace_back(q, q / (q - 1.0));
      } else {
        qp.emplace_back(q, std::nullopt);
      }
    }
  }
  std::vector<Point> pts;
  for (double a : alphas) {
    for (double l : lambdas) {
      for (const auto& [q, p] : qp) {
        for (const auto& s : ss) pts.push_back({a, l, q, s, p});
      }
    }
  }
  return pts;
}

enum class Status { Sound, Violated, Rejected, Inconclusive };

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Sound:
      return "sound";
    case Status::Violated:
      return "violated";
    case Status::Rejected:
      return "rejected";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct Evaluation {
  Point pt;
  std::string branch;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  Status status = Status::Inconclusive;
  std::string note;
};

struct Context {
  FunctionSpec fn;
  double a;
  double b;
  Convexity convexity;
};

Context make_context(const GridOptions& o) {
  if (o.interval.size() != 2) throw ConfigError("--interval needs two values");
  if (!(o.interval[0] < o.interval[1])) throw ConfigError("--interval needs A < B");
  if (o.samples < 1) throw ConfigError("--samples must be positive");
  return {parse_function(o.function), o.interval[0], o.interval[1],
          o.convexity == "convex" ? Convexity::HConvex : Convexity::HConcave};
}

// Builds the test function for a grid point. Errors here are configuration
// errors: the point is outside the admissible ranges.
TestFunction point_function(const Context& ctx, const GridOptions& o, const Point& pt) {
  HModulus h = parse_modulus(o.h, pt.s);
  return TestFunction::create(ctx.fn.f, ctx.fn.f_prime, ctx.a, ctx.b,
                              ClassCertificate::make(ctx.convexity, std::move(h), pt.q));
}

RuleParams point_rule(const Point& pt) { return RuleParams::make(pt.alpha, pt.lambda, pt.q, pt.p); }

bool is_config_error(const Error& e) {
  return dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ParamMismatch*>(&e) ||
         dynamic_cast<const ClassMismatch*>(&e) || dynamic_cast<const ConjugateMissing*>(&e) ||
         dynamic_cast<const NotIntegrable*>(&e) || dynamic_cast<const DegenerateModulus*>(&e) ||
         dynamic_cast<const ConfigError*>(&e);
}

Evaluation evaluate(const Context& ctx, const GridOptions& o, const Point& pt, BoundKind kind) {
  Evaluation ev;
  ev.pt = pt;
  const RuleParams rp = point_rule(pt);
  const TestFunction tf = point_function(ctx, o, pt);
  try {
    const MembershipReport m = certify_membership(tf, o.samples, o.seed);
    const BoundResult bound = evaluate_bound(tf, rp, kind, pt.s, o.f4_sup);
    ev.branch = std::string(hconv::to_string(bound.branch));
    ev.rhs = bound.value;
    ev.lhs = lhs_error(tf, rp);
    if (!m.holds) {
      ev.status = Status::Rejected;
      ev.note = "certificate rejected, worst violation " + format_real(m.worst_violation);
    } else {
      ev.status = ev.lhs <= ev.rhs + kSoundSlack ? Status::Sound : Status::Violated;
    }
  } catch (const Error& e) {
    if (is_config_error(e)) throw;
    ev.status = Status::Inconclusive;
    ev.note = e.what();
  }
  return ev;
}

int exit_code(const std::vector<Evaluation>& evs, std::ostream& err) {
  const Evaluation* first_bad = nullptr;
  bool inconclusive = false;
  for (const auto& ev : evs) {
    if ((ev.status == Status::Violated || ev.status == Status::Rejected) && !first_bad) {
      first_bad = &ev;
    }
    inconclusive = inconclusive || ev.status == Status::Inconclusive;
  }
  const auto describe = [&err](const Evaluation& ev) {
    err << to_string(ev.status) << ": alpha=" << format_real(ev.pt.alpha)
        << " lambda=" << format_real(ev.pt.lambda) << " q=" << format_real(ev.pt.q);
    if (ev.pt.s) err << " s=" << format_real(*ev.pt.s);
    err << " lhs=" << format_real(ev.lhs) << " rhs=" << format_real(ev.rhs);
    if (!ev.note.empty()) err << " (" << ev.note << ")";
    err << '\n';
  };
  if (first_bad) {
    describe(*first_bad);
    return kExitViolation;
  }
  if (inconclusive) {
    for (const auto& ev : evs) {
      if (ev.status == Status::Inconclusive) {
        describe(ev);
        break;
      }
    }
    return kExitOracle;
  }
  return kExitSound;
}

std::vector<Evaluation> run_grid(const GridOptions& o, BoundKind kind) {
  const Context ctx = make_context(o);
  std::vector<Evaluation> evs;
  for (const Point& pt : expand(o, needs_conjugate(kind))) {
    evs.push_back(evaluate(ctx, o, pt, kind));
  }
  return evs;
}

Table verify_table(const std::vector<Evaluation>& evs, BoundKind kind) {
  Table t{{"alpha", "lambda", "q", "s", "p", "bound_kind", "branch", "lhs", "rhs", "margin",
           "sound", "status"},
          {}};
  for (const auto& ev : evs) {
    t.rows.push_back({ev.pt.alpha, ev.pt.lambda, ev.pt.q, opt(ev.pt.s), opt(ev.pt.p),
                      std::string(to_string(kind)), ev.branch, ev.lhs, ev.rhs, ev.rhs - ev.lhs,
                      ev.status == Status::Sound, std::string(to_string(ev.status))});
  }
  return t;
}

Table sweep_table(const std::vector<Evaluation>& evs, BoundKind kind) {
  Table t{{"alpha", "lambda", "q", "s", "p", "bound_kind", "branch", "lhs", "rhs", "ratio"}, {}};
  for (const auto& ev : evs) {
    double ratio = ev.lhs / ev.rhs;
    if (ev.rhs == 0.0 && ev.lhs == 0.0) ratio = 0.0;
    t.rows.push_back({ev.pt.alpha, ev.pt.lambda, ev.pt.q, opt(ev.pt.s), opt(ev.pt.p),
                      std::string(to_string(kind)), ev.branch, ev.lhs, ev.rhs, ratio});
  }
  return t;
}

Table compare_table(const GridOptions& o, int& code) {
  std::vector<BoundKind> kinds;
  for (auto name : split(o.kinds, ',')) {
    name = trim(name);
    if (!name.empty()) kinds.push_back(parse_bound_kind(name));
  }
  if (kinds.empty()) throw ConfigError("--kinds needs at least one bound kind");
  const bool conjugate = std::any_of(kinds.begin(), kinds.end(), needs_conjugate);
  const Context ctx = make_context(o);

  Table t{{"alpha", "lambda", "q", "s", "p", "lhs"}, {}};
  for (BoundKind k : kinds) t.columns.emplace_back(to_string(k));
  t.columns.emplace_back("argmin");
  code = kExitSound;
  for (const Point& pt : expand(o, conjugate)) {
    const RuleParams rp = point_rule(pt);
    const TestFunction tf = point_function(ctx, o, pt);
    double lhs = std::numeric_limits<double>::quiet_NaN();
    try {
      lhs = lhs_error(tf, rp);
    } catch (const Error& e) {
      if (is_config_error(e)) throw;
      code = std::max(code, kExitOracle);
    }
    std::vector<Cell> row{pt.alpha, pt.lambda, pt.q, opt(pt.s), opt(pt.p), lhs};
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      const double v = evaluate_bound(tf, rp, kinds[i], pt.s, o.f4_sup).value;
      row.emplace_back(v);
      if (v < best_value) {
        best_value = v;
        best = i;
      }
      if (lhs > v + kSoundSlack) code = kExitViolation;
    }
    row.emplace_back(std::string(to_string(kinds[best])));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table identity_table(const CorpusOptions& o, int& code) {
  if (o.cases < 1) throw ConfigError("--cases must be positive");
  Rng rng(o.seed);
  Table t{{"case", "family", "a", "b", "alpha", "lambda", "rule_minus_mean", "kernel_integral",
           "residual", "ok"},
          {}};
  code = kExitSound;
  for (std::size_t i = 0; i < o.cases; ++i) {
    const corpus::SmoothCase c = corpus::random_smooth(rng);
    const double alpha = uniform01(rng);
    const double lambda = uniform01(rng);
    std::vector<Cell> row{static_cast<long long>(i), c.family, c.a, c.b, alpha, lambda};
    try {
      const IdentitySides sides =
          lemma_identity_sides(c.f, c.f_prime, c.a, c.b, RuleParams::make(alpha, lambda, 1.0));
      const bool ok = sides.residual <= kIdentityTol;
      if (!ok) code = kExitViolation;
      row.insert(row.end(), {sides.rule_minus_mean, sides.kernel_integral, sides.residual, ok});
    } catch (const Error& e) {
      if (is_config_error(e)) throw;
      if (code == kExitSound) code = kExitOracle;
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}, false});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<HadamardVariant> parse_variants(std::string_view text) {
  std::vector<HadamardVariant> out;
  for (auto name : split(text, ',')) {
    name = trim(name);
    if (!name.empty()) out.push_back(parse_hadamard_variant(name));
  }
  return out;
}

HadamardVariant variant_for(const HModulus& h) {
  switch (h.kind()) {
    case ModulusKind::Identity:
      return HadamardVariant::Classical;
    case ModulusKind::Power:
      return HadamardVariant::SConvex;
    case ModulusKind::Constant:
      return HadamardVariant::PFunction;
    case ModulusKind::Reciprocal:
      return HadamardVariant::GodunovaLevin;
    case ModulusKind::Custom:
      break;
  }
  return HadamardVariant::HConvex;
}

Table hadamard_table(const CorpusOptions& o, int& code) {
  Table t{{"variant", "s", "case", "family", "a", "b", "h", "left", "middle", "right", "holds"},
          {}};
  code = kExitSound;
  const auto add = [&](HadamardVariant v, std::optional<double> s, long long idx,
                       const std::string& family, const RealFn& f, double a, double b,
                       const HModulus& h) {
    std::vector<Cell> row{std::string(to_string(v)), opt(s), idx, family, a, b, h.label()};
    try {
      const HadamardReport r = hadamard_check(f, a, b, v, h);
      if (!r.holds) code = kExitViolation;
      row.insert(row.end(), {r.left, r.middle, opt(r.right), r.holds});
    } catch (const Error& e) {
      if (is_config_error(e)) throw;
      if (code == kExitSound) code = kExitOracle;
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}, false});
    }
    t.rows.push_back(std::move(row));
  };

  const auto s_values = required_grid(o.s_grid, "--s-grid");
  if (o.function) {
    if (o.interval.size() != 2 || !(o.interval[0] < o.interval[1])) {
      throw ConfigError("--interval needs A < B");
    }
    const FunctionSpec fn = parse_function(*o.function);
    const bool uses_s = o.h == "t^s";
    for (double s : uses_s ? s_values : std::vector<double>{std::nan("")}) {
      const std::optional<double> sv = uses_s ? std::optional<double>(s) : std::nullopt;
      const HModulus h = parse_modulus(o.h, sv);
      std::vector<HadamardVariant> vs = parse_variants(o.variants);
      if (vs.empty()) vs = {variant_for(h), HadamardVariant::HConvex};
      for (HadamardVariant v : vs) {
        add(v, h.kind() == ModulusKind::Power ? std::optional<double>(h.s_param()) : std::nullopt,
            0, "function", fn.f, o.interval[0], o.interval[1], h);
      }
    }
    return t;
  }

  if (o.cases < 1) throw ConfigError("--cases must be positive");
  std::vector<HadamardVariant> vs = parse_variants(o.variants);
  if (vs.empty()) {
    vs = {HadamardVariant::Classical, HadamardVariant::SConvex, HadamardVariant::GodunovaLevin,
          HadamardVariant::PFunction, HadamardVariant::HConvex};
  }
  for (HadamardVariant v : vs) {
    const bool uses_s = v == HadamardVariant::SConvex || v == HadamardVariant::HConvex;
    for (double s : uses_s ? s_values : std::vector<double>{0.5}) {
      if (uses_s && !(s > 0.0 && s <= 1.0)) throw ConfigError("--s-grid values must lie in (0,1]");
      Rng rng(o.seed);
      for (std::size_t i = 0; i < o.cases; ++i) {
        const corpus::HadamardCase c = corpus::random_hadamard(rng, v, s);
        add(v, uses_s ? std::optional<double>(s) : std::nullopt, static_cast<long long>(i),
            c.family, c.f, c.a, c.b, c.h);
      }
    }
  }
  return t;
}

bool emit(const Table& t, const OutputOptions& o, std::ostream& out, std::ostream& err) {
  const std::string text = render(t, o.format == "json" ? Format::Json : Format::Csv);
  if (o.out.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (file) file << text;
  if (!file) {
    err << "error: cannot write " << o.out << '\n';
    return false;
  }
  return true;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    if (part.empty()) throw DomainError("empty entry in grid '" + std::string(text) + "'");
    out.push_back(parse_entry(part));
  }
  return out;
}

FunctionSpec parse_function(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("function spec '" + std::string(text) + "' lacks a family prefix");
  }
  const std::string_view family = trim(text.substr(0, colon));
  const std::vector<double> args = parse_list(text.substr(colon + 1));
  if (family == "poly") {
    if (args.empty()) throw DomainError("poly needs at least one coefficient");
    auto c = std::make_shared<const std::vector<double>>(args);
    return {[c](double x) {
              double acc = 0.0;
              for (auto it = c->rbegin(); it != c->rend(); ++it) acc = acc * x + *it;
              return acc;
            },
            [c](double x) {
              double acc = 0.0;
              for (std::size_t k = c->size(); k-- > 1;) {
                acc = acc * x + static_cast<double>(k) * (*c)[k];
              }
              return acc;
            }};
  }
  if (family == "pow") {
    if (args.size() != 2) throw DomainError("pow needs BETA,R");
    const double beta = args[0];
    const double r = args[1];
    return {[beta, r](double x) { return beta * std::pow(x, r); },
            [beta, r](double x) { return r == 0.0 ? 0.0 : beta * r * std::pow(x, r - 1.0); }};
  }
  if (family == "exp") {
    if (args.empty() || args.size() > 2) throw DomainError("exp needs K or K,C");
    const double k = args[0];
    const double c = args.size() == 2 ? args[1] : 1.0;
    return {[k, c](double x) { return c * std::exp(k * x); },
            [k, c](double x) { return c * k * std::exp(k * x); }};
  }
  throw DomainError("unknown function family '" + std::string(family) + "'");
}

HModulus parse_modulus(std::string_view text, std::optional<double> s) {
  text = trim(text);
  if (text == "t") return HModulus::identity();
  if (text == "1") return HModulus::constant();
  if (text == "1/t") return HModulus::reciprocal();
  if (text == "t^s") {
    if (!s) throw DomainError("--h t^s needs --s-grid");
    return HModulus::power(*s);
  }
  if (text.substr(0, 2) == "t^") return HModulus::power(parse_entry(text.substr(2)));
  throw DomainError("unknown modulus '" + std::string(text) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error bounds for the two-parameter midpoint/trapezoid/Simpson family"};
  app.require_subcommand(1);
  // --h names the modulus, so help is only reachable as --help.
  app.set_help_flag("--help", "Print this help message and exit");

  GridOptions grid;
  OutputOptions output;
  CorpusOptions corpus_opts;

  CLI::App* verify = app.add_subcommand("verify", "Check one bound on every grid point");
  CLI::App* sweep = app.add_subcommand("sweep", "Tightness ratios lhs/rhs over a grid");
  CLI::App* compare = app.add_subcommand("compare", "Several bounds side by side");
  CLI::App* identity =
      app.add_subcommand("identity", "Kernel identity residuals on the random corpus");
  CLI::App* hadamard = app.add_subcommand("hadamard", "Hermite-Hadamard chains");

  for (CLI::App* cmd : {verify, sweep, compare}) {
    add_grid(cmd, grid);
    add_output(cmd, output);
  }
  for (CLI::App* cmd : {verify, sweep}) {
    cmd->add_option("--bound", grid.bound, "Bound kind")->capture_default_str();
  }
  compare->add_option("--kinds", grid.kinds, "Comma separated bound kinds")->required();

  identity->add_option("--cases", corpus_opts.cases, "Number of random cases")
      ->default_val(200);
  identity->add_option("--seed", corpus_opts.seed, "Corpus seed")->capture_default_str();
  add_output(identity, output);

  hadamard->add_option("--cases", corpus_opts.cases, "Cases per variant and s")
      ->default_val(500);
  hadamard->add_option("--seed", corpus_opts.seed, "Corpus seed")->capture_default_str();
  hadamard->add_option("--variant", corpus_opts.variants,
                       "Comma separated: classical, s-convex, godunova-levin, p-function, "
                       "h-convex");
  hadamard->add_option("--s-grid", corpus_opts.s_grid, "s values for the s-convex corpus")
      ->capture_default_str();
  hadamard->add_option("--function", corpus_opts.function, "Check this function instead");
  hadamard->add_option("--interval", corpus_opts.interval, "Interval for --function")
      ->expected(2);
  hadamard->add_option("--h", corpus_opts.h, "Modulus for --function")->capture_default_str();
  add_output(hadamard, output);

  std::vector<const char*> argv{"hconv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSound : kExitConfig;
  }

  try {
    Table table;
    int code = kExitSound;
    if (verify->parsed() || sweep->parsed()) {
      const BoundKind kind = parse_bound_kind(grid.bound);
      const std::vector<Evaluation> evs = run_grid(grid, kind);
      table = verify->parsed() ? verify_table(evs, kind) : sweep_table(evs, kind);
      code = exit_code(evs, err);
    } else if (compare->parsed()) {
      table = compare_table(grid, code);
    } else if (identity->parsed()) {
      table = identity_table(corpus_opts, code);
    } else {
      table = hadamard_table(corpus_opts, code);
    }
    if (!emit(table, output, out, err)) return kExitConfig;
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_config_error(e) ? kExitConfig : kExitOracle;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitOracle;
  }
}

}  // namespace hconv::cli

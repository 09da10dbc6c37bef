#include <gpencil/acceptance.hpp>
#include <gpencil/cli.hpp>
#include <gpencil/conjecture.hpp>
#include <gpencil/exact_det.hpp>
#include <gpencil/interlace.hpp>
#include <gpencil/pencil_solve.hpp>
#include <gpencil/set_matrix.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace gpencil::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };
enum class PencilKind { LcmGcd, MaxMin };

// ---------------------------------------------------------------- parsing

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Integer, fraction p/q, or terminating decimal; converted exactly.
Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw UsageError("malformed fraction '" + raw + "'");
    if (BigInt(den) == 0) throw UsageError("zero denominator in '" + raw + "'");
    value = Rational(BigInt(num), BigInt(den));
  } else if (const auto dot = s.find('.'); dot != std::string::npos) {
    const auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac) || (whole.empty() && frac.empty()))
      throw UsageError("malformed decimal '" + raw + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(BigInt(whole.empty() ? "0" : whole) * scale + BigInt(frac), scale);
  } else {
    if (!all_digits(s)) throw UsageError("malformed number '" + raw + "'");
    value = Rational(BigInt(s));
  }
  return negative ? Rational(-value) : value;
}

SetSpec parse_set(const std::string& set_arg, const std::string& range_arg) {
  if (!range_arg.empty()) {
    const auto dots = range_arg.find("..");
    if (dots == std::string::npos) throw UsageError("--range expects a..b, got '" + range_arg + "'");
    const auto a = trim(range_arg.substr(0, dots)), b = trim(range_arg.substr(dots + 2));
    if (!all_digits(a) || !all_digits(b)) throw UsageError("--range expects integers, got '" + range_arg + "'");
    return SetSpec::range(std::stol(a), std::stol(b));
  }
  if (set_arg.empty()) throw UsageError("one of --set or --range is required");
  std::vector<Rational> values;
  bool integral = true;
  for (const auto& tok : split(set_arg, ',')) {
    values.push_back(parse_rational(tok));
    integral = integral && boost::multiprecision::denominator(values.back()) == 1;
  }
  if (!integral) return SetSpec::real(std::move(values));
  std::vector<BigInt> ints;
  for (const auto& v : values) ints.push_back(boost::multiprecision::numerator(v));
  return SetSpec::big_integer(std::move(ints));
}

// "1,2;2,2" -> [[1,2],[2,2]]
RationalMatrix parse_matrix(const std::string& text) {
  const auto rows = split(text, ';');
  const auto n = Eigen::Index(rows.size());
  RationalMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto cells = split(rows[std::size_t(i)], ',');
    if (Eigen::Index(cells.size()) != n)
      throw UsageError("matrix '" + text + "' is not square (row " + std::to_string(i + 1) + ")");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_rational(cells[std::size_t(j)]);
  }
  return m;
}

BigIntMatrix require_integer(const RationalMatrix& m, const char* what) {
  BigIntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (boost::multiprecision::denominator(m(i, j)) != 1)
        throw InvalidParameter(std::string(what) + " must have integer entries for exact arithmetic");
      out(i, j) = boost::multiprecision::numerator(m(i, j));
    }
  return out;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("GPENCIL_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return std::size_t(v);
  }
  return 1;
}

// ---------------------------------------------------------------- output

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json strings(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json matrix_json(const BigIntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json set_json(const SetSpec& s) {
  json a = json::array();
  for (const auto& e : s.elements()) a.push_back(e.str());
  return a;
}

struct Context {
  Format format = Format::Text;
  int digits = 4;
  std::ostream& out;

  void emit(const std::string& command, const json& inputs, const json& payload) const {
    json rec{{"command", command}, {"inputs", inputs}, {"payload", payload}, {"format", "json-lines"}};
    out << rec.dump() << '\n';
  }
};

std::string join_values(const std::vector<double>& v, int digits) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fixed(v[i], digits);
  return s;
}

std::string pencil_name(PencilKind k) { return k == PencilKind::LcmGcd ? "lcm-gcd" : "max-min"; }

std::pair<BigIntMatrix, BigIntMatrix> exact_pencil(const SetSpec& s, PencilKind kind) {
  if (s.kind() != SetKind::Integer)
    throw InvalidSet("exact computations need an integer set, got " + s.to_string());
  if (kind == PencilKind::LcmGcd) return {build_lcm_matrix(s), build_gcd_matrix(s)};
  return {build_max_matrix_int(s), build_min_matrix_int(s)};
}

std::pair<RealMatrix, RealMatrix> real_pencil(const SetSpec& s, PencilKind kind) {
  if (kind == PencilKind::LcmGcd) return {to_real(build_lcm_matrix(s)), to_real(build_gcd_matrix(s))};
  return {to_real(build_max_matrix(s)), to_real(build_min_matrix(s))};
}

// Shared --set/--range/--pencil/--a/--b handling.
struct PencilArgs {
  std::string set, range, a, b;
  PencilKind kind = PencilKind::LcmGcd;

  void attach(CLI::App* sub, bool allow_explicit) {
    sub->add_option("--set", set, "Comma-separated elements (integers, p/q or decimals)");
    sub->add_option("--range", range, "Consecutive integers a..b, inclusive");
    sub->add_option("--pencil", kind, "Matrix pair: lcm-gcd (L,G) or max-min (M,N)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, PencilKind>{{"lcm-gcd", PencilKind::LcmGcd}, {"max-min", PencilKind::MaxMin}}));
    if (allow_explicit) {
      sub->add_option("--a", a, "Explicit matrix A as rows 'a11,a12;a21,a22'");
      sub->add_option("--b", b, "Explicit matrix B, same layout");
    }
  }

  bool is_explicit() const { return !a.empty() || !b.empty(); }

  json inputs() const {
    if (is_explicit()) return {{"a", a}, {"b", b}};
    json j{{"pencil", pencil_name(kind)}};
    if (!range.empty()) j["range"] = range;
    else j["set"] = set;
    return j;
  }

  std::pair<BigIntMatrix, BigIntMatrix> exact() const {
    if (is_explicit()) {
      if (a.empty() || b.empty()) throw UsageError("--a and --b must be given together");
      return {require_integer(parse_matrix(a), "A"), require_integer(parse_matrix(b), "B")};
    }
    return exact_pencil(parse_set(set, range), kind);
  }

  std::pair<RealMatrix, RealMatrix> real() const {
    if (is_explicit()) {
      if (a.empty() || b.empty()) throw UsageError("--a and --b must be given together");
      return {to_real(parse_matrix(a)), to_real(parse_matrix(b))};
    }
    return real_pencil(parse_set(set, range), kind);
  }
};

// ---------------------------------------------------------------- commands

int cmd_build(const Context& ctx, const PencilArgs& pa, const std::string& which) {
  const SetSpec s = parse_set(pa.set, pa.range);
  std::vector<std::string> kinds;
  if (which == "all") {
    kinds = {"max", "min"};
    if (s.kind() == SetKind::Integer) kinds.insert(kinds.end(), {"lcm", "gcd"});
  } else {
    kinds = {which};
  }
  if (ctx.format == Format::Csv) ctx.out << "matrix,row,col,value\n";
  for (const auto& k : kinds) {
    json rows;
    std::vector<std::vector<std::string>> cells;
    auto collect = [&](const auto& m) {
      rows = matrix_json(m);
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        cells.emplace_back();
        for (Eigen::Index j = 0; j < m.cols(); ++j) cells.back().push_back(m(i, j).str());
      }
    };
    if (k == "max") collect(build_max_matrix(s));
    else if (k == "min") collect(build_min_matrix(s));
    else if (k == "lcm") collect(build_lcm_matrix(s));
    else collect(build_gcd_matrix(s));

    switch (ctx.format) {
      case Format::Json:
        ctx.emit("build", {{"set", set_json(s)}, {"matrix", k}},
                 {{"matrix", k}, {"order", s.size()}, {"rows", rows}});
        break;
      case Format::Csv:
        for (std::size_t i = 0; i < cells.size(); ++i)
          for (std::size_t j = 0; j < cells[i].size(); ++j)
            ctx.out << k << ',' << i + 1 << ',' << j + 1 << ',' << cells[i][j] << '\n';
        break;
      case Format::Text: {
        std::size_t width = 1;
        for (const auto& r : cells)
          for (const auto& c : r) width = std::max(width, c.size());
        ctx.out << k << " matrix on " << s.to_string() << ":\n";
        for (const auto& r : cells) {
          for (std::size_t j = 0; j < r.size(); ++j) ctx.out << (j ? " " : "  ") << std::setw(int(width)) << r[j];
          ctx.out << '\n';
        }
        break;
      }
    }
  }
  return kOk;
}

int cmd_charpoly(const Context& ctx, const PencilArgs& pa) {
  const auto [a, b] = pa.exact();
  const IntPolynomial p = pencil_charpoly(a, b);
  switch (ctx.format) {
    case Format::Json:
      ctx.emit("charpoly", pa.inputs(),
               {{"coefficients", strings(p.coefficients())}, {"order", "ascending"},
                {"degree", p.degree()}, {"polynomial", p.to_string()}});
      break;
    case Format::Csv:
      ctx.out << "power,coefficient\n";
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) ctx.out << k << ',' << p.coefficients()[k] << '\n';
      break;
    case Format::Text: {
      ctx.out << "det(A - x B) = " << p << '\n' << "coefficients (ascending): ";
      const auto& c = p.coefficients();
      for (std::size_t k = 0; k < c.size(); ++k) ctx.out << (k ? ", " : "") << c[k];
      ctx.out << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_eig(const Context& ctx, const PencilArgs& pa, bool closed_form, double pd_tolerance) {
  Spectrum s;
  std::string method = "jacobi";
  if (closed_form) {
    if (pa.is_explicit()) throw UsageError("--closed-form needs --set or --range");
    const SetSpec set = parse_set(pa.set, pa.range);
    s = pa.kind == PencilKind::MaxMin ? maxmin_closed_form(set) : lcmgcd_small_closed_form(set);
    method = "closed-form";
  } else {
    const auto [a, b] = pa.real();
    s = generalized_eigenvalues(a, b, pd_tolerance);
  }
  switch (ctx.format) {
    case Format::Json:
      ctx.emit("eig", pa.inputs(), {{"values", s.values()}, {"digits", ctx.digits}, {"method", method}});
      break;
    case Format::Csv:
      ctx.out << "index,value,digits\n";
      for (std::size_t i = 0; i < s.order(); ++i) ctx.out << i + 1 << ',' << full(s[i]) << ',' << ctx.digits << '\n';
      break;
    case Format::Text:
      ctx.out << join_values(s.values(), ctx.digits) << '\n';
      break;
  }
  return kOk;
}

int cmd_multiplicity(const Context& ctx, const PencilArgs& pa, long root) {
  const auto [a, b] = pa.exact();
  const IntPolynomial p = pencil_charpoly(a, b);
  const BigInt r(root);
  const std::size_t k = root_multiplicity(p, r);
  const BigInt value = poly_eval_integer(p, r);
  switch (ctx.format) {
    case Format::Json: {
      json in = pa.inputs();
      in["root"] = root;
      ctx.emit("multiplicity", in, {{"root", r.str()}, {"multiplicity", k}, {"value_at_root", value.str()}});
      break;
    }
    case Format::Csv:
      ctx.out << "root,multiplicity,value_at_root\n" << root << ',' << k << ',' << value << '\n';
      break;
    case Format::Text:
      ctx.out << "multiplicity of " << root << ": " << k << "  (p(" << root << ") = " << value << ")\n";
      break;
  }
  return kOk;
}

int cmd_surd(const Context& ctx, const PencilArgs& pa, const std::string& radicand) {
  if (!all_digits(radicand) && !(radicand.size() > 1 && radicand[0] == '-' && all_digits(radicand.substr(1))))
    throw UsageError("--radicand expects an integer, got '" + radicand + "'");
  const auto [a, b] = pa.exact();
  const SurdValue v = poly_eval_surd(pencil_charpoly(a, b), BigInt(radicand));
  switch (ctx.format) {
    case Format::Json: {
      json in = pa.inputs();
      in["radicand"] = radicand;
      ctx.emit("surd-eval", in,
               {{"radicand", v.radicand.str()}, {"rational_part", v.rational_part.str()},
                {"surd_part", v.surd_part.str()}, {"is_zero", v.is_zero()}});
      break;
    }
    case Format::Csv:
      ctx.out << "radicand,rational_part,surd_part\n"
              << v.radicand << ',' << v.rational_part << ',' << v.surd_part << '\n';
      break;
    case Format::Text:
      ctx.out << "p(sqrt(" << v.radicand << ")) = " << v.rational_part << (v.surd_part < 0 ? " - " : " + ")
              << abs(v.surd_part) << "*sqrt(" << v.radicand << ")\n";
      break;
  }
  return kOk;
}

int cmd_interlace(const Context& ctx, const PencilArgs& pa, double slack) {
  const auto [a, b] = pa.real();
  if (a.rows() < 2) throw InvalidParameter("interlacing needs order >= 2");
  if (ctx.format == Format::Csv) ctx.out << "order,holds,violations\n";
  bool all_hold = true;
  for (Eigen::Index n = 2; n <= a.rows(); ++n) {
    const auto r = check_pencil_interlacing(a.topLeftCorner(n, n), b.topLeftCorner(n, n), slack);
    all_hold = all_hold && r.holds;
    switch (ctx.format) {
      case Format::Json: {
        json viol = json::array();
        for (const auto& v : r.violations) viol.push_back({{"index", v.index}, {"gap", v.gap}});
        json in = pa.inputs();
        in["slack"] = slack;
        ctx.emit("interlace", in,
                 {{"order", n}, {"holds", r.holds}, {"parent", r.parent.values()},
                  {"child", r.child.values()}, {"violations", viol}, {"digits", ctx.digits}});
        break;
      }
      case Format::Csv:
        ctx.out << n << ',' << (r.holds ? "true" : "false") << ',' << r.violations.size() << '\n';
        break;
      case Format::Text:
        ctx.out << "order " << n << " vs " << n - 1 << ": " << (r.holds ? "interlaces" : "VIOLATED");
        for (const auto& v : r.violations) ctx.out << "  [k=" << v.index << " gap " << full(v.gap) << "]";
        ctx.out << '\n';
        break;
    }
  }
  return all_hold ? kOk : kVerificationFailure;
}

json verdict_json(const ScanRecord& r) {
  const auto& v = r.exact_verdict;
  return {{"n", r.n},
          {"verdict", to_string(v.verdict)},
          {"has_minus_one", r.has_minus_one},
          {"predicted", r.predicted},
          {"agrees", r.agrees},
          {"in_conjecture_range", r.in_conjecture_range},
          {"witness", v.witness ? json(std::to_string(*v.witness)) : json(nullptr)},
          {"primes_used", v.primes_used},
          {"hadamard_bits", v.hadamard_bits ? json(*v.hadamard_bits) : json(nullptr)}};
}

std::string compress(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    if (!s.empty()) s += ", ";
    s += std::to_string(v[i]);
    if (j > i + 1) s += "-" + std::to_string(v[j]);
    else if (j == i + 1) s += ", " + std::to_string(v[j]);
    i = j + 1;
  }
  return s.empty() ? "none" : s;
}

int cmd_scan(const Context& ctx, const ScanOptions& opt, bool list_records) {
  const auto records = scan_minus_one(opt);
  std::vector<std::size_t> members, outside, disagree;
  for (const auto& r : records) {
    if (r.has_minus_one) (r.in_conjecture_range ? members : outside).push_back(r.n);
    if (r.in_conjecture_range && !r.agrees) disagree.push_back(r.n);
  }
  const json inputs{{"max_n", opt.max_n},     {"primes", opt.num_primes},
                    {"certify", opt.certify}, {"seed", opt.seed},
                    {"strategy", opt.strategy == ScanStrategy::Rebuild ? "rebuild" : "incremental"}};
  switch (ctx.format) {
    case Format::Json:
      for (const auto& r : records) ctx.emit("scan", inputs, verdict_json(r));
      ctx.emit("scan", inputs,
               {{"summary", true}, {"members", members}, {"outside_conjecture_range", outside},
                {"disagreements", disagree}});
      break;
    case Format::Csv:
      ctx.out << "n,verdict,has_minus_one,predicted,agrees,in_conjecture_range,witness,primes_used,hadamard_bits\n";
      for (const auto& r : records) {
        const auto& v = r.exact_verdict;
        ctx.out << r.n << ',' << to_string(v.verdict) << ',' << r.has_minus_one << ',' << r.predicted << ','
                << r.agrees << ',' << r.in_conjecture_range << ','
                << (v.witness ? std::to_string(*v.witness) : "") << ',' << v.primes_used << ','
                << (v.hadamard_bits ? std::to_string(*v.hadamard_bits) : "") << '\n';
      }
      break;
    case Format::Text:
      if (list_records) {
        for (const auto& r : records) {
          ctx.out << std::setw(5) << r.n << "  " << std::setw(17) << std::left << to_string(r.exact_verdict.verdict)
                  << std::right << "  -1:" << (r.has_minus_one ? "yes" : "no ") << "  predicted:"
                  << (r.predicted ? "yes" : "no ") << (r.in_conjecture_range ? "" : "  (n <= 3, outside range)")
                  << '\n';
        }
      }
      ctx.out << "-1 is a generalized eigenvalue for n > 3: " << compress(members) << '\n'
              << "outside the conjecture range (n <= 3): " << compress(outside) << '\n'
              << "disagreements with the binary-prefix-10 predicate: " << compress(disagree) << '\n';
      break;
  }
  return disagree.empty() ? kOk : kVerificationFailure;
}

int cmd_verify(const Context& ctx, const AcceptanceOptions& opt) {
  int failures = 0;
  run_acceptance(opt, [&](const CriterionResult& r) {
    failures += !r.passed;
    switch (ctx.format) {
      case Format::Json:
        ctx.emit("verify", {{"scan_limit", opt.scan_limit}},
                 {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
        break;
      case Format::Csv:
        if (r.id == 1) ctx.out << "id,passed,seconds,title\n";
        ctx.out << r.id << ',' << r.passed << ',' << full(r.seconds) << ",\"" << r.title << "\"\n";
        break;
      case Format::Text:
        ctx.out << format_result_line(r) << std::endl;
        break;
    }
  });
  if (ctx.format == Format::Text) ctx.out << (failures ? "FAILED" : "ALL PASSED") << '\n';
  return failures ? kVerificationFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized eigenvalues of MAX/MIN and LCM/GCD matrix pencils", "gpencil"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Text;
  int digits = 4;
  app.add_option("--format", format, "Output format: text, json (one object per line) or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}}));
  app.add_option("--digits", digits, "Decimal places for floating output")->check(CLI::Range(0, 17));

  PencilArgs build_args, poly_args, eig_args, mult_args, surd_args, inter_args;
  std::string which = "all";
  auto* build = app.add_subcommand("build", "Emit the MAX, MIN, LCM and GCD matrices of a set");
  build_args.attach(build, false);
  build->add_option("--matrix", which, "max, min, lcm, gcd or all")
      ->check(CLI::IsMember({"max", "min", "lcm", "gcd", "all"}));

  auto* charpoly = app.add_subcommand("charpoly", "Exact det(A - x B)");
  poly_args.attach(charpoly, true);

  bool closed_form = false;
  double pd_tolerance = kDefaultPdTolerance;
  auto* eig = app.add_subcommand("eig", "Generalized eigenvalues, descending");
  eig_args.attach(eig, true);
  eig->add_flag("--closed-form", closed_form, "Use the MAX/MIN or small LCM/GCD closed forms");
  eig->add_option("--pd-tolerance", pd_tolerance, "Relative Cholesky pivot threshold");

  long root = -1;
  auto* mult = app.add_subcommand("multiplicity", "Multiplicity of an integer root of det(A - x B)");
  mult_args.attach(mult, true);
  mult->add_option("--root", root, "Integer root to test (default -1)");

  std::string radicand;
  auto* surd = app.add_subcommand("surd-eval", "Evaluate det(A - x B) at x = sqrt(m) exactly");
  surd_args.attach(surd, true);
  surd->add_option("--radicand", radicand, "m > 0, not a perfect square")->required();

  double slack = 1e-6;
  auto* inter = app.add_subcommand("interlace", "Check interlacing between consecutive leading orders");
  inter_args.attach(inter, true);
  inter->add_option("--slack", slack, "Allowed violation per inequality");

  ScanOptions scan_opt;
  scan_opt.jobs = default_jobs();
  bool rebuild = false, list_records = false;
  auto* scan = app.add_subcommand("scan", "Exact scan of det(L + G) on {1..n} for n = 1..max-n");
  scan->add_option("--max-n", scan_opt.max_n, "Largest order to scan")->required()->check(CLI::PositiveNumber);
  scan->add_flag("--certify", scan_opt.certify, "Use enough primes to prove zero verdicts");
  scan->add_option("--primes", scan_opt.num_primes, "Number of primes (default 16)")->check(CLI::PositiveNumber);
  scan->add_option("--seed", scan_opt.seed, "Seed of the prime sequence (default 0)");
  scan->add_option("--jobs", scan_opt.jobs, "Worker threads (default $GPENCIL_JOBS or 1)")->check(CLI::PositiveNumber);
  scan->add_flag("--rebuild", rebuild, "Recompute each determinant from scratch");
  scan->add_flag("--records", list_records, "List every n in text output");

  AcceptanceOptions verify_opt;
  verify_opt.jobs = default_jobs();
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--scan-limit", verify_opt.scan_limit, "Upper n of the probabilistic scan")
      ->check(CLI::Range(4, 100000));
  verify->add_option("--jobs", verify_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const Context ctx{format, digits, out};
  try {
    if (*build) return cmd_build(ctx, build_args, which);
    if (*charpoly) return cmd_charpoly(ctx, poly_args);
    if (*eig) return cmd_eig(ctx, eig_args, closed_form, pd_tolerance);
    if (*mult) return cmd_multiplicity(ctx, mult_args, root);
    if (*surd) return cmd_surd(ctx, surd_args, radicand);
    if (*inter) return cmd_interlace(ctx, inter_args, slack);
    if (*scan) {
      scan_opt.strategy = rebuild ? ScanStrategy::Rebuild : ScanStrategy::Incremental;
      return cmd_scan(ctx, scan_opt, list_records);
    }
    if (*verify) return cmd_verify(ctx, verify_opt);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace gpencil::cli

#include <gpencil/acceptance.hpp>
#include <gpencil/conjecture.hpp>
#include <gpencil/exact_det.hpp>
#include <gpencil/interlace.hpp>
#include <gpencil/pencil_solve.hpp>
#include <gpencil/reference.hpp>
#include <gpencil/set_matrix.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace gpencil {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail.str("");
    else detail << "; ";
    passed = false;
    detail << why;
  }
};

IntPolynomial lcm_gcd_charpoly(const SetSpec& t) {
  return pencil_charpoly(build_lcm_matrix(t), build_gcd_matrix(t));
}

IntPolynomial range_charpoly(long n) { return lcm_gcd_charpoly(SetSpec::range(1, n)); }

std::string join(const std::vector<double>& v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

// 1. p_1 .. p_5 on {1..n}, exact.
Outcome exact_polynomials() {
  Outcome o;
  const auto lam_plus_1 = IntPolynomial{1, 1};
  const std::vector<IntPolynomial> expected = {
      IntPolynomial{1, -1},
      IntPolynomial{-2, 0, 1},
      IntPolynomial::constant(-2) * lam_plus_1 * IntPolynomial{-6, 0, 1},
      IntPolynomial::constant(4) * lam_plus_1 * lam_plus_1 * IntPolynomial{-12, 0, 1},
      IntPolynomial{960, 2880, 2480, 528, -48, -16},
  };
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    const auto p = range_charpoly(long(n));
    if (p != expected[n - 1]) {
      o.fail("p_" + std::to_string(n) + " = " + p.to_string() + ", expected " +
             expected[n - 1].to_string());
    }
  }
  if (o.passed) o.detail << "p_5 = " << range_charpoly(5);
  return o;
}

// 2. p_5(sqrt 42) = 20448 - 3168 sqrt 42.
Outcome surd_identity() {
  Outcome o;
  const auto v = poly_eval_surd(range_charpoly(5), BigInt(42));
  o.detail << "p_5(sqrt42) = " << v.rational_part << " + (" << v.surd_part << ")sqrt42";
  if (v.rational_part != 20448 || v.surd_part != -3168) o.passed = false;
  return o;
}

// 3. multiplicity of -1 in p_1 .. p_6.
Outcome multiplicities() {
  Outcome o;
  const std::vector<std::size_t> expected = {0, 0, 1, 2, 1, 0};
  std::vector<std::size_t> got;
  for (long n = 1; n <= 6; ++n) got.push_back(root_multiplicity(range_charpoly(n), BigInt(-1)));
  for (std::size_t i = 0; i < got.size(); ++i) o.detail << (i ? "," : "") << got[i];
  if (got != expected) o.passed = false;
  return o;
}

// 4. floating spectra against the published four-decimal values.
Outcome numeric_spectra() {
  Outcome o;
  constexpr double kTol = 5e-5;
  struct Case {
    SetSpec set;
    std::vector<double> values;
  };
  const std::vector<Case> cases = {
      {SetSpec::range(1, 5), {6.4798, -0.6118, -1, -3.3489, -4.5191}},
      {SetSpec::range(1, 6), {6.8501, 2.5592, -0.7419, -1.3749, -3.4396, -5.8528}},
      {SetSpec::integer({2, 3, 5}), {4.5128, -2.3027, -3.9371}},
  };
  for (const auto& c : cases) {
    const auto s = generalized_eigenvalues(to_real(build_lcm_matrix(c.set)),
                                           to_real(build_gcd_matrix(c.set)));
    double worst = 0.0;
    for (std::size_t i = 0; i < c.values.size(); ++i)
      worst = std::max(worst, std::abs(s[i] - c.values[i]));
    o.detail << c.set.to_string() << ": " << join(s.values(), 4) << " (max err "
             << std::scientific << std::setprecision(1) << worst << std::defaultfloat << ")";
    if (s.order() != c.values.size() || worst > kTol) {
      o.passed = false;
      o.detail << " EXCEEDS 5e-5";
    }
    o.detail << "; ";
  }
  return o;
}

SetSpec random_real_set(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> value(1.0, 1000.0);
  std::set<double> seen;
  std::vector<double> v;
  while (v.size() < n) {
    const double x = value(rng);
    if (seen.insert(x).second) v.push_back(x);
  }
  return SetSpec::from_doubles(v);
}

// 5. MAX/MIN numeric spectrum against the closed form.
Outcome maxmin_oracle(std::mt19937_64& rng) {
  Outcome o;
  std::uniform_int_distribution<std::size_t> order(2, 50);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = order(rng);
    const auto s = random_real_set(rng, n);
    const auto numeric =
        generalized_eigenvalues(to_real(build_max_matrix(s)), to_real(build_min_matrix(s)));
    const auto closed = maxmin_closed_form(s);
    for (std::size_t i = 0; i < n; ++i) {
      const double rel = std::abs(numeric[i] - closed[i]) / std::max(1.0, std::abs(closed[i]));
      worst = std::max(worst, rel);
    }
    const auto cluster = cluster_count(numeric, -1.0, 1e-6);
    if (cluster.count != n - 2) {
      o.fail("trial " + std::to_string(trial) + " (n=" + std::to_string(n) + "): -1 cluster has " +
             std::to_string(cluster.count) + " members");
    }
  }
  if (worst > 1e-6) o.fail("max relative deviation " + std::to_string(worst));
  if (o.passed) o.detail << "100 sets, max relative deviation " << std::scientific << worst;
  return o;
}

// 6. interlacing on (L, G), on random pencils, and positive-count growth.
Outcome interlacing(std::mt19937_64& rng) {
  Outcome o;
  const auto t = SetSpec::range(1, 12);
  const RealMatrix l = to_real(build_lcm_matrix(t));
  const RealMatrix g = to_real(build_gcd_matrix(t));
  for (Eigen::Index n = 2; n <= 12; ++n) {
    const auto r = check_pencil_interlacing(l.topLeftCorner(n, n), g.topLeftCorner(n, n), 1e-6);
    if (!r.holds) o.fail("(L,G) interlacing fails between orders " + std::to_string(n) + " and " +
                         std::to_string(n - 1));
  }
  std::uniform_int_distribution<int> order(2, 10);
  std::uniform_real_distribution<double> entry(-5.0, 5.0), unit(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = order(rng);
    RealMatrix a(n, n), r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = entry(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = unit(rng);
    const RealMatrix b = r.transpose() * r + RealMatrix::Identity(n, n);
    if (!check_pencil_interlacing(a, b, 1e-8).holds)
      o.fail("random pencil " + std::to_string(trial) + " violates interlacing");
  }
  const auto counts = positive_count_monotone(64);
  if (!counts.monotone) o.fail("positive-eigenvalue count decreases below n = 64");
  if (o.passed) {
    o.detail << "orders 2..12 and 100 random pencils interlace; positive count at n=64 is "
             << counts.counts.back().positive;
  }
  return o;
}

// 7. certified scan.
Outcome certified_scan(std::size_t jobs) {
  Outcome o;
  ScanOptions opt;
  opt.max_n = 200;
  opt.certify = true;
  opt.jobs = jobs;
  const auto records = scan_minus_one(opt);
  std::size_t members = 0;
  for (const auto& r : records) {
    const bool expected = r.n == 3 || (r.n > 3 && binary_begins_10(r.n));
    if (r.exact_verdict.verdict == Verdict::ProbablyZero)
      o.fail("n=" + std::to_string(r.n) + " not certified");
    if (r.has_minus_one != expected) o.fail("n=" + std::to_string(r.n) + " membership wrong");
    if (r.in_conjecture_range && !r.agrees) o.fail("n=" + std::to_string(r.n) + " disagrees");
    members += r.has_minus_one;
  }
  if (o.passed) o.detail << "n=1..200 certified, " << members << " members including n=3";
  return o;
}

// 8. probabilistic scan against the closed-form sequence.
Outcome probabilistic_scan(std::size_t limit, std::size_t jobs) {
  Outcome o;
  ScanOptions opt;
  opt.max_n = limit;
  opt.num_primes = 16;
  opt.jobs = jobs;
  std::vector<std::size_t> got;
  for (const auto& r : scan_minus_one(opt))
    if (r.n >= 4 && r.has_minus_one) got.push_back(r.n);
  std::vector<std::size_t> expected;
  for (std::uint64_t i = 1;; ++i) {
    const auto a = a004754_term(i);
    if (a > limit) break;
    if (a >= 4) expected.push_back(a);
  }
  if (got != expected) {
    o.fail("membership list differs from a004754 terms (" + std::to_string(got.size()) + " vs " +
           std::to_string(expected.size()) + " members)");
  } else {
    o.detail << "n=1.." << limit << ": " << got.size() << " members, all a004754 terms >= 4";
  }
  return o;
}

// True iff both +sqrt(m) and -sqrt(m) are exact roots of p.
bool has_sqrt_roots(const IntPolynomial& p, const BigInt& m) {
  const BigInt r = sqrt(m);
  if (r * r == m) return poly_eval_integer(p, r) == 0 && poly_eval_integer(p, BigInt(-r)) == 0;
  // p(-sqrt m) is the conjugate of p(sqrt m), so one surd evaluation decides both.
  return poly_eval_surd(p, m).is_zero();
}

bool spectrum_matches(const Spectrum& s, const std::vector<double>& expected) {
  if (s.order() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (std::abs(s[i] - expected[i]) > 1e-12 * std::max(1.0, std::abs(expected[i]))) return false;
  return true;
}

// 9. small LCM-GCD closed forms, asserted in the stated factored forms. The
// {1,u,v} polynomial actually expands to -(u-1)(v-1)(x+1)(x^2-uv): its x^3
// coefficient is u + v - uv - 1. The detail line reports which sign matched.
Outcome small_closed_forms(std::mt19937_64& rng) {
  Outcome o;
  std::uniform_int_distribution<long> value(1, 50);
  int pairs = 0, triples = 0, negated_triples = 0;
  while (pairs < 50) {
    const long u = value(rng), v = value(rng);
    if (u >= v || std::gcd(u, v) != 1) continue;
    ++pairs;
    const auto t = SetSpec::integer({u, v});
    const BigInt uv = BigInt(u) * v;
    const auto p = lcm_gcd_charpoly(t);
    const auto expected = IntPolynomial::constant(uv - 1) * IntPolynomial({BigInt(-uv), 0, 1});
    if (p != expected) o.fail(t.to_string() + ": charpoly " + p.to_string());
    const double r = std::sqrt(uv.convert_to<double>());
    if (!spectrum_matches(lcmgcd_small_closed_form(t), {r, -r}) || !has_sqrt_roots(p, uv))
      o.fail(t.to_string() + ": closed form is not the root set");
  }
  std::string first_triple;
  while (triples < 50) {
    const long u = value(rng), v = value(rng);
    if (u < 2 || u >= v || std::gcd(u, v) != 1) continue;
    ++triples;
    const auto t = SetSpec::integer({1, u, v});
    const BigInt uv = BigInt(u) * v;
    const auto p = lcm_gcd_charpoly(t);
    const auto stated = IntPolynomial::constant(BigInt(u - 1) * (v - 1)) * IntPolynomial{1, 1} *
                        IntPolynomial({BigInt(-uv), 0, 1});
    if (p != stated) {
      if (p == stated * BigInt(-1)) ++negated_triples;
      if (first_triple.empty())
        first_triple = t.to_string() + " gives " + p.to_string() + ", stated form " + stated.to_string();
    }
    const double r = std::sqrt(uv.convert_to<double>());
    if (!spectrum_matches(lcmgcd_small_closed_form(t), {r, -1.0, -r}) || !has_sqrt_roots(p, uv) ||
        poly_eval_integer(p, BigInt(-1)) != 0)
      o.fail(t.to_string() + ": closed form is not the root set");
  }
  if (!first_triple.empty()) {
    o.fail(std::to_string(negated_triples) + "/50 triples equal the NEGATED stated form "
           "-(u-1)(v-1)(x+1)(x^2-uv), consistent with p_3 = -2(x+1)(x^2-6); e.g. " + first_triple);
  }
  if (o.passed) o.detail << "50 pairs (uv-1)(x^2-uv), 50 triples (u-1)(v-1)(x+1)(x^2-uv)";
  return o;
}

SetSpec random_int_set(std::mt19937_64& rng, std::size_t n, long hi) {
  std::uniform_int_distribution<long> value(1, hi);
  std::set<long> seen;
  std::vector<long> v;
  while (v.size() < n) {
    const long x = value(rng);
    if (seen.insert(x).second) v.push_back(x);
  }
  return SetSpec::integer(v);
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

// 10. simultaneous permutation leaves det(L - lambda G) unchanged.
Outcome permutation_invariance(std::mt19937_64& rng) {
  Outcome o;
  std::uniform_int_distribution<std::size_t> order(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_int_set(rng, order(rng), 30);
    const auto sigma = random_permutation(rng, t.size());
    const auto l = build_lcm_matrix(t);
    const auto g = build_gcd_matrix(t);
    if (pencil_charpoly(l, g) != pencil_charpoly(permute_conjugate(l, sigma), permute_conjugate(g, sigma)))
      o.fail("set " + t.to_string() + " changes under permutation");
  }
  if (o.passed) o.detail << "50 (set, permutation) pairs";
  return o;
}

BigIntMatrix random_symmetric(std::mt19937_64& rng, Eigen::Index n, long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  BigIntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = BigInt(entry(rng));
  return m;
}

// 11. exact property suites.
Outcome property_suites(std::mt19937_64& rng) {
  Outcome o;
  std::uniform_int_distribution<int> order6(1, 6), order5(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_symmetric(rng, order6(rng), -9, 9);
    const BigInt d = bareiss_determinant(m);
    if (d != reference::cofactor_determinant(m)) o.fail("Bareiss disagrees with cofactor expansion");
    if (modular_zero_test(m).is_zero() != (d == 0)) o.fail("modular zero test inconsistent");
  }
  BigInt smith = 1;
  for (long n = 1; n <= 8; ++n) {
    smith *= reference::euler_totient(std::uint64_t(n));
    const auto g = build_gcd_matrix(SetSpec::range(1, n));
    if (bareiss_determinant(g) != smith || reference::cofactor_determinant(g) != smith)
      o.fail("Smith determinant fails at n=" + std::to_string(n));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = order5(rng);
    const auto a = random_symmetric(rng, n, -9, 9);
    const auto b = random_symmetric(rng, n, -9, 9);
    const auto p = pencil_charpoly(a, b);
    const BigInt sign = (n % 2) ? -1 : 1;
    if (p.coefficient(0) != bareiss_determinant(a) ||
        p.coefficient(std::size_t(n)) != sign * bareiss_determinant(b) || p.degree() > n)
      o.fail("charpoly boundary coefficients wrong");
  }
  std::uniform_int_distribution<std::size_t> order8(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_int_set(rng, order8(rng), 100);
    const auto l = build_lcm_matrix(t);
    const auto g = build_gcd_matrix(t);
    const auto e = t.integers();
    for (Eigen::Index i = 0; i < l.rows(); ++i)
      for (Eigen::Index j = 0; j < l.cols(); ++j)
        if (l(i, j) * g(i, j) != e[std::size_t(i)] * e[std::size_t(j)])
          o.fail("lcm*gcd != product for " + t.to_string());
  }
  if (o.passed) o.detail << "200 Bareiss/cofactor, Smith n<=8, 50 boundary, 50 lcm*gcd";
  return o;
}

template <typename Fn>
CriterionResult timed(int id, std::string title, Fn fn) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = fn();
    r.passed = o.passed;
    r.detail = o.detail.str();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options, const std::function<void(const CriterionResult&)>& on_result) {
  std::mt19937_64 rng(options.seed);
  std::vector<CriterionResult> out;
  auto record = [&](CriterionResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  record(timed(1, "exact polynomials p1..p5", exact_polynomials));
  record(timed(2, "surd identity p5(sqrt42)", surd_identity));
  record(timed(3, "multiplicity of -1, n=1..6", multiplicities));
  record(timed(4, "numeric spectra n=5, n=6, {2,3,5}", numeric_spectra));
  record(timed(5, "MAX/MIN closed-form oracle", [&] { return maxmin_oracle(rng); }));
  record(timed(6, "interlacing and positive-count growth", [&] { return interlacing(rng); }));
  record(timed(7, "certified scan n<=200", [&] { return certified_scan(options.jobs); }));
  record(timed(8, "probabilistic scan n<=" + std::to_string(options.scan_limit),
               [&] { return probabilistic_scan(options.scan_limit, options.jobs); }));
  record(timed(9, "small LCM-GCD closed forms", [&] { return small_closed_forms(rng); }));
  record(timed(10, "permutation invariance", [&] { return permutation_invariance(rng); }));
  record(timed(11, "exact property suites", [&] { return property_suites(rng); }));
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.title << " ("
     << std::fixed << std::setprecision(2) << r.seconds << "s)";
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

}  // namespace gpencil

#include <gpencil/pencil_solve.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace gpencil {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::stable_sort(values_.begin(), values_.end(), std::greater<>());
}

namespace {

void require_square(const RealMatrix& m, const char* name) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected a square matrix");
  }
}

void require_symmetric(const RealMatrix& m, double tolerance, const char* name) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tolerance * scale) {
    throw InvalidParameter(std::string(name) + " is not symmetric");
  }
}

}  // namespace

RealMatrix cholesky_factor(const RealMatrix& b, double pd_tolerance) {
  require_square(b, "B");
  const Eigen::Index n = b.rows();
  if (n == 0) return RealMatrix(0, 0);
  require_symmetric(b, pd_tolerance, "B");
  const double max_diag = b.diagonal().maxCoeff();
  const double threshold = pd_tolerance * max_diag;
  if (max_diag <= 0.0) throw NotPositiveDefinite("B has no positive diagonal entry");

  RealMatrix f = RealMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double d = b(j, j) - f.row(j).head(j).squaredNorm();
    if (!(d > threshold)) {
      throw NotPositiveDefinite("B is not positive definite: pivot " + std::to_string(j + 1) +
                                " is " + std::to_string(d));
    }
    f(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      f(i, j) = (b(i, j) - f.row(i).head(j).dot(f.row(j).head(j))) / f(j, j);
    }
  }
  return f;
}

RealMatrix reduce_to_standard(const RealMatrix& a, const RealMatrix& b, double pd_tolerance) {
  require_square(a, "A");
  require_square(b, "B");
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("A has order " + std::to_string(a.rows()) + " but B has order " +
                            std::to_string(b.rows()));
  }
  require_symmetric(a, 1e-12, "A");
  const RealMatrix f = cholesky_factor(b, pd_tolerance);
  const auto lower = f.triangularView<Eigen::Lower>();
  const RealMatrix y = lower.solve(a);                // F^{-1} A
  RealMatrix c = lower.solve(y.transpose());          // F^{-1} A^T F^{-T}
  return (c + c.transpose()) / 2.0;
}

JacobiResult jacobi_eigenvalues(RealMatrix c, std::size_t max_sweeps) {
  require_square(c, "C");
  const Eigen::Index n = c.rows();
  const double tol = 1e-12 * c.norm();
  auto off_norm = [&c, n] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) s += c(i, j) * c(i, j);
    return std::sqrt(s);
  };

  JacobiResult out;
  while (off_norm() > tol) {
    if (out.sweeps == max_sweeps) {
      throw NoConvergence("Jacobi iteration did not converge in " + std::to_string(max_sweeps) +
                          " sweeps");
    }
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = c(p, q);
        if (apq == 0.0) continue;
        const double tau = (c(q, q) - c(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = c(k, p);
          const double akq = c(k, q);
          c(k, p) = c(p, k) = cs * akp - sn * akq;
          c(k, q) = c(q, k) = sn * akp + cs * akq;
        }
        c(p, p) -= t * apq;
        c(q, q) += t * apq;
        c(p, q) = c(q, p) = 0.0;
      }
    }
  }
  out.eigenvalues.resize(std::size_t(n));
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues[std::size_t(i)] = c(i, i);
  return out;
}

Spectrum generalized_eigenvalues(const RealMatrix& a, const RealMatrix& b, double pd_tolerance) {
  return Spectrum(jacobi_eigenvalues(reduce_to_standard(a, b, pd_tolerance)).eigenvalues);
}

Spectrum maxmin_closed_form(const SetSpec& s) {
  const std::size_t n = s.size();
  if (n == 1) return Spectrum({1.0});
  const double r = std::sqrt(Rational(s.max() / s.min()).convert_to<double>());
  std::vector<double> v(n, -1.0);
  v.front() = r;
  v.back() = -r;
  return Spectrum(std::move(v));
}

Spectrum lcmgcd_small_closed_form(const SetSpec& t) {
  const auto e = t.integers();
  if (e.size() == 1) return Spectrum({1.0});
  if (e.size() == 2) {
    const BigInt d = gcd(e[0], e[1]);
    const double r = std::sqrt(BigInt((e[0] / d) * (e[1] / d)).convert_to<double>());
    return Spectrum({r, -r});
  }
  if (e.size() == 3) {
    const auto one = std::find(e.begin(), e.end(), BigInt(1));
    if (one != e.end()) {
      std::vector<BigInt> rest;
      for (auto it = e.begin(); it != e.end(); ++it)
        if (it != one) rest.push_back(*it);
      if (gcd(rest[0], rest[1]) == 1) {
        const double r = std::sqrt(BigInt(rest[0] * rest[1]).convert_to<double>());
        return Spectrum({r, -1.0, -r});
      }
    }
  }
  throw UnsupportedSet("no closed form for " + t.to_string() +
                       "; only {u,v} and {1,u,v} with gcd(u,v)=1 are covered");
}

ClusterReport cluster_count(const Spectrum& spec, double target, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidParameter("cluster tolerance must be positive");
  ClusterReport r{target, tolerance, 0, {}};
  for (std::size_t i = 0; i < spec.order(); ++i) {
    if (std::abs(spec[i] - target) <= tolerance) r.members.push_back(i);
  }
  r.count = r.members.size();
  return r;
}

}  // namespace gpencil

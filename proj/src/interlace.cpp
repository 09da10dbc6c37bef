#include <gpencil/interlace.hpp>

#include <algorithm>

namespace gpencil {

InterlaceReport check_interlacing(const Spectrum& parent, const Spectrum& child, double slack) {
  if (child.order() + 1 != parent.order()) {
    throw DimensionMismatch("child spectrum has " + std::to_string(child.order()) +
                            " values, parent has " + std::to_string(parent.order()) +
                            "; expected exactly one fewer");
  }
  if (slack < 0.0) throw InvalidParameter("interlacing slack must be non-negative");

  InterlaceReport r;
  r.order = parent.order();
  r.parent = parent;
  r.child = child;
  r.slack = slack;
  for (std::size_t k = 0; k < child.order(); ++k) {
    const double above = child[k] - parent[k];
    if (above > slack) r.violations.push_back({k + 1, above});
    const double below = parent[k + 1] - child[k];
    if (below > slack) r.violations.push_back({k + 1, below});
  }
  r.holds = r.violations.empty();
  return r;
}

InterlaceReport check_pencil_interlacing(const RealMatrix& a, const RealMatrix& b, double slack) {
  const Eigen::Index n = a.rows();
  if (n < 2) throw InvalidParameter("interlacing needs a pencil of order >= 2");
  const Spectrum parent = generalized_eigenvalues(a, b);
  const Spectrum child = generalized_eigenvalues(leading_principal_submatrix(a, n - 1),
                                                 leading_principal_submatrix(b, n - 1));
  return check_interlacing(parent, child, slack);
}

PositiveCountReport positive_count_monotone(std::size_t max_order) {
  if (max_order < 2) throw InvalidParameter("positive_count_monotone needs max order >= 2");
  constexpr double kSlack = 1e-6;
  const auto t = SetSpec::range(1, long(max_order));
  const RealMatrix l = to_real(build_lcm_matrix(t));
  const RealMatrix g = to_real(build_gcd_matrix(t));

  PositiveCountReport r;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto k = Eigen::Index(n);
    const Spectrum s = generalized_eigenvalues(l.topLeftCorner(k, k), g.topLeftCorner(k, k));
    const auto pos = std::size_t(
        std::count_if(s.values().begin(), s.values().end(), [](double v) { return v > kSlack; }));
    if (!r.counts.empty() && pos < r.counts.back().positive) r.monotone = false;
    r.counts.push_back({n, pos});
  }
  return r;
}

}  // namespace gpencil

#include "lieflag/finsler.hpp"

#include "lieflag/jet2.hpp"
#include "lieflag/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lieflag {

const char* kind_name(MetricKind kind) {
  return kind == MetricKind::randers ? "randers" : "matsumoto";
}

double admissibility_bound(MetricKind kind) {
  return kind == MetricKind::randers ? 1.0 : 0.5;
}

AdmissibilityVerdict admissibility_check(const InnerProduct& g, const Vec3& xt, MetricKind kind) {
  AdmissibilityVerdict v;
  v.deformation_norm = g.norm(xt);
  v.bound = admissibility_bound(kind);
  v.admissible = v.deformation_norm < v.bound;  // strict, no tolerance slack
  return v;
}

double finsler_norm(const FinslerMetric& f, const Vec3& y) {
  const double alpha = f.g.norm(y);
  const double beta = f.g.dot(f.xt, y);
  if (f.kind == MetricKind::randers) return alpha + beta;
  const double den = alpha - beta;
  if (!(den > 0.0))
    throw std::domain_error("finsler_norm: matsumoto denominator alpha - beta <= 0");
  return alpha * alpha / den;
}

BerwaldVerdict berwald_check(const Connection& conn, const FinslerMetric& f, double tol) {
  BerwaldVerdict v;
  v.residual = parallel_residual(conn, f.xt);
  v.admissibility = admissibility_check(f.g, f.xt, f.kind);
  v.is_berwald = v.residual < tol && v.admissibility.admissible;
  return v;
}

namespace {

// F^2 evaluated on the jet line y + s u + t v
Jet2 norm_squared_jet(const FinslerMetric& f, const Vec3& y, const Vec3& u, const Vec3& v) {
  const Mat3& g = f.g.matrix();
  Jet2 q(0.0), beta(0.0);
  for (int i = 0; i < 3; ++i) {
    const Jet2 wi(y[i], u[i], v[i], 0.0);
    Jet2 gw(0.0);  // (G w)_i on the jet line
    for (int j = 0; j < 3; ++j) gw = gw + g(i, j) * Jet2(y[j], u[j], v[j], 0.0);
    q = q + wi * gw;
    beta = beta + f.g.dot(f.xt, Vec3::Unit(i)) * wi;
  }
  if (!(q.f > 0.0)) throw std::invalid_argument("fundamental_tensor: base direction must be nonzero");
  const Jet2 alpha = sqrt(q);
  if (f.kind == MetricKind::randers) return square(alpha + beta);
  const Jet2 den = alpha - beta;
  if (!(den.f > 0.0))
    throw std::domain_error("fundamental_tensor: matsumoto denominator alpha - beta <= 0");
  return square(q / den);  // (alpha^2 / (alpha - beta))^2
}

}  // namespace

double fundamental_tensor(const FinslerMetric& f, const Vec3& y, const Vec3& u, const Vec3& v) {
  return 0.5 * norm_squared_jet(f, y, u, v).fst;
}

Mat3 fundamental_matrix(const FinslerMetric& f, const Vec3& y) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const double gij = fundamental_tensor(f, y, Vec3::Unit(i), Vec3::Unit(j));
      m(i, j) = gij;
      m(j, i) = gij;
    }
  return m;
}

namespace {

bool leading_minors(const Mat3& m, double& min_minor) {
  const double m1 = m(0, 0);
  const double m2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double m3 = m.determinant();
  min_minor = std::min({m1, m2, m3});
  return min_minor > 0.0;
}

}  // namespace

MinkowskiReport minkowski_check(const FinslerMetric& f, int samples, std::uint64_t seed) {
  MinkowskiReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.min_norm = std::numeric_limits<double>::infinity();
  rep.max_homogeneity_rel = 0.0;
  rep.min_leading_minor = std::numeric_limits<double>::infinity();
  rep.positivity_ok = rep.homogeneity_ok = rep.hessian_pd_ok = true;

  std::vector<Vec3> probes;
  for (int i = 0; i < 3; ++i) {
    probes.push_back(Vec3::Unit(i));
    probes.push_back(-Vec3::Unit(i));
  }
  const double xt_alpha = f.g.norm(f.xt);
  if (xt_alpha > 0.0) {
    // the direction opposite an oversized deformation is the canonical
    // positivity violation, probe it explicitly
    probes.push_back(-f.xt / xt_alpha);
    probes.push_back(f.xt / xt_alpha);
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) probes.push_back(rng.unit_vector());

  static const double lambdas[] = {0.5, 2.0, 7.3};
  for (const Vec3& y : probes) {
    double fy = 0.0;
    try {
      fy = finsler_norm(f, y);
    } catch (const std::domain_error&) {
      // outside the Matsumoto domain: not a Finsler metric along y
      rep.positivity_ok = false;
      rep.min_norm = std::min(rep.min_norm, 0.0);
      if (!rep.negative_direction) rep.negative_direction = y;
      continue;
    }
    if (fy < rep.min_norm) {
      rep.min_norm = fy;
      rep.worst_norm_direction = y;
    }
    if (!(fy > 0.0)) {
      rep.positivity_ok = false;
      if (!rep.negative_direction) rep.negative_direction = y;
      continue;
    }
    for (double lam : lambdas) {
      const double fl = finsler_norm(f, lam * y);
      const double rel = std::abs(fl - lam * fy) / std::abs(fl);
      rep.max_homogeneity_rel = std::max(rep.max_homogeneity_rel, rel);
      if (rel >= 1e-12) rep.homogeneity_ok = false;
    }
    double min_minor = 0.0;
    bool pd = false;
    try {
      pd = leading_minors(fundamental_matrix(f, y), min_minor);
    } catch (const std::domain_error&) {
      pd = false;
      min_minor = 0.0;
    }
    if (min_minor < rep.min_leading_minor) {
      rep.min_leading_minor = min_minor;
      rep.worst_hessian_direction = y;
    }
    if (!pd) rep.hessian_pd_ok = false;
  }
  rep.pass = rep.positivity_ok && rep.homogeneity_ok && rep.hessian_pd_ok;
  return rep;
}

}  // namespace lieflag

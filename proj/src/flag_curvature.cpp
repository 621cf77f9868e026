#include "lieflag/flag_curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace lieflag {

double flag_curvature_general(const FinslerMetric& f, const CurvatureTensor& r, const Flag& flag) {
  const Vec3& y = flag.pole;
  const Vec3& u = flag.transverse;
  const double gyy = fundamental_tensor(f, y, y, y);
  const double guu = fundamental_tensor(f, y, u, u);
  const double gyu = fundamental_tensor(f, y, y, u);
  const double den = gyy * guu - gyu * gyu;
  if (!(den > 1e-12 * std::max(gyy * guu, 1e-300)))
    throw std::invalid_argument("flag_curvature_general: degenerate flag");
  const Vec3 ruyy = r.apply(u, y, y);
  return fundamental_tensor(f, y, ruyy, u) / den;
}

InnerProduct case_iii_metric(double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("case_iii_metric: nu must be positive");
  Mat3 m;
  m << 1.0, 0.5, 0.0, 0.5, 1.0, 0.0, 0.0, 0.0, nu;
  return InnerProduct(m);
}

Vec3 case_iii_deformation(double p) { return Vec3(-2.0 * p, p, 0.0); }

CurvatureTensor curvature_case_iii(double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("curvature_case_iii: nu must be positive");
  CurvatureTensor r;
  const Vec3 y = Vec3::Unit(1), z = Vec3::Unit(2);
  auto set_pair = [&r](int i, int j, int k, const Vec3& v) {
    r.set_frame(i, j, k, v);
    r.set_frame(j, i, k, -v);
  };
  set_pair(0, 2, 0, z / nu);        // R(x,z)x
  set_pair(0, 2, 1, 2.0 * z / nu);  // R(x,z)y
  set_pair(0, 2, 2, -2.0 * y);      // R(x,z)z
  set_pair(1, 2, 0, 2.0 * z / nu);  // R(y,z)x
  set_pair(1, 2, 1, 4.0 * z / nu);  // R(y,z)y
  set_pair(1, 2, 2, -4.0 * y);      // R(y,z)z
  return r;
}

Vec3 rvuu_case_iii(double nu, const Vec3& u, const Vec3& v) {
  if (!(nu > 0.0)) throw std::invalid_argument("rvuu_case_iii: nu must be positive");
  const double a = u[0], b = u[1], c = u[2];
  const double at = v[0], bt = v[1], ct = v[2];
  const double t = at * c - ct * a + 2.0 * (bt * c - ct * b);
  const double delta = (a + 2.0 * b) * t / nu;
  const double sigma = -2.0 * c * t;
  return Vec3(0.0, sigma, delta);
}

namespace {

void require_orthonormal(const CaseIIIFlagInput& in) {
  const InnerProduct g = case_iii_metric(in.nu);
  const double r = std::max({std::abs(g.dot(in.u, in.u) - 1.0), std::abs(g.dot(in.v, in.v) - 1.0),
                             std::abs(g.dot(in.u, in.v))});
  if (r > 1e-9)
    throw std::invalid_argument("case-iii closed form: {U,V} is not g-orthonormal");
}

double bracket_factor(const CaseIIIFlagInput& in) {
  const double a = in.u[0], b = in.u[1], c = in.u[2];
  const double at = in.v[0], bt = in.v[1], ct = in.v[2];
  return c * (at + 2.0 * bt) - ct * (a + 2.0 * b);
}

}  // namespace

double randers_case_iii_closed_form(const CaseIIIFlagInput& in) {
  if (!(std::sqrt(3.0) * std::abs(in.p) < 1.0))
    throw std::invalid_argument("randers_case_iii_closed_form: sqrt(3)|p| < 1 required");
  require_orthonormal(in);
  const double a = in.u[0];
  const double q = bracket_factor(in) / (3.0 * in.p * a - 2.0);
  return -4.0 * q * q;
}

double matsumoto_case_iii_tabulated_denominator(double a, double atilde, double p) {
  return 4.0 + 18.0 * a * a * p * p + 18.0 * a * p - 27.0 * atilde * atilde * p * p;
}

double matsumoto_case_iii_definitional_denominator(double a, double atilde, double p) {
  return 4.0 + 18.0 * a * a * p * p + 18.0 * a * p + 18.0 * atilde * atilde * p * p;
}

double matsumoto_case_iii_closed_form(const CaseIIIFlagInput& in) {
  if (!(std::sqrt(3.0) * std::abs(in.p) < 0.5))
    throw std::invalid_argument("matsumoto_case_iii_closed_form: sqrt(3)|p| < 1/2 required");
  require_orthonormal(in);
  const double a = in.u[0], ap = a * in.p;
  const double t = -bracket_factor(in);  // c~a - a~c + 2(c~b - b~c)
  const double den = 2.0 * matsumoto_case_iii_tabulated_denominator(a, in.v[0], in.p);
  if (std::abs(den) < 1e-12)
    throw std::domain_error("matsumoto_case_iii_closed_form: denominator below 1e-12");
  const double two3ap = 2.0 + 3.0 * ap;
  return -(two3ap * two3ap * two3ap) * (1.0 + 3.0 * ap) * t * t / den;
}

}  // namespace lieflag

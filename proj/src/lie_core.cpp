#include "lieflag/lie_core.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace lieflag {

bool is_finite(const Vec3& v) { return v.allFinite(); }
bool is_finite(const Mat3& m) { return m.allFinite(); }

LieAlgebra::LieAlgebra() {
  table_[0] = Vec3::Zero();
  table_[1] = Vec3::Zero();
  table_[2] = Vec3::Zero();
}

LieAlgebra::LieAlgebra(const Vec3& xy, const Vec3& xz, const Vec3& yz) : table_{xy, xz, yz} {
  if (!is_finite(xy) || !is_finite(xz) || !is_finite(yz))
    throw std::invalid_argument("LieAlgebra: non-finite structure constants");
}

namespace {
// pair index for i<j: (0,1)->0, (0,2)->1, (1,2)->2
inline int pair_index(int i, int j) { return i + j - 1; }
}  // namespace

Vec3 LieAlgebra::bracket(int i, int j) const {
  if (i == j) return Vec3::Zero();
  if (i < j) return table_[static_cast<size_t>(pair_index(i, j))];
  return -table_[static_cast<size_t>(pair_index(j, i))];
}

Vec3 LieAlgebra::bracket(const Vec3& a, const Vec3& b) const {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double w = a[i] * b[j];
      if (w != 0.0) out += w * bracket(i, j);
    }
  return out;
}

double LieAlgebra::jacobi_residual() const {
  // with a repeated argument the cyclic sum cancels identically, so (x,y,z)
  // is the only triple that carries information
  Vec3 ei = Vec3::Unit(0), ej = Vec3::Unit(1), ek = Vec3::Unit(2);
  Vec3 s = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) + bracket(bracket(ek, ei), ej);
  return s.cwiseAbs().maxCoeff();
}

LieAlgebraValidation validate_lie_algebra(const LieAlgebra& alg, double tol) {
  LieAlgebraValidation rep;
  rep.jacobi_residual = alg.jacobi_residual();
  rep.tol = tol;
  rep.pass = rep.jacobi_residual <= tol;
  return rep;
}

InnerProduct::InnerProduct(const Mat3& m) : m_(m) {
  if (!is_finite(m)) throw std::invalid_argument("InnerProduct: non-finite entries");
  if (m != m.transpose()) throw std::invalid_argument("InnerProduct: matrix must be exactly symmetric");
}

InnerProduct InnerProduct::identity() { return InnerProduct(Mat3::Identity()); }

double InnerProduct::norm(const Vec3& a) const {
  return std::sqrt(std::max(0.0, dot(a, a)));
}

bool InnerProduct::positive_definite() const {
  const double m1 = m_(0, 0);
  const double m2 = m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0);
  const double m3 = m_.determinant();
  return m1 > 0.0 && m2 > 0.0 && m3 > 0.0;
}

Connection::Connection() {
  d_[0] = Mat3::Zero();
  d_[1] = Mat3::Zero();
  d_[2] = Mat3::Zero();
}

Connection::Connection(const std::array<Mat3, 3>& frame_derivatives) : d_(frame_derivatives) {}

double Connection::max_abs() const {
  double m = 0.0;
  for (const auto& d : d_) m = std::max(m, d.cwiseAbs().maxCoeff());
  return m;
}

Connection koszul_connection(const LieAlgebra& alg, const InnerProduct& g) {
  if (!g.positive_definite())
    throw std::invalid_argument("koszul_connection: metric is not positive definite");
  const Mat3& G = g.matrix();
  Eigen::LLT<Mat3> llt(G);
  std::array<Mat3, 3> d;
  for (int i = 0; i < 3; ++i) {
    d[static_cast<size_t>(i)] = Mat3::Zero();
    for (int j = 0; j < 3; ++j) {
      // right-hand side over k, left-invariance kills the X<Y,Z> terms
      Vec3 rhs;
      for (int k = 0; k < 3; ++k) {
        const Vec3 ek = Vec3::Unit(k);
        rhs[k] = 0.5 * (g.dot(alg.bracket(i, j), ek) - g.dot(alg.bracket(j, k), Vec3::Unit(i)) +
                        g.dot(alg.bracket(k, i), Vec3::Unit(j)));
      }
      d[static_cast<size_t>(i)].col(j) = llt.solve(rhs);
    }
  }
  return Connection(d);
}

Vec3 covariant_derivative(const Connection& conn, const Vec3& x, const Vec3& y) {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i) out += x[i] * (conn.frame_derivative(i) * y);
  return out;
}

double torsion_residual(const Connection& conn, const LieAlgebra& alg) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Vec3 d = conn.entry(i, j) - conn.entry(j, i) - alg.bracket(i, j);
      r = std::max(r, d.cwiseAbs().maxCoeff());
    }
  return r;
}

double compatibility_residual(const Connection& conn, const InnerProduct& g) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double v =
            g.dot(conn.entry(i, j), Vec3::Unit(k)) + g.dot(Vec3::Unit(j), conn.entry(i, k));
        r = std::max(r, std::abs(v));
      }
  return r;
}

double parallel_residual(const Connection& conn, const Vec3& v) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r = std::max(r, (conn.frame_derivative(i) * v).norm());
  return r;
}

CurvatureTensor::CurvatureTensor() {
  for (auto& row : r_)
    for (auto& m : row) m = Mat3::Zero();
}

void CurvatureTensor::set_frame(int i, int j, int k, const Vec3& v) {
  r_[static_cast<size_t>(i)][static_cast<size_t>(j)].col(k) = v;
}

Vec3 CurvatureTensor::apply(const Vec3& a, const Vec3& b, const Vec3& w) const {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double c = a[i] * b[j];
      if (c != 0.0) out += c * (r_[static_cast<size_t>(i)][static_cast<size_t>(j)] * w);
    }
  return out;
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (const auto& row : r_)
    for (const auto& mat : row) m = std::max(m, mat.cwiseAbs().maxCoeff());
  return m;
}

double CurvatureTensor::antisymmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r = std::max(r, (frame(i, j, k) + frame(j, i, k)).cwiseAbs().maxCoeff());
  return r;
}

double CurvatureTensor::bianchi_residual() const {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Vec3 s = frame(i, j, k) + frame(j, k, i) + frame(k, i, j);
        r = std::max(r, s.cwiseAbs().maxCoeff());
      }
  return r;
}

double CurvatureTensor::pair_symmetry_residual(const InnerProduct& g) const {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const double a = g.dot(frame(i, j, k), Vec3::Unit(l));
          const double b = g.dot(frame(k, l, i), Vec3::Unit(j));
          r = std::max(r, std::abs(a - b));
        }
  return r;
}

CurvatureTensor curvature(const LieAlgebra& alg, const Connection& conn) {
  CurvatureTensor r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Vec3 term = covariant_derivative(conn, Vec3::Unit(i), conn.entry(j, k)) -
                          covariant_derivative(conn, Vec3::Unit(j), conn.entry(i, k)) -
                          covariant_derivative(conn, alg.bracket(i, j), Vec3::Unit(k));
        r.set_frame(i, j, k, term);
      }
  return r;
}

std::vector<Vec3> parallel_fields(const Connection& conn, double tol) {
  Eigen::Matrix<double, 9, 3> m;
  for (int i = 0; i < 3; ++i) m.block<3, 3>(3 * i, 0) = conn.frame_derivative(i);
  Eigen::JacobiSVD<Eigen::Matrix<double, 9, 3>> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<Vec3> basis;
  for (int k = 0; k < 3; ++k) {
    if (sv(k) <= tol * smax) basis.push_back(svd.matrixV().col(k));
  }
  return basis;
}

std::vector<Vec3> gram_schmidt(const InnerProduct& g, const std::vector<Vec3>& vs) {
  std::vector<Vec3> out;
  out.reserve(vs.size());
  for (const Vec3& v : vs) {
    Vec3 u = v;
    for (const Vec3& e : out) u -= g.dot(e, v) * e;
    const double n2 = g.dot(u, u);
    // residual fraction of the input length is the per-step Gram determinant
    if (n2 <= 1e-12 * std::max(1.0, g.dot(v, v)))
      throw std::invalid_argument("gram_schmidt: input vectors are linearly dependent");
    out.push_back(u / std::sqrt(n2));
  }
  return out;
}

double sectional_curvature(const InnerProduct& g, const CurvatureTensor& r, const Vec3& u,
                           const Vec3& v) {
  const double den = g.dot(u, u) * g.dot(v, v) - g.dot(u, v) * g.dot(u, v);
  const double scale = g.dot(u, u) * g.dot(v, v);
  if (!(den > 1e-12 * std::max(scale, 1e-300)))
    throw std::invalid_argument("sectional_curvature: degenerate plane");
  return g.dot(r.apply(v, u, u), v) / den;
}

}  // namespace lieflag

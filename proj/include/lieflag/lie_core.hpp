#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace lieflag {

// Frame order is fixed as (x, y, z); index 0 = x, 1 = y, 2 = z. All
// coordinates everywhere in this library are reported in that order.
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

bool is_finite(const Vec3& v);
bool is_finite(const Mat3& m);

/// 3-dimensional Lie algebra given by its bracket table on the fixed frame.
/// Only the pairs (x,y), (x,z), (y,z) are stored; the accessors
/// antisymmetrize, so [e_j,e_i] = -[e_i,e_j] holds by construction.
class LieAlgebra {
public:
  LieAlgebra();
  LieAlgebra(const Vec3& xy, const Vec3& xz, const Vec3& yz);

  static LieAlgebra abelian() { return LieAlgebra(); }

  /// [e_i, e_j] for frame indices.
  Vec3 bracket(int i, int j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Vec3 bracket(const Vec3& a, const Vec3& b) const;

  /// max over frame triples of |[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]|_inf
  double jacobi_residual() const;

private:
  std::array<Vec3, 3> table_;  // [x,y], [x,z], [y,z]
};

struct LieAlgebraValidation {
  double jacobi_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

LieAlgebraValidation validate_lie_algebra(const LieAlgebra& alg, double tol = 1e-9);

/// Left-invariant Riemannian metric: the constant symmetric matrix
/// g_ij = <e_i, e_j> on the frame. Symmetry is required exactly.
class InnerProduct {
public:
  explicit InnerProduct(const Mat3& m);
  static InnerProduct identity();

  const Mat3& matrix() const { return m_; }
  double dot(const Vec3& a, const Vec3& b) const { return a.dot(m_ * b); }
  double norm(const Vec3& a) const;

  /// All leading principal minors strictly positive.
  bool positive_definite() const;

private:
  Mat3 m_;
};

/// Connection coefficients Gamma^k_ij on the left-invariant frame.
/// frame_derivative(i) is the matrix D_i with (D_i)(k,j) = Gamma^k_ij, so
/// nabla_{e_i} v = D_i v for a constant-coefficient field v.
class Connection {
public:
  Connection();
  explicit Connection(const std::array<Mat3, 3>& frame_derivatives);

  const Mat3& frame_derivative(int i) const { return d_[static_cast<size_t>(i)]; }
  double gamma(int i, int j, int k) const { return d_[static_cast<size_t>(i)](k, j); }
  /// nabla_{e_i} e_j as a coordinate vector.
  Vec3 entry(int i, int j) const { return d_[static_cast<size_t>(i)].col(j); }
  double max_abs() const;

private:
  std::array<Mat3, 3> d_;
};

/// Levi-Civita connection of a left-invariant metric:
/// 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
/// Throws std::invalid_argument if g is not positive definite.
Connection koszul_connection(const LieAlgebra& alg, const InnerProduct& g);

/// Bilinear extension nabla_X Y over constant-coefficient fields.
Vec3 covariant_derivative(const Connection& conn, const Vec3& x, const Vec3& y);

/// max_k,i,j |Gamma^k_ij - Gamma^k_ji - c^k_ij|
double torsion_residual(const Connection& conn, const LieAlgebra& alg);
/// max_i,j,k |<nabla_i e_j, e_k> + <e_j, nabla_i e_k>|
double compatibility_residual(const Connection& conn, const InnerProduct& g);
/// max_i |nabla_{e_i} v|_2
double parallel_residual(const Connection& conn, const Vec3& v);

/// Curvature tensor on the frame, R(e_i,e_j)e_k = sum_l R^l_ijk e_l.
class CurvatureTensor {
public:
  CurvatureTensor();

  Vec3 frame(int i, int j, int k) const { return r_[static_cast<size_t>(i)][static_cast<size_t>(j)].col(k); }
  void set_frame(int i, int j, int k, const Vec3& v);

  /// Trilinear contraction R(a,b)w.
  Vec3 apply(const Vec3& a, const Vec3& b, const Vec3& w) const;

  double max_abs() const;
  double antisymmetry_residual() const;
  double bianchi_residual() const;
  /// |<R(ei,ej)ek, el> - <R(ek,el)ei, ej>| maximized over indices.
  double pair_symmetry_residual(const InnerProduct& g) const;

private:
  // r_[i][j] has column k = coordinates of R(e_i,e_j)e_k
  std::array<std::array<Mat3, 3>, 3> r_;
};

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z on the frame.
CurvatureTensor curvature(const LieAlgebra& alg, const Connection& conn);

/// Orthonormal basis (standard coordinate product) of {v : nabla_{e_i} v = 0}.
/// Rank decided from the singular values of the stacked 9x3 system against
/// tol * sigma_max. Empty result means only the zero field is parallel.
std::vector<Vec3> parallel_fields(const Connection& conn, double tol = 1e-9);

/// Gram-Schmidt with respect to g. Throws std::invalid_argument when the
/// input is linearly dependent (Gram determinant below tolerance).
std::vector<Vec3> gram_schmidt(const InnerProduct& g, const std::vector<Vec3>& vs);

/// <R(V,U)U, V> / (<U,U><V,V> - <U,V>^2). Throws std::invalid_argument for a
/// degenerate plane.
double sectional_curvature(const InnerProduct& g, const CurvatureTensor& r,
                           const Vec3& u, const Vec3& v);

}  // namespace lieflag

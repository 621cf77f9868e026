#pragma once

#include "lieflag/lie_core.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace lieflag {

enum class MetricKind { randers, matsumoto };

const char* kind_name(MetricKind kind);

/// Strict admissibility bound on |deformation|_alpha: 1 for Randers, 1/2 for
/// Matsumoto.
double admissibility_bound(MetricKind kind);

/// Left-invariant (alpha,beta)-metric: alpha is the norm of g, beta the
/// 1-form dual to the deformation vector xt. Randers evaluates alpha + beta,
/// Matsumoto alpha^2/(alpha - beta). The struct itself does not enforce
/// admissibility; verdict-returning checks do, so that deliberately
/// inadmissible configurations can be probed.
struct FinslerMetric {
  MetricKind kind;
  InnerProduct g;
  Vec3 xt;
};

struct AdmissibilityVerdict {
  bool admissible = false;
  double deformation_norm = 0.0;  // |xt|_alpha
  double bound = 0.0;             // 1 or 1/2
};

AdmissibilityVerdict admissibility_check(const InnerProduct& g, const Vec3& xt, MetricKind kind);

/// F(y). Positively 1-homogeneous; strictly positive for y != 0 under
/// admissibility. Throws std::domain_error when the Matsumoto denominator
/// alpha(y) - beta(y) is not positive (inadmissible deformation or y = 0).
double finsler_norm(const FinslerMetric& f, const Vec3& y);

struct BerwaldVerdict {
  bool is_berwald = false;
  double residual = 0.0;  // max_i |nabla_{e_i} xt|
  AdmissibilityVerdict admissibility;
};

/// Berwald criterion for these metric families: xt parallel for the
/// Levi-Civita connection of g, plus admissibility for the kind.
BerwaldVerdict berwald_check(const Connection& conn, const FinslerMetric& f, double tol = 1e-9);

/// Fundamental tensor g_Y(U,V) = 1/2 d2/dsdt F^2(Y+sU+tV) at s=t=0, computed
/// by exact two-parameter truncated Taylor arithmetic (see jet2.hpp), not by
/// finite differences. Throws std::invalid_argument for Y = 0 and
/// std::domain_error when Y is outside the Matsumoto domain.
double fundamental_tensor(const FinslerMetric& f, const Vec3& y, const Vec3& u, const Vec3& v);

/// The 3x3 matrix [g_Y(e_i,e_j)] on the frame.
Mat3 fundamental_matrix(const FinslerMetric& f, const Vec3& y);

struct MinkowskiReport {
  bool pass = false;
  bool positivity_ok = false;
  bool homogeneity_ok = false;
  bool hessian_pd_ok = false;
  int samples = 0;
  std::uint64_t seed = 0;
  double min_norm = 0.0;            // min F(y) over probes
  double max_homogeneity_rel = 0.0; // worst |F(ly) - l F(y)| / F(ly)
  double min_leading_minor = 0.0;   // worst leading principal minor of [g_y]
  Vec3 worst_norm_direction = Vec3::Zero();
  Vec3 worst_hessian_direction = Vec3::Zero();
  /// Certified direction with F <= 0 (or outside the Matsumoto domain),
  /// present exactly when positivity fails.
  std::optional<Vec3> negative_direction;
};

/// Samples the Finsler axioms: F > 0 on probed directions, 1-homogeneity for
/// lambda in {0.5, 2, 7.3} to 1e-12 relative, and positive definiteness of
/// the fundamental-tensor matrix (leading-minor test). Probes the frame axes
/// and +-xt/alpha(xt) deterministically before the seeded random directions,
/// so an inadmissible deformation fails with a certified direction.
MinkowskiReport minkowski_check(const FinslerMetric& f, int samples = 200,
                                std::uint64_t seed = 42);

}  // namespace lieflag

#pragma once

#include "lieflag/finsler.hpp"
#include "lieflag/lie_core.hpp"

namespace lieflag {

/// Flag plane span{pole, transverse} with flagpole `pole`.
struct Flag {
  Vec3 pole;
  Vec3 transverse;
};

/// K(P,Y) = g_Y(R(U,Y)Y, U) / (g_Y(Y,Y) g_Y(U,U) - g_Y(Y,U)^2), with the
/// curvature tensor of the underlying Riemannian metric (valid in the
/// Berwald case, where the two curvature tensors coincide). Throws
/// std::invalid_argument for a degenerate flag.
double flag_curvature_general(const FinslerMetric& f, const CurvatureTensor& r, const Flag& flag);

/// One flag of the G_c (c=0, case-iii) family: deformation xt = -2p x + p y,
/// metric (1 1/2 0; 1/2 1 0; 0 0 nu), and a g-orthonormal pair
/// U = a x + b y + c z, V = a~ x + b~ y + c~ z spanning the flag plane with
/// flagpole U.
struct CaseIIIFlagInput {
  double p = 0.0;
  double nu = 1.0;
  Vec3 u = Vec3::UnitX();
  Vec3 v = Vec3::UnitY();
};

/// The case-iii metric (1 1/2 0; 1/2 1 0; 0 0 nu).
InnerProduct case_iii_metric(double nu);
/// The parallel deformation family xt = -2p x + p y.
Vec3 case_iii_deformation(double p);

/// Curvature tensor of the case-iii family: R(x,z)x = z/nu, R(x,z)y = 2z/nu,
/// R(x,z)z = -2y, R(y,z)x = 2z/nu, R(y,z)y = 4z/nu, R(y,z)z = -4y,
/// antisymmetric partners, zero otherwise. Throws for nu <= 0.
CurvatureTensor curvature_case_iii(double nu);

/// R(V,U)U for the case-iii family in closed form: delta z + sigma y with
/// delta = (a+2b) T / nu, sigma = -2c T, T = a~c - c~a + 2(b~c - c~b).
Vec3 rvuu_case_iii(double nu, const Vec3& u, const Vec3& v);

/// Tabulated closed form for the Randers flag curvature of the case-iii
/// family: K(P,U) = -4 ((c(a~+2b~) - c~(a+2b)) / (3pa - 2))^2. Always <= 0.
/// Validates g-orthonormality of {U,V} (tol 1e-9) and sqrt(3)|p| < 1.
double randers_case_iii_closed_form(const CaseIIIFlagInput& in);

/// Tabulated closed form for the Matsumoto flag curvature of the case-iii
/// family:
///   K(P,U) = -(2+3ap)^3 (1+3ap) (c~a - a~c + 2(c~b - b~c))^2
///            / (2 (4 + 18a^2p^2 + 18ap - 27a~^2p^2)).
/// Validates orthonormality and sqrt(3)|p| < 1/2; throws std::domain_error
/// when the denominator magnitude falls below 1e-12.
///
/// Known finding: the -27a~^2p^2 denominator term of this tabulated form is
/// inconsistent with the definitional fundamental tensor, which yields
/// +18a~^2p^2 (the tabulated g_U(V,V) behind it carries -9/2 a~^2p^2 where
/// the definition gives +27/4 a~^2p^2). The general pipeline is the
/// authoritative value; cross-checks report the deviation instead of hiding
/// it. See matsumoto_case_iii_definitional_denominator.
double matsumoto_case_iii_closed_form(const CaseIIIFlagInput& in);

/// Denominator polynomial 4 + 18a^2p^2 + 18ap - 27a~^2p^2 of the tabulated
/// Matsumoto closed form.
double matsumoto_case_iii_tabulated_denominator(double a, double atilde, double p);
/// Denominator polynomial 4 + 18a^2p^2 + 18ap + 18a~^2p^2 implied by the
/// definitional fundamental tensor; K_closed * tabulated = K_general *
/// definitional holds identically on orthonormal inputs.
double matsumoto_case_iii_definitional_denominator(double a, double atilde, double p);

}  // namespace lieflag

#pragma once

#include "darsim/types.hpp"

namespace darsim {

// Controller gains. c1, c2, c3 and lambda are the diagonals of the
// positive-definite diagonal gain matrices.
struct DscGains {
  Vec4 c1 = Vec4::Zero();
  Vec4 c2 = Vec4::Zero();
  Vec4 c3 = Vec4::Zero();
  Vec4 lambda = Vec4::Zero();
  double tau = 0.01;             // first-order filter constant [s]
  double boundary_layer = 0.15;  // 0 selects the hard signum law

  void validate() const;

  static DscGains table1();
};

// Filter state: the low-pass-filtered virtual control, initialised to the
// virtual control itself at the first step.
struct DscState {
  Vec4 alpha_2f = Vec4::Zero();
};

struct SurfaceDiagnostics {
  Vec4 z1 = Vec4::Zero();  // tracking error x1 - x1r
  Vec4 z2 = Vec4::Zero();  // velocity error x2 - alpha_2f
  Vec4 s = Vec4::Zero();   // sliding surface lambda z1 + z2
  double v1 = 0.0;         // 1/2 z1'z1
  double v2_core = 0.0;    // v1 + 1/2 s's (weight term excluded)
};

// alpha = x1r_dot - c1 z1
Vec4 virtual_control(const DscGains& gains, const Vec4& z1, const Vec4& x1r_dot);

DscState init_filter(const Vec4& alpha0);

// One explicit-Euler substep of tau a2f' + a2f = alpha.
// Throws std::invalid_argument unless 0 < dt/tau <= 0.5.
DscState filter_step(const DscState& state, const DscGains& gains, const Vec4& alpha,
                     double dt);

Vec4 sliding_surface(const DscGains& gains, const Vec4& z1, const Vec4& z2);

// c2 sgn(s) + c3 s, elementwise; sgn(0) = 0. With boundary_layer > 0 the
// signum is replaced by sat(s_i / boundary_layer).
Vec4 switching_term(const DscGains& gains, const Vec4& s);

// Total control torque
//   u = -M (c2 sgn(s) + c3 s) - M (lambda z1_dot + M^-1 K - alpha_2f_dot),
// evaluated as -M (sw + lambda z1_dot - alpha_2f_dot) - K so the
// M M^-1 K product cancels exactly.
Vec4 dsc_control(const DscGains& gains, const Mat4& m, const Vec4& lumped_k,
                 const Vec4& z1_dot, const Vec4& s, const Vec4& alpha_2f_dot);

SurfaceDiagnostics surface_diagnostics(const DscGains& gains, const Vec4& z1,
                                       const Vec4& z2);

}  // namespace darsim

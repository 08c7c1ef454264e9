#include "darsim/sim.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace darsim {

DisturbanceSpec DisturbanceSpec::none() { return DisturbanceSpec{}; }

DisturbanceSpec DisturbanceSpec::pulse(double t_on, double t_off, const Vec4& amplitude) {
  DisturbanceSpec spec;
  spec.kind = Kind::Pulse;
  spec.t_on = t_on;
  spec.t_off = t_off;
  spec.amplitude = amplitude;
  return spec;
}

Vec4 disturbance_at(const DisturbanceSpec& spec, double t) {
  switch (spec.kind) {
    case DisturbanceSpec::Kind::None:
      return Vec4::Zero();
    case DisturbanceSpec::Kind::Pulse:
      return (t >= spec.t_on && t < spec.t_off) ? spec.amplitude : Vec4::Zero();
    case DisturbanceSpec::Kind::Sinusoid: {
      Vec4 td;
      const double w = 2.0 * std::numbers::pi * spec.frequency_hz;
      for (int i = 0; i < 4; ++i)
        td[i] = spec.amplitude[i] * std::sin(w * t + spec.phase[i]);
      return td;
    }
  }
  return Vec4::Zero();
}

void SimConfig::validate() const {
  params.validate();
  trajectory.validate(params);
  gains.validate();
  rbfn.validate();
  if (dt <= 0.0) throw std::invalid_argument("SimConfig: dt must be > 0");
  if (duration < 0.0) throw std::invalid_argument("SimConfig: duration must be >= 0");
  if (substeps < 1) throw std::invalid_argument("SimConfig: substeps must be >= 1");
  if (dt / gains.tau > 0.5)
    throw std::invalid_argument("SimConfig: dt/tau exceeds the filter stability bound 0.5");
  if (!initial.theta.allFinite() || !initial.theta_dot.allFinite())
    throw std::invalid_argument("SimConfig: initial state must be finite");
  if (disturbance.kind == DisturbanceSpec::Kind::Pulse && disturbance.t_off < disturbance.t_on)
    throw std::invalid_argument("SimConfig: disturbance pulse needs t_off >= t_on");
}

SimConfig SimConfig::table1(ControllerKind kind) {
  SimConfig cfg;
  cfg.controller = kind;
  cfg.params = RobotParams::table1();
  cfg.trajectory = TrajectoryConfig::table1(cfg.params);
  cfg.gains = DscGains::table1();
  cfg.rbfn = RbfnConfig::make_default();
  cfg.disturbance = DisturbanceSpec::pulse(2.0, 2.5, Vec4::Constant(5.0));
  cfg.initial.theta = Vec4(std::numbers::pi / 6.0, std::numbers::pi / 2.0,
                           std::numbers::pi, -2.0 * std::numbers::pi / 3.0);
  cfg.initial.theta_dot = Vec4::Zero();
  return cfg;
}

JointState integrate_plant(const RobotParams& params, const JointState& state,
                           const Vec4& u, const Vec4& contact_force,
                           const Vec4& disturbance, double dt, int substeps) {
  const auto accel = [&](const JointState& x) {
    return forward_dynamics(params, x, u, contact_force, disturbance);
  };
  JointState x = state;
  const double h = dt / substeps;
  for (int k = 0; k < substeps; ++k) {
    const Vec4 k1_q = x.theta_dot;
    const Vec4 k1_v = accel(x);
    const JointState x2{x.theta + 0.5 * h * k1_q, x.theta_dot + 0.5 * h * k1_v};
    const Vec4 k2_q = x2.theta_dot;
    const Vec4 k2_v = accel(x2);
    const JointState x3{x.theta + 0.5 * h * k2_q, x.theta_dot + 0.5 * h * k2_v};
    const Vec4 k3_q = x3.theta_dot;
    const Vec4 k3_v = accel(x3);
    const JointState x4{x.theta + h * k3_q, x.theta_dot + h * k3_v};
    const Vec4 k4_q = x4.theta_dot;
    const Vec4 k4_v = accel(x4);
    x.theta += h / 6.0 * (k1_q + 2.0 * k2_q + 2.0 * k3_q + k4_q);
    x.theta_dot += h / 6.0 * (k1_v + 2.0 * k2_v + 2.0 * k3_v + k4_v);
  }
  return x;
}

RunLog simulate(const SimConfig& cfg) {
  cfg.validate();

  RunLog log;
  log.config = cfg;
  const long n_steps = std::lround(cfg.duration / cfg.dt);
  log.steps.reserve(n_steps + 1);

  JointState state = cfg.initial;
  DscState filter;
  RbfnWeights weights = RbfnWeights::zero(cfg.rbfn);
  const bool adaptive = cfg.controller == ControllerKind::RbfnDsc;

  for (long k = 0; k <= n_steps; ++k) {
    const double t = k * cfg.dt;
    if (!state.theta.allFinite() || !state.theta_dot.allFinite())
      throw SimulationAborted("simulate: non-finite state at t = " + std::to_string(t),
                              log.steps.empty() ? 0 : log.steps.size() - 1);

    const JointReference ref = joint_reference(cfg.params, cfg.trajectory, t);
    const Vec4 z1 = state.theta - ref.theta_r;
    const Vec4 z1_dot = state.theta_dot - ref.theta_r_dot;
    const Vec4 alpha = virtual_control(cfg.gains, z1, ref.theta_r_dot);
    if (k == 0) filter = init_filter(alpha);
    const Vec4 z2 = state.theta_dot - filter.alpha_2f;
    const SurfaceDiagnostics diag = surface_diagnostics(cfg.gains, z1, z2);
    const Vec4 alpha_2f_dot = (alpha - filter.alpha_2f) / cfg.gains.tau;

    // contact forces from the reference object acceleration (feedforward),
    // zero until the grasp instant
    const bool grasped = t >= cfg.trajectory.approach_duration;
    Vec4 contact = Vec4::Zero();
    bool cone_ok = true;
    if (grasped) {
      const Vec2 obj_acc = object_reference_acceleration(cfg.trajectory, t);
      const GraspForces gf = grasp_forces(cfg.params, obj_acc.x(), obj_acc.y());
      contact = gf.contact_vector();
      cone_ok = gf.cone_ok;
    }
    const Vec4 td = disturbance_at(cfg.disturbance, t);

    const Mat4 m = mass_matrix(cfg.params, state.theta);
    Eigen::VectorXd h_act;
    Vec4 u;
    if (adaptive) {
      Vec8 r;
      r << state.theta, state.theta_dot;
      h_act = activations(cfg.rbfn, r);
      u = rbfn_dsc_control(cfg.gains, weights, m, h_act, z1_dot, diag.s, alpha_2f_dot);
    } else {
      const Vec4 lumped = jacobian(cfg.params, state.theta) * contact -
                          coriolis_vector(cfg.params, state) -
                          viscous_friction(cfg.params, state.theta_dot) - td;
      u = dsc_control(cfg.gains, m, lumped, z1_dot, diag.s, alpha_2f_dot);
    }
    if (!u.allFinite())
      throw SimulationAborted("simulate: non-finite control at t = " + std::to_string(t),
                              log.steps.empty() ? 0 : log.steps.size() - 1);

    StepRecord rec;
    rec.t = t;
    rec.theta = state.theta;
    rec.theta_dot = state.theta_dot;
    rec.theta_r = ref.theta_r;
    rec.z1 = z1;
    rec.s = diag.s;
    rec.u = u;
    rec.contact_force = contact;
    rec.disturbance = td;
    rec.v1 = diag.v1;
    rec.v2_core = diag.v2_core;
    rec.w_norm = adaptive ? weights.frobenius_norm() : 0.0;
    rec.cone_ok = cone_ok;
    log.steps.push_back(rec);

    if (k == n_steps) break;
    state = integrate_plant(cfg.params, state, u, contact, td, cfg.dt, cfg.substeps);
    filter = filter_step(filter, cfg.gains, alpha, cfg.dt);
    if (adaptive) weights = weight_update(weights, cfg.rbfn, h_act, diag.s, cfg.dt);
  }

  if (adaptive) log.final_weights = weights;
  return log;
}

double lyapunov_radius(const SimConfig& cfg) {
  if (cfg.controller == ControllerKind::RbfnDsc) {
    const AttractorMonitor monitor{cfg.rbfn.eps_n, cfg.gains.c3.minCoeff(),
                                   cfg.rbfn.w_f_bound, cfg.rbfn.sigma};
    return attractor_radius(monitor);
  }
  return 1e-6;
}

Metrics compute_metrics(const RunLog& log, double settle_threshold, double lyap_tol) {
  if (log.steps.empty()) throw std::invalid_argument("compute_metrics: empty log");
  const std::size_t n = log.steps.size();
  Metrics m;

  for (int j = 0; j < 4; ++j) {
    double sum_sq = 0.0;
    std::size_t last_above = n;  // n marks "never above threshold"
    for (std::size_t k = 0; k < n; ++k) {
      const double e = log.steps[k].z1[j];
      sum_sq += e * e;
      if (std::abs(e) >= settle_threshold) last_above = k;
    }
    m.rmse_z1[j] = std::sqrt(sum_sq / n);

    std::size_t settle_idx;
    if (last_above == n) {
      settle_idx = 0;  // never exceeded the threshold
      m.settled[j] = true;
    } else if (last_above + 1 < n) {
      settle_idx = last_above + 1;
      m.settled[j] = true;
    } else {
      settle_idx = 0;  // still above at the end of the run
      m.settled[j] = false;
    }
    m.settle_time[j] = m.settled[j] ? log.steps[settle_idx].t : log.steps.back().t;

    double max_abs = 0.0;
    for (std::size_t k = m.settled[j] ? settle_idx : 0; k < n; ++k)
      max_abs = std::max(max_abs, std::abs(log.steps[k].z1[j]));
    m.max_z1_post_settle[j] = max_abs;
  }

  // end-effector RMS deviation from the Cartesian reference, transport phase
  double dev_sq = 0.0;
  std::size_t dev_count = 0;
  for (const StepRecord& rec : log.steps) {
    if (rec.t < log.config.trajectory.approach_duration) continue;
    const CartesianReference ref = cartesian_reference(log.config.trajectory, rec.t);
    const Vec2 p1 = forward_kinematics(log.config.params, 1, Vec2(rec.theta[0], rec.theta[1]));
    const Vec2 p2 = forward_kinematics(log.config.params, 2, Vec2(rec.theta[2], rec.theta[3]));
    dev_sq += (p1 - ref.ee1).squaredNorm() + (p2 - ref.ee2).squaredNorm();
    dev_count += 2;
  }
  if (dev_count == 0) {
    for (const StepRecord& rec : log.steps) {
      const CartesianReference ref = cartesian_reference(log.config.trajectory, rec.t);
      const Vec2 p1 = forward_kinematics(log.config.params, 1, Vec2(rec.theta[0], rec.theta[1]));
      const Vec2 p2 = forward_kinematics(log.config.params, 2, Vec2(rec.theta[2], rec.theta[3]));
      dev_sq += (p1 - ref.ee1).squaredNorm() + (p2 - ref.ee2).squaredNorm();
      dev_count += 2;
    }
  }
  m.rms_ee_deviation = std::sqrt(dev_sq / dev_count);

  const double radius = lyapunov_radius(log.config);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double dv = log.steps[k + 1].v2_core - log.steps[k].v2_core;
    if (log.steps[k].s.norm() > radius && dv > lyap_tol) ++m.lyapunov_violations;
  }
  return m;
}

namespace {

void put(std::ostream& out, double value, bool comma = true) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out << buf;
  if (comma) out << ',';
}

void put4(std::ostream& out, const Vec4& v) {
  for (int i = 0; i < 4; ++i) put(out, v[i]);
}

}  // namespace

void write_run_csv(const RunLog& log, std::ostream& out) {
  out << "t,theta1,theta2,theta3,theta4,"
         "theta_dot1,theta_dot2,theta_dot3,theta_dot4,"
         "theta_r1,theta_r2,theta_r3,theta_r4,"
         "z1_1,z1_2,z1_3,z1_4,s1,s2,s3,s4,u1,u2,u3,u4,"
         "F1,Fs1y,F2,Fs2y,Td1,Td2,Td3,Td4,"
         "V1,V2_core,W_fro,cone_ok\n";
  for (const StepRecord& rec : log.steps) {
    put(out, rec.t);
    put4(out, rec.theta);
    put4(out, rec.theta_dot);
    put4(out, rec.theta_r);
    put4(out, rec.z1);
    put4(out, rec.s);
    put4(out, rec.u);
    put4(out, rec.contact_force);
    put4(out, rec.disturbance);
    put(out, rec.v1);
    put(out, rec.v2_core);
    put(out, rec.w_norm);
    out << (rec.cone_ok ? 1 : 0) << '\n';
  }
}

void write_metrics(const Metrics& metrics, std::ostream& out) {
  for (int j = 0; j < 4; ++j) {
    out << "rmse_z1_" << j + 1 << '=';
    put(out, metrics.rmse_z1[j], false);
    out << '\n';
  }
  for (int j = 0; j < 4; ++j) {
    out << "settle_time_" << j + 1 << '=';
    put(out, metrics.settle_time[j], false);
    out << '\n' << "settled_" << j + 1 << '=' << (metrics.settled[j] ? 1 : 0) << '\n';
  }
  for (int j = 0; j < 4; ++j) {
    out << "max_z1_post_settle_" << j + 1 << '=';
    put(out, metrics.max_z1_post_settle[j], false);
    out << '\n';
  }
  out << "rms_ee_deviation=";
  put(out, metrics.rms_ee_deviation, false);
  out << '\n' << "lyapunov_violations=" << metrics.lyapunov_violations << '\n';
}

void write_weights_csv(const RbfnWeights& weights, std::ostream& out) {
  out << "center,w1,w2,w3,w4\n";
  for (Eigen::Index i = 0; i < weights.w_hat.rows(); ++i) {
    out << i << ',';
    for (int j = 0; j < 4; ++j) put(out, weights.w_hat(i, j), j < 3);
    out << '\n';
  }
}

}  // namespace darsim

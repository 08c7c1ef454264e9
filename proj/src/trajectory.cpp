#include "darsim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace darsim {

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 shoulder(const RobotParams& p, int arm) {
  return Vec2(arm == 1 ? p.base_separation / 2.0 : -p.base_separation / 2.0, 0.0);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("TrajectoryConfig: " + what);
}

}  // namespace

void TrajectoryConfig::validate(const RobotParams& params) const {
  require(circle_radius > 0.0, "circle_radius must be > 0");
  require(approach_duration > 0.0, "approach_duration must be > 0");
  require(transport_duration > 0.0, "transport_duration must be > 0");
  require(dt > 0.0, "dt must be > 0");
  require(grasp_offset >= 0.0, "grasp_offset must be >= 0");
  require(elbow_sign_1 == 1 || elbow_sign_1 == -1, "elbow_sign_1 must be +1 or -1");
  require(elbow_sign_2 == 1 || elbow_sign_2 == -1, "elbow_sign_2 must be +1 or -1");

  // every commanded point must stay inside the reachable annulus of its arm
  const double total = approach_duration + transport_duration;
  const int samples = 400;
  for (int i = 0; i <= samples; ++i) {
    const double t = total * i / samples;
    const CartesianReference ref = cartesian_reference(*this, t);
    for (int arm = 1; arm <= 2; ++arm) {
      const Vec2 rel = (arm == 1 ? ref.ee1 : ref.ee2) - shoulder(params, arm);
      const double la = params.length[arm == 1 ? 0 : 2];
      const double lb = params.length[arm == 1 ? 1 : 3];
      const double r = rel.norm();
      if (r > la + lb + 1e-12 || r < std::abs(la - lb) - 1e-12)
        throw std::invalid_argument(
            "TrajectoryConfig: commanded point for arm " + std::to_string(arm) +
            " at t = " + std::to_string(t) + " is outside reach [" +
            std::to_string(std::abs(la - lb)) + ", " + std::to_string(la + lb) +
            "] (distance " + std::to_string(r) + ")");
    }
  }
}

TrajectoryConfig TrajectoryConfig::table1(const RobotParams& params) {
  TrajectoryConfig cfg;
  // Approach starts where the arms actually are at t = 0 (the forward
  // kinematics of the published initial joint angles); the published initial
  // points (0.76, 0.6)/(-0.76, 0.6) are inconsistent with those angles.
  cfg.start_1 = forward_kinematics(params, 1, Vec2(kPi / 6.0, kPi / 2.0));
  cfg.start_2 = forward_kinematics(params, 2, Vec2(kPi, -2.0 * kPi / 3.0));
  cfg.goal_1 = Vec2(-0.275, 1.4);
  cfg.goal_2 = Vec2(-0.525, 1.4);
  cfg.circle_center = Vec2(0.0, 1.4);
  cfg.circle_radius = 0.4;
  cfg.grasp_offset = params.object_length / 2.0;
  cfg.approach_duration = 2.0;
  cfg.transport_duration = 4.0;
  return cfg;
}

CartesianReference cartesian_reference(const TrajectoryConfig& cfg, double t) {
  CartesianReference ref;
  if (t < cfg.approach_duration) {
    const double blend = std::exp(-10.0 * t * t);
    ref.ee1 = cfg.goal_1 + (cfg.start_1 - cfg.goal_1) * blend;
    ref.ee2 = cfg.goal_2 + (cfg.start_2 - cfg.goal_2) * blend;
    // object rests at the grasp location until picked up
    ref.object = cfg.circle_center +
                 cfg.circle_radius * Vec2(std::cos(-kPi), std::sin(-kPi));
  } else {
    const double progress =
        std::clamp((t - cfg.approach_duration) / cfg.transport_duration, 0.0, 1.0);
    const double phi = -kPi + kPi * progress;
    ref.object = cfg.circle_center + cfg.circle_radius * Vec2(std::cos(phi), std::sin(phi));
    ref.ee1 = ref.object + Vec2(cfg.grasp_offset, 0.0);
    ref.ee2 = ref.object - Vec2(cfg.grasp_offset, 0.0);
  }
  return ref;
}

Vec2 object_reference_acceleration(const TrajectoryConfig& cfg, double t) {
  if (t < cfg.approach_duration || t > cfg.approach_duration + cfg.transport_duration)
    return Vec2::Zero();
  const double phi = -kPi + kPi * (t - cfg.approach_duration) / cfg.transport_duration;
  const double phi_dot = kPi / cfg.transport_duration;
  return -cfg.circle_radius * phi_dot * phi_dot * Vec2(std::cos(phi), std::sin(phi));
}

Vec2 forward_kinematics(const RobotParams& p, int arm, const Vec2& angles) {
  const double la = p.length[arm == 1 ? 0 : 2];
  const double lb = p.length[arm == 1 ? 1 : 3];
  const Vec2 base = shoulder(p, arm);
  return base + la * Vec2(std::cos(angles[0]), std::sin(angles[0])) +
         lb * Vec2(std::cos(angles[0] + angles[1]), std::sin(angles[0] + angles[1]));
}

Vec2 inverse_kinematics(const RobotParams& p, int arm, const Vec2& target,
                        int elbow_sign) {
  const double la = p.length[arm == 1 ? 0 : 2];
  const double lb = p.length[arm == 1 ? 1 : 3];
  const Vec2 rel = target - shoulder(p, arm);
  const double r2 = rel.squaredNorm();
  const double r = std::sqrt(r2);
  const double r_min = std::abs(la - lb);
  const double r_max = la + lb;
  if (r > r_max * (1.0 + 1e-12) + 1e-12 || r < r_min * (1.0 - 1e-12) - 1e-12)
    throw UnreachableTarget("inverse_kinematics: target at distance " + std::to_string(r) +
                                " outside reach [" + std::to_string(r_min) + ", " +
                                std::to_string(r_max) + "] for arm " + std::to_string(arm),
                            r, r_min, r_max);
  const double c = std::clamp((r2 - la * la - lb * lb) / (2.0 * la * lb), -1.0, 1.0);
  const double elbow = elbow_sign * std::acos(c);
  const double shoulder_angle =
      std::atan2(rel.y(), rel.x()) - std::atan2(lb * std::sin(elbow), la + lb * std::cos(elbow));
  return Vec2(shoulder_angle, elbow);
}

JointReference joint_reference(const RobotParams& p, const TrajectoryConfig& cfg,
                               double t) {
  const auto solve = [&](double at) {
    const CartesianReference ref = cartesian_reference(cfg, std::max(at, 0.0));
    const Vec2 q1 = inverse_kinematics(p, 1, ref.ee1, cfg.elbow_sign_1);
    const Vec2 q2 = inverse_kinematics(p, 2, ref.ee2, cfg.elbow_sign_2);
    return Vec4(q1[0], q1[1], q2[0], q2[1]);
  };
  JointReference jr;
  jr.theta_r = solve(t);
  jr.theta_r_dot = (solve(t + cfg.dt) - solve(t - cfg.dt)) / (2.0 * cfg.dt);
  return jr;
}

}  // namespace darsim

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "darsim/dsc.hpp"
#include "darsim/dynamics.hpp"
#include "darsim/payload.hpp"
#include "darsim/rbfn.hpp"
#include "darsim/trajectory.hpp"

namespace darsim {

enum class ControllerKind { DscCertain, RbfnDsc };

struct DisturbanceSpec {
  enum class Kind { None, Pulse, Sinusoid };
  Kind kind = Kind::None;
  Vec4 amplitude = Vec4::Zero();  // per joint [N m]
  double t_on = 0.0;              // pulse window [t_on, t_off)
  double t_off = 0.0;
  double frequency_hz = 0.0;      // sinusoid
  Vec4 phase = Vec4::Zero();

  static DisturbanceSpec none();
  static DisturbanceSpec pulse(double t_on, double t_off, const Vec4& amplitude);
};

Vec4 disturbance_at(const DisturbanceSpec& spec, double t);

struct SimConfig {
  double dt = 1e-3;      // control period [s]
  double duration = 6.0; // simulated time [s]
  int substeps = 1;      // RK4 plant substeps per control period
  ControllerKind controller = ControllerKind::DscCertain;
  DisturbanceSpec disturbance;
  JointState initial;
  RobotParams params;
  TrajectoryConfig trajectory;
  DscGains gains;
  RbfnConfig rbfn;

  void validate() const;

  // Full Table-1 protocol: approach 2 s, transport 4 s, pulse disturbance
  // of 5 N m on all joints during t in [2.0, 2.5] s.
  static SimConfig table1(ControllerKind kind);
};

struct StepRecord {
  double t;
  Vec4 theta, theta_dot, theta_r, z1, s, u;
  Vec4 contact_force;  // (F1, Fs1y, F2, Fs2y)
  Vec4 disturbance;
  double v1, v2_core, w_norm;
  bool cone_ok;
};

struct RunLog {
  SimConfig config;
  std::vector<StepRecord> steps;
  RbfnWeights final_weights;  // empty for the certain-system controller
};

struct SimulationAborted : std::runtime_error {
  SimulationAborted(const std::string& msg, std::size_t index)
      : std::runtime_error(msg), last_valid_index(index) {}
  std::size_t last_valid_index;
};

struct Metrics {
  std::array<double, 4> rmse_z1{};
  std::array<double, 4> max_z1_post_settle{};
  std::array<double, 4> settle_time{};
  std::array<bool, 4> settled{};
  double rms_ee_deviation = 0.0;  // transport phase, both arms pooled [m]
  long lyapunov_violations = 0;
};

// One zero-order-hold control period of the plant: `substeps` classical RK4
// steps with u, contact force and disturbance held constant.
JointState integrate_plant(const RobotParams& params, const JointState& state,
                           const Vec4& u, const Vec4& contact_force,
                           const Vec4& disturbance, double dt, int substeps);

// Runs the full protocol; deterministic for identical configs. Throws
// SimulationAborted carrying the last valid record index if the state
// leaves the finite range.
RunLog simulate(const SimConfig& cfg);

// Settling = first time |z1| stays below the threshold. The Lyapunov
// violation count gates on ||s|| > radius with the per-step increase
// tolerance `lyap_tol`; the radius is 1e-6 for the certain controller and
// the attractor radius of the run's monitor inputs for the adaptive one.
Metrics compute_metrics(const RunLog& log, double settle_threshold = 0.01,
                        double lyap_tol = 1e-6);

double lyapunov_radius(const SimConfig& cfg);

void write_run_csv(const RunLog& log, std::ostream& out);
void write_metrics(const Metrics& metrics, std::ostream& out);
void write_weights_csv(const RbfnWeights& weights, std::ostream& out);

}  // namespace darsim

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

namespace hmp {

using Eigen::Vector2d;
using Eigen::Vector3d;
using Eigen::VectorXd;

// Root motion goal: base velocity and orientation (roll, pitch, yaw).
// Expression goal: joint angles and keypoint positions.
struct TrackingGoal {
  Vector3d v_ref = Vector3d::Zero();
  Vector3d orientation_ref = Vector3d::Zero();
  VectorXd q_ref;
  std::vector<Vector3d> p_ref;
};

struct PDGain {
  double kp = 0.0;  // N m / rad
  double kd = 0.0;  // N m s / rad
};

// Gains by joint group ("knee", "hip_pitch", "waist", ...). A joint name
// resolves to its group by exact match, then with a left_/right_ prefix
// removed, then "waist_*" -> "waist".
struct PDGains {
  std::map<std::string, PDGain> groups;

  const PDGain& lookup(const std::string& joint) const;  // throws UnknownJoint
};

// The G1 gain table.
PDGains g1_pd_gains();

// tau = kp (a - q) - kd q_dot. Throws UnknownJoint.
double pd_torque(double a, double q, double q_dot, const PDGains& gains, const std::string& joint);
VectorXd pd_torques(const VectorXd& a, const VectorXd& q, const VectorXd& q_dot, const PDGains& gains,
                    const std::vector<std::string>& joints);

struct FootState {
  double height = 0.0;  // m
  Vector3d force = Vector3d::Zero();  // contact force, N
  double air_time = 0.0;  // s
  Vector3d velocity = Vector3d::Zero();
  bool new_contact = false;
};

// Every quantity the reward terms read. Unset fields make evaluate_reward
// throw MissingField naming the symbol.
struct RobotSnapshot {
  std::optional<VectorXd> q, q_dot;
  std::optional<Vector3d> v, omega;
  std::optional<Vector3d> orientation;  // roll, pitch, yaw
  std::optional<std::vector<Vector3d>> keypoints;
  std::optional<std::vector<FootState>> feet;
  std::optional<VectorXd> action, prev_action;
  std::optional<Vector2d> gravity_xy;
  std::optional<VectorXd> q_default, q_min, q_max;
  std::optional<bool> collision;
};

enum class VelocityDirectionForm {
  misalignment,  // exp(-k (1 - cos)): 1 at perfect alignment
  as_printed,    // exp(-k cos)
};

struct RewardWeights {
  std::map<std::string, double> weights;  // term name -> weight
  VelocityDirectionForm velocity_direction = VelocityDirectionForm::misalignment;

  static RewardWeights defaults();
  double at(const std::string& term) const;
};

struct RewardTerm {
  std::string name;
  double raw = 0.0;
  double weight = 0.0;
  double weighted = 0.0;
};

struct RewardBreakdown {
  std::vector<RewardTerm> terms;  // tracking terms first, in table order
  double total = 0.0;

  const RewardTerm& term(const std::string& name) const;  // throws std::out_of_range
};

// Term names, tracking then regularization.
const std::vector<std::string>& reward_term_names();
bool is_tracking_term(const std::string& name);

// Throws MissingField, DimensionMismatch.
RewardBreakdown evaluate_reward(const TrackingGoal& goal, const RobotSnapshot& snap,
                                const RewardWeights& weights = RewardWeights::defaults());

struct TrackingErrors {
  double mae_joint = 0.0;           // rad
  double mean_keypoint_err = 0.0;   // m
};

// Throws DimensionMismatch.
TrackingErrors tracking_errors(const VectorXd& q_ref, const VectorXd& q, const std::vector<Vector3d>& p_ref,
                               const std::vector<Vector3d>& p);

// Snapshot file: {"q": [...], "q_dot": [...], "v": [x,y,z], "omega": [x,y,z],
//   "orientation": [roll,pitch,yaw], "keypoints": [[x,y,z],...],
//   "feet": [{"height","force":[x,y,z],"air_time","velocity":[x,y,z],"new_contact"}],
//   "action": [...], "prev_action": [...], "gravity_xy": [x,y],
//   "q_default": [...], "q_min": [...], "q_max": [...], "collision": false}
// Goal file: {"v_ref": [x,y,z], "orientation_ref": [roll,pitch,yaw], "q_ref": [...], "p_ref": [[x,y,z],...]}
// Weights file: {"weights": {"dof_position": 3.0, ...}, "velocity_direction": "misalignment"|"as_printed"}
RobotSnapshot snapshot_from_json(const nlohmann::json& j);
TrackingGoal tracking_goal_from_json(const nlohmann::json& j);
RewardWeights reward_weights_from_json(const nlohmann::json& j);

std::string format_reward_table(const RewardBreakdown& b);

}  // namespace hmp

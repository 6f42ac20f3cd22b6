#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Geometry>
#include <nlohmann/json.hpp>

namespace hmp {

using Eigen::Quaterniond;
using Eigen::Vector3d;

struct SkeletonJoint {
  std::string name;
  int parent = -1;  // index into the joint list, -1 for the root
  Vector3d offset = Vector3d::Zero();  // from the parent in the T-pose frame; root: T-pose position
};

// Joints are topologically ordered: parent index < child index.
struct SkeletonTree {
  std::vector<SkeletonJoint> joints;

  void validate() const;  // throws SchemaError
  std::optional<int> index_of(const std::string& name) const;
  int require(const std::string& name) const;  // throws MappingError
  std::size_t size() const { return joints.size(); }
};

// Rotations are global-frame unit quaternions, one per joint of the tree.
struct SkeletonState {
  std::shared_ptr<const SkeletonTree> tree;
  Vector3d root_translation = Vector3d::Zero();
  std::vector<Quaterniond> rotations;
};

// The T-pose of a tree: identity rotations, root at its declared offset.
SkeletonState identity_pose(std::shared_ptr<const SkeletonTree> tree);

// Global <-> parent-relative rotations. local[i] = global[parent]^-1 * global[i].
std::vector<Quaterniond> to_local(const SkeletonTree& tree, const std::vector<Quaterniond>& global);
std::vector<Quaterniond> to_global(const SkeletonTree& tree, const std::vector<Quaterniond>& local);

// World positions of every joint. Offsets are expressed in the T-pose frame,
// so each link is carried by the rotation of its parent relative to the
// parent's T-pose rotation.
std::vector<Vector3d> joint_positions(const SkeletonState& state, const SkeletonState& tpose);

struct JointInfo {
  Vector3d axis = Vector3d::Zero();  // zero for fixed links
  double lower = 0.0;
  double upper = 0.0;
  bool actuated() const { return axis.squaredNorm() > 0.0; }
};

struct RobotModel {
  std::string name;
  std::shared_ptr<const SkeletonTree> tree;
  std::vector<JointInfo> joints;            // per tree joint
  SkeletonState tpose;
  std::vector<std::string> keypoint_links;  // order of p_ref
  std::vector<std::string> foot_joints;     // ground contact for retargeting

  void validate() const;  // throws SchemaError
  std::size_t dof() const;
  // Tree indices of the actuated joints, in tree order; q follows this order.
  std::vector<int> actuated_indices() const;
  std::vector<std::string> dof_names() const;
};

// Source joint name -> target joint name.
struct JointMapping {
  std::map<std::string, std::string> pairs;
};

struct RetargetOptions {
  Quaterniond align = Quaterniond::Identity();  // human frame -> robot frame
};

// Human pose -> robot skeleton state:
//  1. drop source joints absent from the mapping;
//  2. rotate source pose and T-pose by options.align;
//  3. scale the root translation by target/source root height in the T-pose;
//  4. per mapped target joint R = (R_src * R_src_tpose^-1) * R_tgt_tpose. An
//     unmapped target joint takes the relative rotation of its nearest mapped
//     ancestor (identity if none), so rigid sub-chains follow their parent;
//  5. assemble;
//  6. shift z so the lowest foot joint sits at z = 0.
// Throws MappingError (naming the joint) and DegenerateTpose.
SkeletonState retarget(const SkeletonState& source, const SkeletonState& source_tpose, const RobotModel& target,
                       const JointMapping& mapping, const RetargetOptions& options = {});

// Joint angles reproducing the state's rotations as closely as the joint axes
// allow (twist about each axis of the parent-relative rotation), clamped to
// the limits. `clamped` receives the number of clamped joints.
Eigen::VectorXd joint_angles_from_state(const RobotModel& model, const SkeletonState& state,
                                        std::size_t* clamped = nullptr);

// World position of every joint. q has one angle per actuated joint; angles
// outside the limits are clamped with a warning. Throws DimensionMismatch.
std::map<std::string, Vector3d> forward_kinematics(const RobotModel& model, const Eigen::VectorXd& q);
std::vector<Vector3d> forward_kinematics_ordered(const RobotModel& model, const Eigen::VectorXd& q);

// FK positions of model.keypoint_links, in that order.
// Throws UnknownKeypointLink, DimensionMismatch.
std::vector<Vector3d> keypoints_from_joints(const RobotModel& model, const Eigen::VectorXd& q);

// Files.
//
// Skeleton / robot model:
//   { "name": "g1", "joints": [ {"name": "pelvis", "parent": null, "offset": [0,0,0.79]},
//                               {"name": "left_hip_pitch", "parent": "pelvis", "offset": [...],
//                                "axis": [0,1,0], "limits": [-2.5, 2.9]}, ... ],
//     "keypoints": ["pelvis", ...], "feet": ["left_ankle_roll", ...] }
//   Joints without "axis" are fixed.
// Pose sequence:
//   { "skeleton": {"joints": [...]},  "tpose": {"root": [x,y,z], "rotations": [[w,x,y,z], ...]},
//     "frames": [ {"root": [x,y,z], "rotations": [[w,x,y,z], ...]}, ... ] }
//   Rotations follow the skeleton's joint order; "tpose" defaults to identity.
// Mapping:
//   { "align": [w,x,y,z], "pairs": {"pelvis": "pelvis", "left_hip": "left_hip_pitch", ...} }
SkeletonTree skeleton_from_json(const nlohmann::json& j);
nlohmann::json skeleton_to_json(const SkeletonTree& tree);
RobotModel robot_from_json(const nlohmann::json& j);
RobotModel load_robot(const std::string& path);

struct PoseSequence {
  std::shared_ptr<const SkeletonTree> tree;
  SkeletonState tpose;
  std::vector<SkeletonState> frames;
};
PoseSequence pose_sequence_from_json(const nlohmann::json& j);
nlohmann::json pose_sequence_to_json(const PoseSequence& seq);
PoseSequence load_pose_sequence(const std::string& path);

JointMapping mapping_from_json(const nlohmann::json& j, RetargetOptions* options = nullptr);
JointMapping load_mapping(const std::string& path, RetargetOptions* options = nullptr);

}  // namespace hmp

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmp {

// Base for every error raised by the library. Subclasses carry the
// category that callers (orchestrator, CLI) map to outcomes and exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// world
class InvariantViolation : public Error {
 public:
  using Error::Error;
};
class UnknownEntity : public Error {
 public:
  explicit UnknownEntity(const std::string& id)
      : Error("unknown entity '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// parsing / schema
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string field)
      : Error(what + " (line " + std::to_string(line) +
              (field.empty() ? "" : ", field '" + field + "'") + ")"),
        line_(line),
        field_(std::move(field)) {}
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};
class SchemaError : public Error {
 public:
  using Error::Error;
};
class BindingError : public Error {
 public:
  using Error::Error;
};

// planner
class PlannerError : public Error {
 public:
  using Error::Error;
};
class Unsatisfiable : public PlannerError {
 public:
  Unsatisfiable(const std::string& what, int deepest_frontier)
      : PlannerError(what), deepest_frontier_(deepest_frontier) {}
  int deepest_frontier() const { return deepest_frontier_; }

 private:
  int deepest_frontier_;
};
class MalformedResponse : public PlannerError {
 public:
  using PlannerError::PlannerError;
};
class UnknownSkill : public PlannerError {
 public:
  explicit UnknownSkill(const std::string& name)
      : PlannerError("unknown skill '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};
// A response whose step objects break the five-key plan schema.
class PlanSchemaError : public PlannerError {
 public:
  using PlannerError::PlannerError;
};

// monitor / remote
class InsufficientHistory : public Error {
 public:
  using Error::Error;
};
class TransportError : public Error {
 public:
  TransportError(const std::string& what, bool timed_out)
      : Error(what), timed_out_(timed_out) {}
  bool timed_out() const { return timed_out_; }

 private:
  bool timed_out_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};

// kinematics
class MappingError : public Error {
 public:
  MappingError(const std::string& what, std::string joint)
      : Error(what), joint_(std::move(joint)) {}
  const std::string& joint() const { return joint_; }

 private:
  std::string joint_;
};
class DegenerateTpose : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class UnknownKeypointLink : public Error {
 public:
  using Error::Error;
};

// control
class UnknownJoint : public Error {
 public:
  using Error::Error;
};
class MissingField : public Error {
 public:
  explicit MissingField(const std::string& symbol)
      : Error("missing field '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

}  // namespace hmp

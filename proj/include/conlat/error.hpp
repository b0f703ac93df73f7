#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace conlat {

// Every failure mode carried by conlat::Error. Validation failures carry a
// machine-readable witness (the offending elements) next to the human message.
enum class Err {
  DuplicateLabel,
  UnknownLabel,
  NotReflexive,
  NotTransitive,
  NotMonotone,
  AdjointnessViolated,
  BoundaryMismatch,
  NoBound,
  CapacityExceeded,
  NotReflection,
  NotCoreflection,
  NotPoset,
  NotComplete,
  SquareNotCommuting,
  FundamentalConditionViolated,
  NotAdjoint,
  InstanceNotPreserved,
  TypeNotPreserved,
  BadHeader,
  CountMismatch,
  BadRowLength,
  BadChar,
  BadInput,
  LawViolated,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg, nlohmann::json witness = nullptr)
      : std::runtime_error(msg), kind_(kind), witness_(std::move(witness)) {}

  Err kind() const { return kind_; }
  const nlohmann::json& witness() const { return witness_; }

  // {"error":..., "message":..., "witness":...} for CLI output.
  nlohmann::json to_json() const;

private:
  Err kind_;
  nlohmann::json witness_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg,
                              nlohmann::json witness = nullptr) {
  throw Error(kind, msg, std::move(witness));
}

}  // namespace conlat

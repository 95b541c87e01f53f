#pragma once

#include <stdexcept>
#include <string>

namespace dissoc {

/// A bit-mask or counter table would outgrow the configured memory cap.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive enumeration or polynomial expansion exceeds its budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric comparison could not be decided at the maximum working precision.
class precision_error : public std::runtime_error {
 public:
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was asked for a sequence variant it is not defined on.
class variant_error : public std::invalid_argument {
 public:
  explicit variant_error(const std::string& what) : std::invalid_argument(what) {}
};

/// The input set does not belong to the class the operation requires.
class class_error : public std::invalid_argument {
 public:
  explicit class_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A theorem-backed runtime invariant failed; this always indicates a bug.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dissoc

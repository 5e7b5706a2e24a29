#pragma once

#include "purecomplex/bignum.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace purecomplex {

/// Raised when a computation would exceed its configured work budget.  Carries
/// the projected amount of work so callers can report it.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, Int projected)
      : std::runtime_error(what), projected_(std::move(projected)) {}

  const Int& projected_work() const { return projected_; }

 private:
  Int projected_;
};

}  // namespace purecomplex

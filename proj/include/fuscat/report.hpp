#pragma once

#include <vector>

#include "fuscat/exactnum.hpp"

namespace fuscat {

/// Both sides of an exact identity.
struct ScalarCheck {
  CycNum lhs;
  CycNum rhs;
  bool pass = false;

  static ScalarCheck compare(CycNum lhs, CycNum rhs) {
    bool eq = lhs == rhs;
    return {std::move(lhs), std::move(rhs), eq};
  }
};

struct VectorCheck {
  std::vector<CycNum> lhs;
  std::vector<CycNum> rhs;
  bool pass = false;

  static VectorCheck compare(std::vector<CycNum> lhs, std::vector<CycNum> rhs) {
    bool eq = lhs == rhs;
    return {std::move(lhs), std::move(rhs), eq};
  }
};

struct MatrixCheck {
  std::vector<std::vector<CycNum>> lhs;
  std::vector<std::vector<CycNum>> rhs;
  bool pass = false;
};

/// Membership of an exact value in the ring of algebraic integers.
struct IntegralityCheck {
  CycNum value;
  bool integral = false;

  static IntegralityCheck of(CycNum value) {
    bool ok = is_algebraic_integer(value);
    return {std::move(value), ok};
  }
};

}  // namespace fuscat

#pragma once

#include <stdexcept>

namespace qsh {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero scalar") {}
};
struct PoleAtPoint : std::domain_error {
  PoleAtPoint() : std::domain_error("denominator vanishes at evaluation point") {}
};

}  // namespace qsh

#pragma once

#include <stdexcept>
#include <string>

namespace efimov {

// Mass ratio at or below the critical value for the requested l.
class BelowCriticalMass : public std::domain_error {
 public:
  BelowCriticalMass(const std::string& what, double critical_ratio)
      : std::domain_error(what), critical_ratio_(critical_ratio) {}
  double critical_ratio() const noexcept { return critical_ratio_; }

 private:
  double critical_ratio_;
};

class BracketFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adjacent levels could not be separated by node count on the current grid.
class GridResolutionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested level lies below the double-precision energy floor.
class PrecisionFloorError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NoCrossingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace efimov

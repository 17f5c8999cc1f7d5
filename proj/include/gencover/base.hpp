#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gencover {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an operation would exceed its stated enumeration/search
/// budget. Carries a rough upfront estimate of the work that was refused.
class budget_error : public std::runtime_error {
  public:
    budget_error(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}

    double estimate() const { return estimate_; }

  private:
    double estimate_;
};

/// floor(x) for products of rational quantities held in doubles.
/// Values within 1e-9 of an integer snap to it, so that e.g. 0.5*6
/// evaluating to 2.9999999999999996 still floors to 3.
inline long long floor_index(double x) {
    double nearest = std::nearbyint(x);
    if (std::abs(x - nearest) < 1e-9) return static_cast<long long>(nearest);
    return static_cast<long long>(std::floor(x));
}

/// r = floor(rho*n), the integer radius matching a normalized radius.
inline int radius_from_rho(double rho, int n) {
    if (rho < 0.0 || rho > 1.0) throw std::domain_error("rho must be in [0,1]");
    return static_cast<int>(floor_index(rho * n));
}

}  // namespace gencover

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace qt {

/// The order-gamma coefficients all vanish at the center. When some lower
/// order has a nonzero coefficient there, reduced_order() names the largest
/// such order; the caller should rebuild the operator with that order.
class DegenerateOrder : public std::runtime_error {
 public:
  DegenerateOrder(unsigned order, std::optional<unsigned> reduced_order)
      : std::runtime_error(make_message(order, reduced_order)),
        order_(order),
        reduced_order_(reduced_order) {}

  unsigned order() const { return order_; }
  std::optional<unsigned> reduced_order() const { return reduced_order_; }

 private:
  static std::string make_message(unsigned order, std::optional<unsigned> reduced) {
    std::string msg = "operator is degenerate at the center: every coefficient of order " +
                      std::to_string(order) + " vanishes there";
    if (reduced) {
      msg += "; largest order with a nonzero coefficient is " + std::to_string(*reduced);
    } else {
      msg += "; every coefficient vanishes at the center";
    }
    return msg;
  }

  unsigned order_;
  std::optional<unsigned> reduced_order_;
};

class DegreeTooHigh : public std::invalid_argument {
 public:
  DegreeTooHigh(unsigned degree, unsigned bound)
      : std::invalid_argument("polynomial degree " + std::to_string(degree) +
                              " exceeds the truncation degree " + std::to_string(bound)) {}
};

class SimpleCaseUnavailable : public std::logic_error {
 public:
  SimpleCaseUnavailable()
      : std::logic_error("pivot has no axis with a strict unique maximum; use the general solver") {}
};

class SeedNotInU : public std::invalid_argument {
 public:
  explicit SeedNotInU(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qt

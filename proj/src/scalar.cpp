#include "qtrefftz/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace qt {

template <>
Rational scalar_cast<Rational, Complex>(const Complex& x) {
  if (x.imag() != 0.0) {
    throw std::invalid_argument("cannot convert a complex value with nonzero imaginary part to "
                                "an exact rational");
  }
  return Rational(x.real());
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace qt

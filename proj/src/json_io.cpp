#include "qtrefftz/json_io.hpp"

#include <cmath>

namespace qt::io {

json to_json(const MultiIndex& i) { return json(std::vector<unsigned>(i.begin(), i.end())); }

MultiIndex multiindex_from_json(const json& j, std::size_t dimension) {
  if (!j.is_array() || j.size() != dimension) {
    throw ParseError("multi-index must be an array of " + std::to_string(dimension) +
                     " integers, got " + j.dump());
  }
  std::vector<std::uint32_t> v;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0)) {
      throw ParseError("multi-index entries must be non-negative integers, got " + j.dump());
    }
    v.push_back(e.get<std::uint32_t>());
  }
  return MultiIndex(std::span<const std::uint32_t>(v));
}

json scalar_part_to_json(const Rational& x) { return format_rational(x); }
json scalar_part_to_json(double x) { return x; }

namespace {

Rational rational_part(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError("non-finite coefficient");
    return Rational(v);
  }
  throw ParseError("coefficient must be a number or a \"num/den\" string, got " + j.dump());
}

double double_part(const json& j) {
  if (j.is_number()) return j.get<double>();
  return rational_part(j).get_d();
}

}  // namespace

template <>
Rational scalar_from_json<Rational>(const json& re, const json& im) {
  if (sgn(rational_part(im)) != 0) {
    throw ParseError("nonzero imaginary part in exact arithmetic");
  }
  return rational_part(re);
}

template <>
Complex scalar_from_json<Complex>(const json& re, const json& im) {
  return {double_part(re), double_part(im)};
}

std::vector<double> center_from_json(const json& j, std::size_t dimension) {
  if (!j.is_array()) throw ParseError("center must be an array");
  if (j.empty()) return std::vector<double>(dimension, 0.0);
  if (j.size() != dimension) throw ParseError("center has the wrong dimension");
  std::vector<double> c;
  for (const auto& e : j) c.push_back(double_part(e));
  return c;
}

json to_json(const VerificationReport& r) {
  return json{{"residual", r.residual}, {"pass", r.pass}, {"p", r.p}, {"gamma", r.gamma}};
}

}  // namespace qt::io

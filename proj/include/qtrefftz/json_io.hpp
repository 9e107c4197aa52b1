#pragma once

#include "qtrefftz/basis.hpp"
#include "qtrefftz/differential_operator.hpp"
#include "qtrefftz/multiindex.hpp"
#include "qtrefftz/oracle.hpp"
#include "qtrefftz/polynomial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qt::io {

using nlohmann::json;

/// Malformed or inconsistent input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const MultiIndex& i);
MultiIndex multiindex_from_json(const json& j, std::size_t dimension);

/// Exact values are written as "num/den" strings, floats as numbers. Both
/// readers accept either form.
json scalar_part_to_json(const Rational& x);
json scalar_part_to_json(double x);
template <class S>
S scalar_from_json(const json& re, const json& im);
template <>
Rational scalar_from_json<Rational>(const json& re, const json& im);
template <>
Complex scalar_from_json<Complex>(const json& re, const json& im);

std::vector<double> center_from_json(const json& j, std::size_t dimension);

template <class S>
json term_parts(json entry, const S& c) {
  if constexpr (ScalarTraits<S>::exact) {
    entry["re"] = scalar_part_to_json(c);
    entry["im"] = scalar_part_to_json(Rational(0));
  } else {
    entry["re"] = scalar_part_to_json(c.real());
    entry["im"] = scalar_part_to_json(c.imag());
  }
  return entry;
}

template <class S>
json to_json(const GradedPoly<S>& p) {
  json terms = json::array();
  for (const auto& comp : p.components()) {
    for (const auto& [i, c] : comp.terms()) terms.push_back(term_parts(json{{"i", to_json(i)}}, c));
  }
  return json{{"dimension", p.dimension()}, {"center", p.center()}, {"terms", std::move(terms)}};
}

template <class S>
GradedPoly<S> poly_from_json(const json& j) {
  try {
    const std::size_t d = j.at("dimension").get<std::size_t>();
    if (d == 0) throw ParseError("polynomial dimension must be >= 1");
    GradedPoly<S> p(d, center_from_json(j.value("center", json::array()), d));
    for (const auto& t : j.at("terms")) {
      p.add_term(multiindex_from_json(t.at("i"), d),
                 scalar_from_json<S>(t.at("re"), t.value("im", json(0))));
    }
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial: ") + e.what());
  }
}

template <class S>
json to_json(const OperatorSpec<S>& op) {
  json coeffs = json::array();
  for (const auto& [j, c] : op.coefficients()) {
    json taylor = json::array();
    for (const auto& comp : c.components()) {
      for (const auto& [k, a] : comp.terms()) taylor.push_back(term_parts(json{{"k", to_json(k)}}, a));
    }
    coeffs.push_back(json{{"j", to_json(j)}, {"taylor", std::move(taylor)}});
  }
  return json{{"dimension", op.dimension()}, {"order", op.order()},     {"degree", op.degree()},
              {"center", op.center()},       {"coefficients", coeffs}};
}

template <class S>
OperatorSpec<S> operator_from_json(const json& j) {
  try {
    const std::size_t d = j.at("dimension").get<std::size_t>();
    const unsigned order = j.at("order").get<unsigned>();
    const unsigned degree = j.at("degree").get<unsigned>();
    if (d == 0) throw ParseError("operator dimension must be >= 1");
    const std::vector<double> center = center_from_json(j.value("center", json::array()), d);
    typename OperatorSpec<S>::Coefficients coeffs;
    for (const auto& entry : j.at("coefficients")) {
      const MultiIndex idx = multiindex_from_json(entry.at("j"), d);
      GradedPoly<S> c(d, center);
      for (const auto& t : entry.at("taylor")) {
        c.add_term(multiindex_from_json(t.at("k"), d),
                   scalar_from_json<S>(t.at("re"), t.value("im", json(0))));
      }
      auto [it, inserted] = coeffs.emplace(idx, c);
      if (!inserted) it->second += c;
    }
    return OperatorSpec<S>(d, order, degree, center, std::move(coeffs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed operator: ") + e.what());
  }
}

template <class S>
json to_json(const QTBasis<S>& b) {
  json elements = json::array();
  json seeds = json::array();
  for (const auto& e : b.elements) elements.push_back(to_json(e));
  for (const auto& s : b.seeds) seeds.push_back(to_json(s));
  return json{{"operator", to_json(b.op)}, {"elements", elements}, {"seeds", seeds}};
}

/// Elements of a basis document; the embedded operator and seeds are not
/// needed to verify it.
template <class S>
std::vector<GradedPoly<S>> basis_elements_from_json(const json& j) {
  try {
    std::vector<GradedPoly<S>> out;
    for (const auto& e : j.at("elements")) out.push_back(poly_from_json<S>(e));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed basis: ") + e.what());
  }
}

json to_json(const VerificationReport& r);

}  // namespace qt::io

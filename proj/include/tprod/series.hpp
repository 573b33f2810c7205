#ifndef TPROD_SERIES_HPP
#define TPROD_SERIES_HPP

#include <string>
#include <vector>

#include "tprod/rational.hpp"

namespace tprod {

// Dense truncated power series over exact rationals. The truncation order is
// inclusive: a Series of order N stores coefficients of z^0 .. z^N. Every
// binary operation truncates to the minimum of the operand orders, so no
// result ever reports a coefficient its inputs cannot determine.
class Series {
 public:
  explicit Series(long order) : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
  }
  Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
  }

  static Series constant(const Rational& value, long order) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }
  // 1 - z^p, truncated at `order` (the monomial is dropped when p > order).
  static Series one_minus_zp(unsigned long p, long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& operator[](long n) const { return c_[static_cast<std::size_t>(n)]; }
  Rational& operator[](long n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const Series& other) const = default;

 private:
  std::vector<Rational> c_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

// Cauchy product, truncated at min(order a, order b).
Series mul(const Series& a, const Series& b);

// e-fold product via repeated squaring of truncated series, e >= 1.
Series pow(const Series& a, unsigned long e);

// z -> z^p: coefficient a_m moves to index p*m; truncation order is kept.
Series substitute_power(const Series& a, unsigned long p);

// a(z) / (1 - z^p) via running prefix sums over residue classes mod p:
// c_n = a_n + c_{n-p}.
Series div_one_minus_zp(const Series& a, unsigned long p);

// log of a series with constant term 1, via L' = a'/a solved coefficient-wise.
Series log(const Series& a);

// exp of a series with constant term 0, via E' = a'E solved coefficient-wise.
Series exp(const Series& a);

// Formal derivative; order drops by one (an order-0 input yields order-0 zero).
Series derivative(const Series& a);

bool is_zero(const Series& a);

// JSON document {"order": N, "coeffs": ["num/den", ...]}.
std::string series_to_json(const Series& a);
Series series_from_json(const std::string& text);

}  // namespace tprod

#endif

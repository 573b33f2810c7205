#include "tprod/series.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace tprod {

namespace {

inline bool zero(const Rational& x) { return mpq_sgn(x.get_mpq_t()) == 0; }

}  // namespace

Series Series::one_minus_zp(unsigned long p, long order) {
  Series s(order);
  s[0] = 1;
  if (static_cast<long>(p) <= order) s[static_cast<long>(p)] = -1;
  return s;
}

Series add(const Series& a, const Series& b) {
  long n = std::min(a.order(), b.order());
  Series r(n);
  for (long i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

Series sub(const Series& a, const Series& b) {
  long n = std::min(a.order(), b.order());
  Series r(n);
  for (long i = 0; i <= n; ++i) r[i] = a[i] - b[i];
  return r;
}

Series mul(const Series& a, const Series& b) {
  long n = std::min(a.order(), b.order());
  Series r(n);
  for (long i = 0; i <= n; ++i) {
    if (zero(a[i])) continue;
    for (long j = 0; i + j <= n; ++j) {
      if (zero(b[j])) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series pow(const Series& a, unsigned long e) {
  if (e == 0) throw std::invalid_argument("pow: exponent must be >= 1");
  Series acc = Series::constant(1, a.order());
  Series base = a;
  bool acc_is_one = true;
  while (e > 0) {
    if (e & 1) {
      acc = acc_is_one ? base : mul(acc, base);
      acc_is_one = false;
    }
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

Series substitute_power(const Series& a, unsigned long p) {
  validate_prime(p);
  long n = a.order();
  Series r(n);
  for (long m = 0; m * static_cast<long>(p) <= n; ++m) r[m * static_cast<long>(p)] = a[m];
  return r;
}

Series div_one_minus_zp(const Series& a, unsigned long p) {
  validate_prime(p);
  long n = a.order();
  Series r(n);
  for (long i = 0; i <= n; ++i) {
    r[i] = a[i];
    if (i >= static_cast<long>(p)) r[i] += r[i - static_cast<long>(p)];
  }
  return r;
}

Series log(const Series& a) {
  if (a[0] != 1) throw std::invalid_argument("log: constant term must be 1");
  long n = a.order();
  Series l(n);
  // a * L' = a' gives n L_n = n a_n - sum_{i=1}^{n-1} a_i (n-i) L_{n-i}.
  for (long k = 1; k <= n; ++k) {
    Rational acc = Rational(k) * a[k];
    for (long i = 1; i < k; ++i) {
      if (zero(a[i]) || zero(l[k - i])) continue;
      acc -= Rational(k - i) * a[i] * l[k - i];
    }
    l[k] = acc / k;
  }
  return l;
}

Series exp(const Series& a) {
  if (a[0] != 0) throw std::invalid_argument("exp: constant term must be 0");
  long n = a.order();
  Series e(n);
  e[0] = 1;
  // E' = a' E gives n E_n = sum_{k=1}^{n} k a_k E_{n-k}.
  for (long m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (long k = 1; k <= m; ++k) {
      if (zero(a[k]) || zero(e[m - k])) continue;
      acc += Rational(k) * a[k] * e[m - k];
    }
    e[m] = acc / m;
  }
  return e;
}

Series derivative(const Series& a) {
  long n = a.order();
  if (n == 0) return Series(0);
  Series r(n - 1);
  for (long i = 1; i <= n; ++i) r[i - 1] = Rational(i) * a[i];
  return r;
}

bool is_zero(const Series& a) {
  for (long i = 0; i <= a.order(); ++i)
    if (mpq_sgn(a[i].get_mpq_t()) != 0) return false;
  return true;
}

std::string series_to_json(const Series& a) {
  nlohmann::json j;
  j["order"] = a.order();
  auto& arr = j["coeffs"] = nlohmann::json::array();
  for (long i = 0; i <= a.order(); ++i) arr.push_back(to_fraction_string(a[i]));
  return j.dump();
}

Series series_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  long order = j.at("order").get<long>();
  const auto& arr = j.at("coeffs");
  if (static_cast<long>(arr.size()) != order + 1)
    throw std::invalid_argument("series_from_json: coeffs length does not match order");
  Series s(order);
  for (long i = 0; i <= order; ++i) s[i] = parse_rational(arr[static_cast<std::size_t>(i)].get<std::string>());
  return s;
}

}  // namespace tprod

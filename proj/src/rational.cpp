#include "tprod/rational.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace tprod {

Rational make_rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Int(num), Int(den));
}

namespace {

Rational parse_decimal(const std::string& text) {
  // [+-]?digits[.digits][(e|E)[+-]digits]
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("parse_rational: bad exponent in '" + text + "'");
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') throw std::invalid_argument("parse_rational: bad exponent in '" + text + "'");
      exp10 = exp10 * 10 + (c - '0');
      if (exp10 > 100000) throw std::invalid_argument("parse_rational: exponent too large in '" + text + "'");
    }
    if (eneg) exp10 = -exp10;
  }
  if (!seen_digit || i != text.size())
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");

  Int num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  long shift = exp10 - frac_digits;
  Int pow10 = 1;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) return make_rational(num * pow10, Int(1));
  return make_rational(num, pow10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string ns = text.substr(0, slash);
    std::string ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    Int num, den;
    if (mpz_set_str(num.get_mpz_t(), ns.c_str(), 10) != 0 ||
        mpz_set_str(den.get_mpz_t(), ds.c_str(), 10) != 0)
      throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    return make_rational(num, den);
  }
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos)
    return parse_decimal(text);
  Int num;
  if (mpz_set_str(num.get_mpz_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
  return Rational(num);
}

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<uint32_t> out;
    std::vector<bool> sieve(1 << 16, true);
    for (uint32_t i = 2; i < sieve.size(); ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j < sieve.size(); j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs (this witness set decides
// primality exactly for n < 3.3e24).
bool miller_rabin_u64(uint64_t n) {
  static const uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : witnesses) {
    if (a % n == 0) continue;
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (uint32_t q : small_primes()) {
    if (uint64_t(q) * q > n) break;
    if (n % q == 0) return n == q;
  }
  if (n < (1ul << 32)) return true;  // trial division above was exhaustive
  return miller_rabin_u64(n);
}

void validate_prime(unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

unsigned long nu_p(unsigned long p, const Int& n) {
  validate_prime(p);
  if (sgn(n) == 0) throw std::invalid_argument("nu_p: valuation of 0 is infinite");
  Int reduced, pz(p);
  mp_bitcnt_t e = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return static_cast<unsigned long>(e);
}

unsigned long nu_p(unsigned long p, unsigned long n) { return nu_p(p, Int(n)); }

ValuationResult nu_p_rational(unsigned long p, const Rational& x) {
  validate_prime(p);
  if (sgn(x) == 0) return {0, true};
  long vn = static_cast<long>(nu_p(p, Int(x.get_num())));
  long vd = static_cast<long>(nu_p(p, Int(x.get_den())));
  return {vn - vd, false};
}

PIntegralityReport p_integrality_report(unsigned long p, const Rational& x) {
  validate_prime(p);
  PIntegralityReport rep;
  Int den = x.get_den();
  Int leftover, pz(p);
  mp_bitcnt_t k = mpz_remove(leftover.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  rep.denominator_exponent = static_cast<unsigned long>(k);
  rep.denominator_is_p_power = (leftover == 1);
  if (k > 0) {
    rep.numerator_coprime_to_p = !mpz_divisible_p(x.get_num().get_mpz_t(), pz.get_mpz_t());
  }
  return rep;
}

bool is_p_power_denominator(unsigned long p, const Rational& x) {
  return p_integrality_report(p, x).denominator_is_p_power;
}

double log_abs_mpz(const Int& n) {
  if (sgn(n) == 0) throw std::invalid_argument("log_abs_mpz: zero");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double rational_height(const Rational& x) {
  Int num = abs(Int(x.get_num()));
  Int den = x.get_den();
  const Int& m = (cmp(num, den) >= 0) ? num : den;
  return log_abs_mpz(m);
}

}  // namespace tprod

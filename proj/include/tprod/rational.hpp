#ifndef TPROD_RATIONAL_HPP
#define TPROD_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace tprod {

using Int = mpz_class;
using Rational = mpq_class;

// Builds a reduced rational with positive denominator. Throws on den == 0.
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den);

// Parses "a/b", "a", or a decimal string ("0.25", "-1.5e-3") into an exact
// rational. Decimal conversion is exact (power-of-ten denominator).
Rational parse_rational(const std::string& text);

// Canonical "num/den" form, denominator always printed ("0/1", "5/8", "3/1").
std::string to_fraction_string(const Rational& x);

bool is_prime(unsigned long n);

// Throws std::invalid_argument unless p is prime.
void validate_prime(unsigned long p);

// Largest e with p^e | n, for n >= 1. Rejects n = 0 and non-prime p.
unsigned long nu_p(unsigned long p, const Int& n);
unsigned long nu_p(unsigned long p, unsigned long n);

struct ValuationResult {
  long value = 0;
  bool is_infinite = false;  // only for input 0
};

ValuationResult nu_p_rational(unsigned long p, const Rational& x);

struct PIntegralityReport {
  bool denominator_is_p_power = false;
  unsigned long denominator_exponent = 0;       // k with den = p^k when p-power
  bool numerator_coprime_to_p = true;           // meaningful when exponent > 0
};

PIntegralityReport p_integrality_report(unsigned long p, const Rational& x);
bool is_p_power_denominator(unsigned long p, const Rational& x);

// Naive logarithmic height on Q: h(a/b) = log max(|a|, b) for reduced a/b.
// h(0) = 0 falls out of the 0/1 representation.
double rational_height(const Rational& x);

// log|n| for n != 0, accurate for arbitrarily large integers.
double log_abs_mpz(const Int& n);

}  // namespace tprod

#endif

#ifndef TPROD_COEFFS_HPP
#define TPROD_COEFFS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tprod/rational.hpp"
#include "tprod/series.hpp"

namespace tprod {

enum class Algorithm { LogExp, CauchyRecurrence, DiffRecurrence };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

// Taylor coefficients t(0..N) of prod_{j>=1} (1 - z^{p^j})^{-1/p^j} for one
// prime p, together with the algorithm that produced them.
struct CoeffTable {
  unsigned long p = 2;
  long N = 0;
  std::vector<Rational> t;  // length N + 1
  Algorithm algorithm = Algorithm::LogExp;

  Series to_series() const { return Series(t); }
};

// Reference generator: exponentiates the explicit log series whose n-th
// coefficient is nu_p(n)/n.
CoeffTable gen_log_exp(unsigned long p, long N);

// Cauchy-product route: t(pm) = (sum_{j<=m} t(j) - S(m)) / p where S(m) is the
// z^{pm} coefficient of the p-th power of the known prefix. The prefix power
// is maintained incrementally through a binary exponentiation chain.
CoeffTable gen_cauchy_recurrence(unsigned long p, long N);

// Convolution recurrence from the logarithmic derivative:
// t(n) = (1/n) sum_{j>=1} sum_{1<=m<=floor(n/p^j)} t(n - m p^j).
CoeffTable gen_diff_recurrence(unsigned long p, long N);

struct CheckReport {
  bool ok = true;
  long first_bad_index = -1;
  long violations = 0;
  std::string detail;
};

// t(n) must vanish whenever p does not divide n (n >= 1).
CheckReport check_vanishing(const CoeffTable& tab);

// Every nonzero entry must have a pure p-power denominator, with numerator
// coprime to p whenever the denominator exceeds 1.
CheckReport check_p_integrality(const CoeffTable& tab);

// Residual of T(z)^p (1 - z^p) - T(z^p) must vanish identically through N.
CheckReport check_functional_equation(const CoeffTable& tab);

// Embedded reference values for p in {2,3,5,7,11,13,17,19}, n = 0..20.
struct GoldenTable {
  std::vector<unsigned long> primes;
  long N = 20;
  const Rational& entry(unsigned long p, long n) const;
  std::vector<Rational> column(unsigned long p) const;
};

const GoldenTable& golden_table();

// Compares tab against the golden column for tab.p over the overlapping range.
CheckReport check_against_golden(const CoeffTable& tab);

// CSV rows "p,n,numerator,denominator" with a header line.
void coeff_table_to_csv(const CoeffTable& tab, std::ostream& out);

// JSON mirrors the series schema plus "p" and "algorithm".
std::string coeff_table_to_json(const CoeffTable& tab);
CoeffTable coeff_table_from_json(const std::string& text);

// Parses coefficient CSV into (p, n, value) rows; used by table comparison.
struct CsvCoeffRow {
  unsigned long p;
  long n;
  Rational value;
};
std::vector<CsvCoeffRow> parse_coeff_csv(std::istream& in);

struct TableDiff {
  struct Row {
    unsigned long p;
    long n;
    std::string expected;  // empty when the row is missing on that side
    std::string found;
  };
  std::vector<Row> rows;
  bool empty() const { return rows.empty(); }
};

TableDiff compare_coeff_csv(std::istream& a, std::istream& b);

}  // namespace tprod

#endif

#include "tprod/coeffs.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tprod {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::LogExp: return "log-exp";
    case Algorithm::CauchyRecurrence: return "cauchy";
    case Algorithm::DiffRecurrence: return "diff";
  }
  throw std::logic_error("algorithm_name: bad enum");
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "log-exp") return Algorithm::LogExp;
  if (name == "cauchy") return Algorithm::CauchyRecurrence;
  if (name == "diff") return Algorithm::DiffRecurrence;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

CoeffTable gen_log_exp(unsigned long p, long N) {
  validate_prime(p);
  if (N < 0) throw std::invalid_argument("gen_log_exp: negative order");
  Series l(N);
  for (long n = static_cast<long>(p); n <= N; n += static_cast<long>(p)) {
    unsigned long nu = 0;
    long m = n;
    while (m % static_cast<long>(p) == 0) {
      m /= static_cast<long>(p);
      ++nu;
    }
    l[n] = make_rational(Int(nu), Int(n));
  }
  Series t = exp(l);
  return CoeffTable{p, N, t.coeffs(), Algorithm::LogExp};
}

namespace {

inline bool zero(const Rational& x) { return mpq_sgn(x.get_mpq_t()) == 0; }

// dst += u * v, truncated at the common length, skipping zero coefficients.
void acc_mul_into(std::vector<Rational>& dst, const std::vector<Rational>& u,
                  const std::vector<Rational>& v) {
  long n = static_cast<long>(dst.size()) - 1;
  for (long i = 0; i <= n; ++i) {
    if (zero(u[static_cast<std::size_t>(i)])) continue;
    for (long j = 0; i + j <= n; ++j) {
      if (zero(v[static_cast<std::size_t>(j)])) continue;
      dst[static_cast<std::size_t>(i + j)] += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    }
  }
}

// Binary-exponentiation chain for the p-th power of a growing prefix series.
// Appending a term to the base propagates a delta through each chain node, so
// only coefficients affected by the new term are recomputed.
class PrefixPowerChain {
 public:
  PrefixPowerChain(unsigned long p, long N) : n_(N) {
    base_.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    base_[0] = 1;
    // Most significant bit of p is the implicit starting exponent 1.
    int bits = 0;
    while ((p >> bits) > 1) ++bits;
    for (int b = bits - 1; b >= 0; --b) {
      nodes_.push_back({true, {}});
      if ((p >> b) & 1ul) nodes_.push_back({false, {}});
    }
    // The prefix starts as the constant series 1, so every power equals it.
    for (auto& node : nodes_) node.value = base_;
  }

  const Rational& top_coeff(long idx) const {
    const auto& v = nodes_.empty() ? base_ : nodes_.back().value;
    return v[static_cast<std::size_t>(idx)];
  }

  void add_term(long q, const Rational& coeff) {
    std::vector<Rational> d_base(static_cast<std::size_t>(n_) + 1, Rational(0));
    d_base[static_cast<std::size_t>(q)] = coeff;

    std::vector<std::vector<Rational>> deltas;
    deltas.reserve(nodes_.size());
    const std::vector<Rational>* in_old = &base_;
    const std::vector<Rational>* d_in = &d_base;
    for (const auto& node : nodes_) {
      std::vector<Rational> d_out(static_cast<std::size_t>(n_) + 1, Rational(0));
      if (node.is_square) {
        // (X + d)^2 - X^2 = d (2X + d)
        std::vector<Rational> tmp(static_cast<std::size_t>(n_) + 1);
        for (std::size_t i = 0; i < tmp.size(); ++i)
          tmp[i] = 2 * (*in_old)[i] + (*d_in)[i];
        acc_mul_into(d_out, *d_in, tmp);
      } else {
        // (X + dX)(B + dB) - X B = dX (B + dB) + X dB
        std::vector<Rational> base_new(static_cast<std::size_t>(n_) + 1);
        for (std::size_t i = 0; i < base_new.size(); ++i) base_new[i] = base_[i] + d_base[i];
        acc_mul_into(d_out, *d_in, base_new);
        acc_mul_into(d_out, d_base, *in_old);
      }
      deltas.push_back(std::move(d_out));
      in_old = &nodes_[deltas.size() - 1].value;
      d_in = &deltas.back();
    }

    base_[static_cast<std::size_t>(q)] += coeff;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      auto& v = nodes_[i].value;
      for (std::size_t k = static_cast<std::size_t>(q); k < v.size(); ++k)
        if (!zero(deltas[i][k])) v[k] += deltas[i][k];
    }
  }

 private:
  struct Node {
    bool is_square;
    std::vector<Rational> value;
  };
  long n_;
  std::vector<Rational> base_;
  std::vector<Node> nodes_;
};

}  // namespace

CoeffTable gen_cauchy_recurrence(unsigned long p, long N) {
  validate_prime(p);
  if (N < 0) throw std::invalid_argument("gen_cauchy_recurrence: negative order");
  std::vector<Rational> t(static_cast<std::size_t>(N) + 1, Rational(0));
  t[0] = 1;
  std::vector<Rational> psum(static_cast<std::size_t>(N) + 1);  // psum[m] = sum_{j<=m} t(j)
  psum[0] = 1;
  PrefixPowerChain chain(p, N);
  for (long n = 1; n <= N; ++n) {
    if (n % static_cast<long>(p) == 0) {
      long m = n / static_cast<long>(p);
      const Rational& s_m = chain.top_coeff(n);
      Rational val = (psum[static_cast<std::size_t>(m)] - s_m) / Rational(p);
      if (!zero(val)) {
        t[static_cast<std::size_t>(n)] = val;
        chain.add_term(n, val);
      }
    }
    psum[static_cast<std::size_t>(n)] = psum[static_cast<std::size_t>(n - 1)] + t[static_cast<std::size_t>(n)];
  }
  return CoeffTable{p, N, std::move(t), Algorithm::CauchyRecurrence};
}

CoeffTable gen_diff_recurrence(unsigned long p, long N) {
  validate_prime(p);
  if (N < 0) throw std::invalid_argument("gen_diff_recurrence: negative order");
  std::vector<Rational> t(static_cast<std::size_t>(N) + 1, Rational(0));
  t[0] = 1;
  for (long n = 1; n <= N; ++n) {
    Rational acc(0);
    for (unsigned long pj = p; pj <= static_cast<unsigned long>(n);) {
      for (long k = n - static_cast<long>(pj); k >= 0; k -= static_cast<long>(pj)) {
        const Rational& tk = t[static_cast<std::size_t>(k)];
        if (!zero(tk)) acc += tk;
      }
      if (pj > static_cast<unsigned long>(n) / p) break;
      pj *= p;
    }
    if (!zero(acc)) t[static_cast<std::size_t>(n)] = acc / Rational(n);
  }
  return CoeffTable{p, N, std::move(t), Algorithm::DiffRecurrence};
}

CheckReport check_vanishing(const CoeffTable& tab) {
  CheckReport rep;
  for (long n = 1; n <= tab.N; ++n) {
    if (n % static_cast<long>(tab.p) == 0) continue;
    if (mpq_sgn(tab.t[static_cast<std::size_t>(n)].get_mpq_t()) != 0) {
      if (rep.ok) rep.first_bad_index = n;
      rep.ok = false;
      ++rep.violations;
    }
  }
  if (!rep.ok)
    rep.detail = "nonzero coefficient at index " + std::to_string(rep.first_bad_index) +
                 " not divisible by p";
  return rep;
}

CheckReport check_p_integrality(const CoeffTable& tab) {
  CheckReport rep;
  for (long n = 0; n <= tab.N; ++n) {
    const Rational& v = tab.t[static_cast<std::size_t>(n)];
    if (mpq_sgn(v.get_mpq_t()) == 0) continue;
    PIntegralityReport pr = p_integrality_report(tab.p, v);
    if (!pr.denominator_is_p_power || !pr.numerator_coprime_to_p) {
      if (rep.ok) rep.first_bad_index = n;
      rep.ok = false;
      ++rep.violations;
    }
  }
  if (!rep.ok)
    rep.detail = "entry at index " + std::to_string(rep.first_bad_index) +
                 " violates the p-power denominator property";
  return rep;
}

CheckReport check_functional_equation(const CoeffTable& tab) {
  Series t = tab.to_series();
  Series lhs = mul(pow(t, tab.p), Series::one_minus_zp(tab.p, tab.N));
  Series rhs = substitute_power(t, tab.p);
  Series r = sub(lhs, rhs);
  CheckReport rep;
  for (long n = 0; n <= r.order(); ++n) {
    if (mpq_sgn(r[n].get_mpq_t()) != 0) {
      if (rep.ok) rep.first_bad_index = n;
      rep.ok = false;
      ++rep.violations;
    }
  }
  if (!rep.ok)
    rep.detail = "functional-equation residual nonzero first at index " +
                 std::to_string(rep.first_bad_index);
  return rep;
}

namespace {

struct GoldenEntry {
  unsigned long p;
  long n;
  const char* value;
};

// Nonzero reference values; all other (p, n) with n in 0..20 are zero.
const GoldenEntry kGoldenEntries[] = {
    {2, 0, "1"},   {2, 2, "1/2"},  {2, 4, "5/8"},   {2, 6, "7/16"},
    {2, 8, "83/128"}, {2, 10, "119/256"}, {2, 12, "561/1024"}, {2, 14, "887/2048"},
    {2, 16, "20739/32768"}, {2, 18, "31275/65536"}, {2, 20, "144427/262144"},
    {3, 0, "1"},   {3, 3, "1/3"},  {3, 6, "2/9"},   {3, 9, "23/81"},
    {3, 12, "44/243"}, {3, 15, "109/729"}, {3, 18, "1259/6561"},
    {5, 0, "1"},   {5, 5, "1/5"},  {5, 10, "3/25"}, {5, 15, "11/125"}, {5, 20, "44/625"},
    {7, 0, "1"},   {7, 7, "1/7"},  {7, 14, "4/49"},
    {11, 0, "1"},  {11, 11, "1/11"},
    {13, 0, "1"},  {13, 13, "1/13"},
    {17, 0, "1"},  {17, 17, "1/17"},
    {19, 0, "1"},  {19, 19, "1/19"},
};

struct GoldenStorage {
  GoldenTable table;
  std::map<unsigned long, std::vector<Rational>> columns;
};

const GoldenStorage& golden_storage() {
  static const GoldenStorage storage = [] {
    GoldenStorage s;
    s.table.primes = {2, 3, 5, 7, 11, 13, 17, 19};
    s.table.N = 20;
    for (unsigned long p : s.table.primes)
      s.columns[p].assign(21, Rational(0));
    for (const auto& e : kGoldenEntries)
      s.columns[e.p][static_cast<std::size_t>(e.n)] = parse_rational(e.value);
    return s;
  }();
  return storage;
}

}  // namespace

const Rational& GoldenTable::entry(unsigned long p, long n) const {
  const auto& cols = golden_storage().columns;
  auto it = cols.find(p);
  if (it == cols.end()) throw std::invalid_argument("golden table: prime not tabulated");
  if (n < 0 || n > N) throw std::invalid_argument("golden table: index out of range");
  return it->second[static_cast<std::size_t>(n)];
}

std::vector<Rational> GoldenTable::column(unsigned long p) const {
  const auto& cols = golden_storage().columns;
  auto it = cols.find(p);
  if (it == cols.end()) throw std::invalid_argument("golden table: prime not tabulated");
  return it->second;
}

const GoldenTable& golden_table() { return golden_storage().table; }

CheckReport check_against_golden(const CoeffTable& tab) {
  const GoldenTable& g = golden_table();
  CheckReport rep;
  if (std::find(g.primes.begin(), g.primes.end(), tab.p) == g.primes.end()) {
    rep.detail = "prime not covered by the reference table";
    return rep;
  }
  long upto = std::min(tab.N, g.N);
  for (long n = 0; n <= upto; ++n) {
    if (tab.t[static_cast<std::size_t>(n)] != g.entry(tab.p, n)) {
      if (rep.ok) rep.first_bad_index = n;
      rep.ok = false;
      ++rep.violations;
    }
  }
  if (!rep.ok)
    rep.detail = "mismatch against reference values first at index " +
                 std::to_string(rep.first_bad_index);
  return rep;
}

void coeff_table_to_csv(const CoeffTable& tab, std::ostream& out) {
  out << "p,n,numerator,denominator\n";
  for (long n = 0; n <= tab.N; ++n) {
    const Rational& v = tab.t[static_cast<std::size_t>(n)];
    out << tab.p << ',' << n << ',' << v.get_num().get_str() << ','
        << v.get_den().get_str() << '\n';
  }
}

std::string coeff_table_to_json(const CoeffTable& tab) {
  nlohmann::json j;
  j["p"] = tab.p;
  j["algorithm"] = algorithm_name(tab.algorithm);
  j["order"] = tab.N;
  auto& arr = j["coeffs"] = nlohmann::json::array();
  for (const auto& v : tab.t) arr.push_back(to_fraction_string(v));
  return j.dump();
}

CoeffTable coeff_table_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CoeffTable tab;
  tab.p = j.at("p").get<unsigned long>();
  tab.algorithm = algorithm_from_name(j.at("algorithm").get<std::string>());
  tab.N = j.at("order").get<long>();
  const auto& arr = j.at("coeffs");
  if (static_cast<long>(arr.size()) != tab.N + 1)
    throw std::invalid_argument("coeff_table_from_json: coeffs length does not match order");
  tab.t.reserve(arr.size());
  for (const auto& s : arr) tab.t.push_back(parse_rational(s.get<std::string>()));
  return tab;
}

std::vector<CsvCoeffRow> parse_coeff_csv(std::istream& in) {
  std::vector<CsvCoeffRow> rows;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("p,", 0) == 0) continue;  // header
    std::array<std::string, 4> fields;
    std::size_t start = 0;
    for (int f = 0; f < 4; ++f) {
      std::size_t comma = line.find(',', start);
      if (f < 3 && comma == std::string::npos)
        throw std::runtime_error("line " + std::to_string(lineno) + ": expected 4 comma-separated fields");
      if (f == 3 && comma != std::string::npos)
        throw std::runtime_error("line " + std::to_string(lineno) + ": expected 4 comma-separated fields");
      fields[static_cast<std::size_t>(f)] =
          line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      start = comma + 1;
    }
    try {
      CsvCoeffRow row;
      row.p = std::stoul(fields[0]);
      row.n = std::stol(fields[1]);
      row.value = make_rational(Int(fields[2]), Int(fields[3]));
      rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

TableDiff compare_coeff_csv(std::istream& a, std::istream& b) {
  auto rows_a = parse_coeff_csv(a);
  auto rows_b = parse_coeff_csv(b);
  std::map<std::pair<unsigned long, long>, Rational> ma, mb;
  for (auto& r : rows_a) ma[{r.p, r.n}] = r.value;
  for (auto& r : rows_b) mb[{r.p, r.n}] = r.value;
  TableDiff diff;
  for (const auto& [key, val] : ma) {
    auto it = mb.find(key);
    if (it == mb.end()) {
      diff.rows.push_back({key.first, key.second, to_fraction_string(val), ""});
    } else if (it->second != val) {
      diff.rows.push_back({key.first, key.second, to_fraction_string(val),
                           to_fraction_string(it->second)});
    }
  }
  for (const auto& [key, val] : mb)
    if (!ma.count(key)) diff.rows.push_back({key.first, key.second, "", to_fraction_string(val)});
  return diff;
}

}  // namespace tprod

#pragma once
// The proven edge bounds, one linear form (a*n + b)/c per family, each with
// the smallest order it is claimed for. All comparisons are exact integer
// cross-multiplications.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptn {

struct BoundFormula {
  std::string family;
  long long a, b, c;
  int n_min;
};

inline const std::vector<BoundFormula>& bound_table() {
  static const std::vector<BoundFormula> t = {
      {"theta4", 12, -24, 5, 4},     {"theta5", 5, -10, 2, 5},  {"theta6", 18, -36, 7, 6},
      {"c4", 15, -30, 7, 4},         {"c5", 12, -33, 5, 11},    {"c6", 18, -36, 7, 6},
      {"theta6+k5m", 12, -24, 5, 6},
  };
  return t;
}

inline const BoundFormula& bound_formula(const std::string& family) {
  for (const auto& f : bound_table())
    if (f.family == family) return f;
  throw std::invalid_argument("no bound recorded for family " + family);
}

struct Rational {
  long long num = 0, den = 1;
  static Rational make(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
  }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

inline Rational bound_value(const std::string& family, long long n) {
  const BoundFormula& f = bound_formula(family);
  if (n < f.n_min)
    throw std::invalid_argument("bound for " + family + " only applies from n = " + std::to_string(f.n_min));
  return Rational::make(f.a * n + f.b, f.c);
}

inline bool within_bound(long long e, const std::string& family, long long n) {
  const BoundFormula& f = bound_formula(family);
  if (n < f.n_min)
    throw std::invalid_argument("bound for " + family + " only applies from n = " + std::to_string(f.n_min));
  return f.c * e <= f.a * n + f.b;
}

inline long long bound_floor(const std::string& family, long long n) {
  const BoundFormula& f = bound_formula(family);
  if (n < f.n_min)
    throw std::invalid_argument("bound for " + family + " only applies from n = " + std::to_string(f.n_min));
  return (f.a * n + f.b) / f.c;  // numerator nonnegative for n >= n_min
}

inline bool bound_tight(long long e, const std::string& family, long long n) {
  return e == bound_floor(family, n);
}

}  // namespace ptn

#include "leonard/hypergeometric.hpp"

#include <algorithm>

#include "leonard/errors.hpp"

namespace leonard {

namespace {

std::optional<int> ordinary_stop(const Rational& a) {
  if (a <= 0 && is_integer(a)) return static_cast<int>(-numerator(a).convert_to<long>());
  return std::nullopt;
}

// Smallest k ≥ 0 with a q^k = 1. |a q^k| is monotone in k, so the search
// stops as soon as it moves past 1.
std::optional<int> basic_stop(const Rational& a, const Rational& q) {
  if (a == 0) return std::nullopt;
  const Rational aq = abs(q);
  if (aq == 1) return std::nullopt;
  Rational x = a;
  for (int k = 0;; ++k) {
    if (x == 1) return k;
    const Rational m = abs(x);
    if (aq > 1 && m > 1) return std::nullopt;
    if (aq < 1 && m < 1) return std::nullopt;
    x *= q;
  }
}

}  // namespace

Rational pochhammer(const Rational& a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: k must be nonnegative");
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= a + i;
  return out;
}

Rational q_pochhammer(const Rational& a, const Rational& q, int k) {
  if (k < 0) throw std::invalid_argument("q_pochhammer: k must be nonnegative");
  Rational out = 1;
  Rational x = a;
  for (int i = 0; i < k; ++i) {
    out *= 1 - x;
    x *= q;
  }
  return out;
}

std::optional<int> termination_index(const HypergeomSpec& spec) {
  std::optional<int> best;
  for (const auto& a : spec.numerator) {
    const auto n = spec.kind == SeriesKind::ordinary ? ordinary_stop(a) : basic_stop(a, spec.q);
    if (n && (!best || *n < *best)) best = n;
  }
  return best;
}

Rational hypergeom_terminating(const HypergeomSpec& spec) {
  const bool basic = spec.kind == SeriesKind::basic;
  if (basic && (spec.q == 0 || spec.q == 1 || spec.q == -1))
    throw hypergeometric_error("basic series: base q must differ from 0, 1 and -1");
  const auto n = termination_index(spec);
  if (!n) throw hypergeometric_error("series does not terminate");

  Rational sum = 0;
  Rational term = 1;
  for (int k = 0; k <= *n; ++k) {
    sum += term;
    if (k == *n) break;
    // ratio term_{k+1} / term_k
    Rational num = 1;
    Rational den = 1;
    const Rational qk = basic ? ipow(spec.q, k) : Rational(0);
    for (const auto& a : spec.numerator) num *= basic ? 1 - a * qk : a + k;
    for (const auto& b : spec.denominator) den *= basic ? 1 - b * qk : b + k;
    den *= basic ? 1 - spec.q * qk : Rational(k + 1);
    if (den == 0) throw hypergeometric_error("denominator vanishes before the series terminates");
    term = term * num * spec.z / den;
  }
  return sum;
}

}  // namespace leonard

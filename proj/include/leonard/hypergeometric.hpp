#pragma once

#include <optional>
#include <vector>

#include "leonard/scalar.hpp"

namespace leonard {

/// (a)_k = a(a+1)…(a+k−1)
Rational pochhammer(const Rational& a, int k);

/// (a;q)_k = (1−a)(1−aq)…(1−aq^{k−1})
Rational q_pochhammer(const Rational& a, const Rational& q, int k);

enum class SeriesKind { ordinary, basic };

/// Ordinary: Σ_k Π(a)_k / Π(b)_k · z^k / k!
/// Basic:    Σ_k Π(a;q)_k / ((q;q)_k Π(b;q)_k) · z^k
struct HypergeomSpec {
  SeriesKind kind = SeriesKind::ordinary;
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;
  Rational z = 1;
  Rational q = 0;  // basic only
};

/// Index of the last possibly nonzero term, if some numerator parameter
/// forces termination.
std::optional<int> termination_index(const HypergeomSpec& spec);

/// Exact finite sum. Throws hypergeometric_error when the series does not
/// terminate or a denominator factor vanishes before it does.
Rational hypergeom_terminating(const HypergeomSpec& spec);

}  // namespace leonard

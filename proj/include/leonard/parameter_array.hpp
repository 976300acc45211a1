#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leonard/scalar.hpp"

namespace leonard {

/// Parameter array ({θ_i}, {θ*_i}, {φ_i}, {ϕ_i}) of a Leonard system of diameter d.
///
/// The eigenvalue sequences are stored 0-based (size d+1). The split sequences
/// are stored with `varphi[i-1]` holding φ_i (size d); use the 1-based
/// accessors when transcribing formulas.
struct ParameterArray {
  int d = 0;
  std::vector<Rational> theta;
  std::vector<Rational> theta_star;
  std::vector<Rational> varphi;
  std::vector<Rational> phi;

  const Rational& th(int i) const { return theta.at(static_cast<std::size_t>(i)); }
  const Rational& th_star(int i) const { return theta_star.at(static_cast<std::size_t>(i)); }
  const Rational& varphi_at(int i) const { return varphi.at(static_cast<std::size_t>(i - 1)); }
  const Rational& phi_at(int i) const { return phi.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const ParameterArray&, const ParameterArray&) = default;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool valid() const { return failures.empty(); }
};

/// Checks the classification conditions: distinct eigenvalues, nonzero split
/// parameters, the two φ/ϕ relations, and the common three-term recurrence of
/// both eigenvalue sequences. Throws dimension_error on inconsistent lengths.
ValidationReport validate(const ParameterArray& p);

/// Throws invalid_array_error listing every failure when validate() fails.
void require_valid(const ParameterArray& p);

/// Π_{h=0}^{i-1} (z − θ_h).
Rational tau(const ParameterArray& p, int i, const Rational& z);
/// Π_{h=0}^{i-1} (z − θ_{d−h}).
Rational eta(const ParameterArray& p, int i, const Rational& z);
/// Same as tau/eta on the dual eigenvalue sequence.
Rational tau_star(const ParameterArray& p, int i, const Rational& z);
Rational eta_star(const ParameterArray& p, int i, const Rational& z);

/// φ_from ⋯ φ_to (one when the range is empty).
Rational varphi_product(const ParameterArray& p, int from, int to);
/// ϕ_from ⋯ ϕ_to (one when the range is empty).
Rational phi_product(const ParameterArray& p, int from, int to);

/// ϑ_i = Σ_{h<i} (θ_h − θ_{d−h}) / (θ_0 − θ_d), 1 ≤ i ≤ d.
Rational vartheta(const ParameterArray& p, int i);

enum class BaseTag { q_is_minus_one, q_not_minus_one, small_d };

std::string to_string(BaseTag tag);

struct BaseClass {
  std::optional<Rational> beta;  // present iff d >= 3
  BaseTag tag = BaseTag::small_d;
};

/// β from the eigenvalue recurrence, and whether the base q equals −1
/// (β = −2). Throws invalid_array_error when the recurrence is inconsistent.
BaseClass base_class(const ParameterArray& p);

/// False exactly when q = −1 and d is odd.
bool ekr_admissible(const ParameterArray& p);

/// Element of the dihedral group generated by * (duality), ↓ (reversal of
/// the dual idempotents) and ⇓ (reversal of the idempotents).
///
/// Stored as the resulting relative of Φ: whether A and A* trade places, and
/// whether the first and second idempotent sequences are reversed.
class D4Element {
 public:
  constexpr D4Element() = default;

  static constexpr D4Element identity() { return {}; }
  static constexpr D4Element star() { return {true, false, false}; }
  static constexpr D4Element down() { return {false, false, true}; }
  static constexpr D4Element ddown() { return {false, true, false}; }

  /// Parses a whitespace-separated word over {"star", "down", "ddown"}
  /// (also "1"/"id" for the identity); generators apply left to right.
  static D4Element parse(const std::string& word);

  static std::vector<D4Element> all();

  /// First *this, then `next`.
  D4Element then(const D4Element& next) const;

  /// Canonical word: optional "star", then optional "ddown", then optional "down".
  std::vector<D4Element> generators() const;
  std::string word() const;

  bool swapped() const { return swap_; }
  bool first_reversed() const { return rev_first_; }
  bool second_reversed() const { return rev_second_; }

  friend constexpr bool operator==(const D4Element&, const D4Element&) = default;

 private:
  constexpr D4Element(bool swap, bool rev_first, bool rev_second)
      : swap_(swap), rev_first_(rev_first), rev_second_(rev_second) {}

  bool swap_ = false;
  bool rev_first_ = false;
  bool rev_second_ = false;
};

/// Parameter array of the relative Φ^g.
ParameterArray apply_d4(const ParameterArray& p, const D4Element& g);

}  // namespace leonard

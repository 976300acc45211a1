#include "leonard/parameter_array.hpp"

#include <sstream>

#include "leonard/errors.hpp"

namespace leonard {

namespace {

void check_distinct(const std::vector<Rational>& seq, const char* name, ValidationReport& report) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) {
        std::ostringstream msg;
        msg << name << " not distinct (" << name << "[" << i << "] = " << name << "[" << j << "])";
        report.failures.push_back(msg.str());
      }
    }
  }
}

void check_nonzero(const std::vector<Rational>& seq, const char* name, ValidationReport& report) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 0) report.failures.push_back(std::string(name) + "[" + std::to_string(i + 1) + "] zero");
  }
}

// (θ_{i−2} − θ_{i+1}) / (θ_{i−1} − θ_i), or nullopt when the denominator vanishes.
std::optional<Rational> recurrence_ratio(const std::vector<Rational>& th, int i) {
  const auto k = static_cast<std::size_t>(i);
  const Rational den = th[k - 1] - th[k];
  if (den == 0) return std::nullopt;
  return (th[k - 2] - th[k + 1]) / den;
}

Rational product_over(const std::vector<Rational>& seq, int from, int to) {
  Rational result = 1;
  for (int i = from; i <= to; ++i) result *= seq.at(static_cast<std::size_t>(i - 1));
  return result;
}

}  // namespace

ValidationReport validate(const ParameterArray& p) {
  if (p.d < 1) throw dimension_error("parameter array: diameter d must be at least 1");
  const auto n = static_cast<std::size_t>(p.d);
  if (p.theta.size() != n + 1 || p.theta_star.size() != n + 1 || p.varphi.size() != n || p.phi.size() != n) {
    std::ostringstream msg;
    msg << "parameter array: sequence lengths (" << p.theta.size() << ", " << p.theta_star.size() << ", "
        << p.varphi.size() << ", " << p.phi.size() << ") do not match d = " << p.d;
    throw dimension_error(msg.str());
  }

  ValidationReport report;
  check_distinct(p.theta, "theta", report);
  check_distinct(p.theta_star, "theta_star", report);
  check_nonzero(p.varphi, "varphi", report);
  check_nonzero(p.phi, "phi", report);

  // The two split sequences are tied to each other through ϑ. The second
  // relation is the first one read off the ⇓ relative, so checking both keeps
  // validity closed under the D4 action.
  if (p.theta.front() != p.theta.back()) {
    for (int i = 1; i <= p.d; ++i) {
      const Rational vt = vartheta(p, i);
      const Rational phi_expected = p.varphi_at(1) * vt + (p.th_star(i) - p.th_star(0)) * (p.th(p.d - i + 1) - p.th(0));
      if (p.phi_at(i) != phi_expected)
        report.failures.push_back("phi[" + std::to_string(i) + "] inconsistent with varphi[1] and the eigenvalues");
      const Rational varphi_expected = p.phi_at(1) * vt + (p.th_star(i) - p.th_star(0)) * (p.th(i - 1) - p.th(p.d));
      if (p.varphi_at(i) != varphi_expected)
        report.failures.push_back("varphi[" + std::to_string(i) + "] inconsistent with phi[1] and the eigenvalues");
    }
  }

  if (p.d >= 3) {
    std::optional<Rational> common;
    for (int i = 2; i <= p.d - 1; ++i) {
      const auto a = recurrence_ratio(p.theta, i);
      const auto b = recurrence_ratio(p.theta_star, i);
      if (!a || !b) continue;  // already reported as a distinctness failure
      if (*a != *b) {
        report.failures.push_back("theta and theta_star recurrences disagree at i = " + std::to_string(i));
      }
      if (!common) {
        common = *a;
      } else if (*a != *common) {
        report.failures.push_back("theta recurrence ratio not constant at i = " + std::to_string(i));
      }
      if (*b != *common) {
        report.failures.push_back("theta_star recurrence ratio not constant at i = " + std::to_string(i));
      }
    }
  }
  return report;
}

void require_valid(const ParameterArray& p) {
  const auto report = validate(p);
  if (report.valid()) return;
  std::string msg = "invalid parameter array:";
  for (const auto& f : report.failures) msg += " " + f + ";";
  throw invalid_array_error(msg);
}

Rational tau(const ParameterArray& p, int i, const Rational& z) {
  if (i < 0 || i > p.d) throw std::out_of_range("tau: index out of range");
  Rational result = 1;
  for (int h = 0; h < i; ++h) result *= z - p.th(h);
  return result;
}

Rational eta(const ParameterArray& p, int i, const Rational& z) {
  if (i < 0 || i > p.d) throw std::out_of_range("eta: index out of range");
  Rational result = 1;
  for (int h = 0; h < i; ++h) result *= z - p.th(p.d - h);
  return result;
}

Rational tau_star(const ParameterArray& p, int i, const Rational& z) {
  if (i < 0 || i > p.d) throw std::out_of_range("tau_star: index out of range");
  Rational result = 1;
  for (int h = 0; h < i; ++h) result *= z - p.th_star(h);
  return result;
}

Rational eta_star(const ParameterArray& p, int i, const Rational& z) {
  if (i < 0 || i > p.d) throw std::out_of_range("eta_star: index out of range");
  Rational result = 1;
  for (int h = 0; h < i; ++h) result *= z - p.th_star(p.d - h);
  return result;
}

Rational varphi_product(const ParameterArray& p, int from, int to) { return product_over(p.varphi, from, to); }

Rational phi_product(const ParameterArray& p, int from, int to) { return product_over(p.phi, from, to); }

Rational vartheta(const ParameterArray& p, int i) {
  if (i < 1 || i > p.d) throw std::out_of_range("vartheta: index out of range");
  const Rational span = p.th(0) - p.th(p.d);
  if (span == 0) throw invalid_array_error("vartheta: theta[0] = theta[d]");
  Rational total = 0;
  for (int h = 0; h < i; ++h) total += p.th(h) - p.th(p.d - h);
  return total / span;
}

std::string to_string(BaseTag tag) {
  switch (tag) {
    case BaseTag::q_is_minus_one: return "Q_IS_MINUS_ONE";
    case BaseTag::q_not_minus_one: return "Q_NOT_MINUS_ONE";
    case BaseTag::small_d: return "SMALL_D";
  }
  return "?";
}

BaseClass base_class(const ParameterArray& p) {
  if (p.d < 3) return {std::nullopt, BaseTag::small_d};
  std::optional<Rational> ratio;
  for (int i = 2; i <= p.d - 1; ++i) {
    for (const auto* seq : {&p.theta, &p.theta_star}) {
      const auto r = recurrence_ratio(*seq, i);
      if (!r) throw invalid_array_error("base_class: repeated eigenvalue");
      if (!ratio) {
        ratio = *r;
      } else if (*r != *ratio) {
        throw invalid_array_error("base_class: eigenvalue recurrence is inconsistent");
      }
    }
  }
  const Rational beta = *ratio - 1;
  return {beta, beta == -2 ? BaseTag::q_is_minus_one : BaseTag::q_not_minus_one};
}

bool ekr_admissible(const ParameterArray& p) {
  const auto bc = base_class(p);
  return bc.tag != BaseTag::q_is_minus_one || p.d % 2 == 0;
}

// ---------------------------------------------------------------------------
// D4

D4Element D4Element::parse(const std::string& word) {
  std::istringstream in(word);
  std::string token;
  D4Element g;
  while (in >> token) {
    if (token == "star" || token == "*") {
      g = g.then(star());
    } else if (token == "down") {
      g = g.then(down());
    } else if (token == "ddown") {
      g = g.then(ddown());
    } else if (token == "1" || token == "id" || token == "identity") {
      // no-op
    } else {
      throw parse_error("unknown D4 generator \"" + token + "\" (expected star, down, ddown)");
    }
  }
  return g;
}

std::vector<D4Element> D4Element::all() {
  std::vector<D4Element> out;
  for (int bits = 0; bits < 8; ++bits) out.emplace_back(D4Element{(bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0});
  return out;
}

D4Element D4Element::then(const D4Element& next) const {
  D4Element s = *this;
  for (const auto& gen : next.generators()) {
    if (gen.swap_) {
      s = D4Element{!s.swap_, s.rev_second_, s.rev_first_};
    } else if (gen.rev_first_) {
      s.rev_first_ = !s.rev_first_;
    } else if (gen.rev_second_) {
      s.rev_second_ = !s.rev_second_;
    }
  }
  return s;
}

std::vector<D4Element> D4Element::generators() const {
  std::vector<D4Element> gens;
  if (swap_) gens.push_back(star());
  if (rev_first_) gens.push_back(ddown());
  if (rev_second_) gens.push_back(down());
  return gens;
}

std::string D4Element::word() const {
  std::string out;
  for (const auto& g : generators()) {
    if (!out.empty()) out += ' ';
    out += g.swap_ ? "star" : g.rev_first_ ? "ddown" : "down";
  }
  return out.empty() ? "id" : out;
}

namespace {

template <typename T>
std::vector<T> reversed(const std::vector<T>& v) {
  return {v.rbegin(), v.rend()};
}

ParameterArray apply_generator(const ParameterArray& p, const D4Element& gen) {
  ParameterArray out;
  out.d = p.d;
  if (gen == D4Element::star()) {
    out.theta = p.theta_star;
    out.theta_star = p.theta;
    out.varphi = p.varphi;
    out.phi = reversed(p.phi);
  } else if (gen == D4Element::down()) {
    out.theta = p.theta;
    out.theta_star = reversed(p.theta_star);
    out.varphi = reversed(p.phi);
    out.phi = reversed(p.varphi);
  } else {
    out.theta = reversed(p.theta);
    out.theta_star = p.theta_star;
    out.varphi = p.phi;
    out.phi = p.varphi;
  }
  return out;
}

}  // namespace

ParameterArray apply_d4(const ParameterArray& p, const D4Element& g) {
  ParameterArray out = p;
  for (const auto& gen : g.generators()) out = apply_generator(out, gen);
  return out;
}

}  // namespace leonard

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "verona/error.hpp"
#include "verona/scalar.hpp"

namespace verona {

/// Variables x_0 .. x_{kMaxVars-1}; chart coordinates come first, a curve
/// parameter t (when present) takes the next free index.
inline constexpr std::size_t kMaxVars = 16;

using Monomial = std::array<std::uint8_t, kMaxVars>;

/// Sparse multivariate polynomial over Q, lexicographically ordered monomials,
/// no stored zero coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  MultiPoly() = default;
  MultiPoly(const Scalar& constant) {
    if (!is_zero_scalar(constant)) terms_.emplace(Monomial{}, constant);
  }
  MultiPoly(int constant) : MultiPoly(Scalar(constant)) {}

  static MultiPoly variable(std::size_t index) { return monomial(unit(index), Scalar(1)); }
  static MultiPoly monomial(const Monomial& m, const Scalar& coeff) {
    MultiPoly p;
    if (!is_zero_scalar(coeff)) p.terms_.emplace(m, coeff);
    return p;
  }
  static Monomial unit(std::size_t index) {
    require(index < kMaxVars, ErrorKind::DimensionMismatch, "variable index exceeds " + std::to_string(kMaxVars));
    Monomial m{};
    m[index] = 1;
    return m;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
  Scalar constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// One past the largest variable index that occurs.
  std::size_t used_vars() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_)
      for (std::size_t v = 0; v < kMaxVars; ++v)
        if (m[v] != 0) n = std::max(n, v + 1);
    return n;
  }

  long degree_in(std::size_t var) const {
    long d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m[var]);
    return d;
  }

  long total_degree() const {
    long d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) {
      long s = 0;
      for (auto e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Scalar& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(product(ma, mb), ca * cb);
    return out;
  }
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      --d[var];
      out.terms_.emplace(d, c * m[var]);
    }
    return out;
  }

  /// Replaces x_var by the constant `value`.
  MultiPoly substitute(std::size_t var, const Scalar& value) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
      Monomial r = m;
      r[var] = 0;
      Scalar f = c;
      for (std::uint8_t k = 0; k < m[var]; ++k) f *= value;
      out.add_term(r, f);
    }
    return out;
  }

  /// Replaces x_var by the polynomial `value`.
  MultiPoly compose(std::size_t var, const MultiPoly& value) const {
    MultiPoly out;
    std::vector<MultiPoly> powers{MultiPoly(1)};
    for (const auto& [m, c] : terms_) {
      while (powers.size() <= m[var]) powers.push_back(powers.back() * value);
      Monomial r = m;
      r[var] = 0;
      out += monomial(r, c) * powers[m[var]];
    }
    return out;
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    Scalar acc = 0;
    for (const auto& [m, c] : terms_) {
      Scalar term = c;
      for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (m[v] == 0) continue;
        require(v < point.size(), ErrorKind::DimensionMismatch, "evaluation point misses a variable");
        for (std::uint8_t k = 0; k < m[v]; ++k) term *= point[v];
      }
      acc += term;
    }
    return acc;
  }

  /// Exact quotient by `divisor`, or nullopt when the division leaves a remainder.
  std::optional<MultiPoly> exact_divide(const MultiPoly& divisor) const {
    require(!divisor.is_zero(), ErrorKind::DimensionMismatch, "division by the zero polynomial");
    MultiPoly rem = *this, quot;
    const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
      const auto& [rm, rc] = *rem.terms_.rbegin();
      Monomial q{};
      for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (rm[v] < lead_m[v]) return std::nullopt;
        q[v] = static_cast<std::uint8_t>(rm[v] - lead_m[v]);
      }
      const MultiPoly step = monomial(q, rc / lead_c);
      quot += step;
      rem -= step * divisor;
    }
    return quot;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string coeff = verona::to_string(c);
      const bool negative = coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
      std::string mono;
      for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (m[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(v + 1);
        if (m[v] > 1) mono += "^" + std::to_string(m[v]);
      }
      if (mono.empty()) out += coeff;
      else out += (coeff == "1" ? "" : coeff + "*") + mono;
    }
    return out;
  }

 private:
  static bool is_zero_scalar(const Scalar& s) { return sgn(s) == 0; }

  static Monomial product(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      const unsigned e = unsigned(a[v]) + unsigned(b[v]);
      require(e < 256, ErrorKind::DimensionMismatch, "exponent overflow");
      out[v] = static_cast<std::uint8_t>(e);
    }
    return out;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (is_zero_scalar(it->second)) terms_.erase(it);
  }

  Terms terms_;
};

}  // namespace verona

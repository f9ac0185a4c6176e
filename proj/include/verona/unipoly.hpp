#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "verona/scalar.hpp"

namespace verona {

/// Univariate polynomial in the curve parameter t, lowest degree first.
/// The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(Scalar constant) : coeffs_{std::move(constant)} { trim(); }
  UniPoly(int constant) : UniPoly(Scalar(constant)) {}
  explicit UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// a + b t
  static UniPoly linear(const Scalar& a, const Scalar& b) { return UniPoly(std::vector<Scalar>{a, b}); }
  static UniPoly t() { return linear(0, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  Scalar operator()(const Scalar& t) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly pow(unsigned e) const {
    UniPoly acc(1);
    for (unsigned k = 0; k < e; ++k) acc *= *this;
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    UniPoly out = *this;
    const Scalar lead = leading();
    for (auto& c : out.coeffs_) c /= lead;
    return out;
  }

  /// Quotient and remainder of Euclidean division by a nonzero divisor.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    UniPoly rem = a;
    if (b.is_zero()) fail(ErrorKind::DimensionMismatch, "polynomial division by zero");
    std::vector<Scalar> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
      const Scalar f = rem.leading() / b.leading();
      quot[shift] = f;
      for (std::size_t k = 0; k < b.coeffs_.size(); ++k) rem.coeffs_[k + shift] -= f * b.coeffs_[k];
      rem.trim();
    }
    return {UniPoly(std::move(quot)), rem};
  }

  friend UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (verona::is_zero(coeffs_[k])) continue;
      std::string c = verona::to_string(coeffs_[k]);
      if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
      else if (c[0] == '-') out += "-";
      if (c[0] == '-') c.erase(0, 1);
      const bool unit = c == "1" && k > 0;
      if (!unit) out += c;
      if (k > 0) out += (unit ? "" : "*") + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && verona::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

}  // namespace verona

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verona/exact_linalg.hpp"
#include "verona/projective.hpp"
#include "verona/unipoly.hpp"

namespace verona {

using PolyVector = std::vector<UniPoly>;

/// A degree-q curve t -> <g_1(t), ..., g_N(t)> in the Grassmannian of ambient_dim-space.
/// Generators are stored dehomogenized in t; q bounds every coefficient degree.
class GrassCurve {
 public:
  GrassCurve() = default;
  GrassCurve(std::size_t ambient_dim, std::vector<PolyVector> generators, std::size_t degree)
      : ambient_(ambient_dim), generators_(std::move(generators)), degree_(degree) {
    require(ambient_ > 0, ErrorKind::EmptyAmbient, "curve ambient dimension is 0");
    for (const auto& g : generators_) {
      require(g.size() == ambient_, ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
      for (const auto& entry : g)
        require(entry.degree() <= static_cast<long>(degree_), ErrorKind::DimensionMismatch,
                "generator entry exceeds the declared degree " + std::to_string(degree_));
    }
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<PolyVector>& generators() const noexcept { return generators_; }

  /// Largest coefficient degree actually present (-1 for an all-zero curve).
  long actual_degree() const {
    long d = -1;
    for (const auto& g : generators_)
      for (const auto& entry : g) d = std::max(d, entry.degree());
    return d;
  }

  /// Generator values at s; at infinity the coefficients of t^q.
  QMatrix generator_values(const ProjParam& s) const {
    QMatrix rows(generators_.size(), ambient_);
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t k = 0; k < ambient_; ++k)
        rows(i, k) = s.is_infinite() ? generators_[i][k].coeff(degree_) : generators_[i][k](s.value());
    return rows;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<PolyVector> generators_;
  std::size_t degree_ = 0;
};

inline Subspace eval_curve(const GrassCurve& curve, const ProjParam& s) {
  const QMatrix rows = curve.generator_values(s);
  if (rows.rows() == 0) return Subspace::zero(curve.ambient_dim());
  Subspace out = canonicalize(rows);
  if (out.dim() != curve.generator_count())
    fail(ErrorKind::DegenerateEvaluation, "generators are dependent at t = " + to_string(s));
  return out;
}

inline ProjParam mobius_apply(const MobiusMap& m, const ProjParam& s) { return m(s); }

/// Curve C' with eval(C', s) = eval(C, m(s)) and the same degree bound.
/// Each generator g of degree q becomes sum_k g_k (a s + b)^k (c s + d)^(q-k).
inline GrassCurve mobius_reparam(const MobiusMap& m, const GrassCurve& curve) {
  const std::size_t q = curve.degree();
  const UniPoly num = UniPoly::linear(m.b(), m.a());
  const UniPoly den = UniPoly::linear(m.d(), m.c());
  std::vector<UniPoly> num_pow{UniPoly(1)}, den_pow{UniPoly(1)};
  for (std::size_t k = 1; k <= q; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  std::vector<PolyVector> out;
  for (const auto& g : curve.generators()) {
    PolyVector h(g.size());
    for (std::size_t e = 0; e < g.size(); ++e)
      for (std::size_t k = 0; k <= q; ++k) {
        const Scalar coeff = g[e].coeff(k);
        if (!is_zero(coeff)) h[e] += UniPoly(coeff) * num_pow[k] * den_pow[q - k];
      }
    out.push_back(std::move(h));
  }
  return GrassCurve(curve.ambient_dim(), std::move(out), q);
}

namespace detail {
/// Rational roots of a nonzero polynomial with small integer-sized coefficients.
inline std::vector<Scalar> rational_roots(const UniPoly& f);
}

/// The parameter at which the curve passes through `target`, if any.
/// A finite s solves A g_i(s) = 0 for every generator, A being the annihilator of target,
/// so candidates are the common rational roots of those polynomials.
inline std::vector<ProjParam> curve_parameters_of(const GrassCurve& curve, const Subspace& target) {
  require(target.ambient_dim() == curve.ambient_dim(), ErrorKind::DimensionMismatch, "target ambient differs");
  std::vector<ProjParam> hits;
  auto matches = [&](const ProjParam& s) {
    try {
      return eval_curve(curve, s) == target;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateEvaluation) return false;
      throw;
    }
  };
  if (target.dim() != curve.generator_count()) return hits;
  const Subspace ann = annihilator(target);
  UniPoly common;
  for (std::size_t r = 0; r < ann.dim(); ++r)
    for (const auto& g : curve.generators()) {
      UniPoly f;
      for (std::size_t k = 0; k < curve.ambient_dim(); ++k) f += UniPoly(ann.basis()(r, k)) * g[k];
      common = gcd(common, f);
    }
  if (common.is_zero()) {
    // Every finite parameter lands in target: the curve is constant there.
    hits.push_back(ProjParam(0));
  } else {
    for (const auto& root : detail::rational_roots(common))
      if (matches(ProjParam(root))) hits.push_back(ProjParam(root));
  }
  if (matches(ProjParam::infinity())) hits.push_back(ProjParam::infinity());
  return hits;
}

inline bool curve_contains(const GrassCurve& curve, const Subspace& target) {
  return !curve_parameters_of(curve, target).empty();
}

namespace detail {
inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  require(n < mpz_class("1000000000000"), ErrorKind::ValidationError,
          "rational root search needs coefficients below 10^12");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::vector<Scalar> rational_roots(const UniPoly& f) {
  std::vector<Scalar> roots;
  if (f.degree() <= 0) return roots;
  std::size_t low = 0;
  while (is_zero(f.coeff(low))) ++low;
  if (low > 0) roots.push_back(0);
  const UniPoly g(std::vector<Scalar>(f.coeffs().begin() + static_cast<long>(low), f.coeffs().end()));
  if (g.degree() == 1) {
    roots.push_back(-g.coeff(0) / g.coeff(1));
  } else if (g.degree() == 2) {
    const Scalar a = g.coeff(2), b = g.coeff(1), disc = b * b - 4 * a * g.coeff(0);
    if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t()) && mpz_perfect_square_p(disc.get_den_mpz_t())) {
      mpz_class num, den;
      mpz_sqrt(num.get_mpz_t(), disc.get_num_mpz_t());
      mpz_sqrt(den.get_mpz_t(), disc.get_den_mpz_t());
      const Scalar root = Scalar(num) / Scalar(den);
      roots.push_back((-b + root) / (2 * a));
      if (!is_zero(root)) roots.push_back((-b - root) / (2 * a));
    }
  } else if (g.degree() > 2) {
    // Clear denominators, then apply the rational root theorem.
    mpz_class lcm = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class lead(g.leading() * lcm), constant(g.coeff(0) * lcm);
    for (const auto& num : positive_divisors(constant))
      for (const auto& den : positive_divisors(lead))
        for (int sign : {1, -1}) {
          Scalar cand(num * sign, den);
          cand.canonicalize();
          if (is_zero(g(cand)) && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}
}  // namespace detail

}  // namespace verona

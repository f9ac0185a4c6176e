#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "verona/error.hpp"
#include "verona/scalar.hpp"

namespace verona {

/// A point of the projective line: a finite rational t (meaning [t:1]) or infinity ([1:0]).
class ProjParam {
 public:
  ProjParam() : value_(Scalar(0)) {}
  ProjParam(Scalar t) : value_(std::move(t)) {}
  ProjParam(int t) : value_(Scalar(t)) {}
  static ProjParam infinity() {
    ProjParam p;
    p.value_.reset();
    return p;
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  const Scalar& value() const {
    require(value_.has_value(), ErrorKind::ValidationError, "finite value requested from infinite parameter");
    return *value_;
  }

  /// Homogeneous coordinates [x:y].
  std::array<Scalar, 2> homogeneous() const {
    if (!value_) return {Scalar(1), Scalar(0)};
    return {*value_, Scalar(1)};
  }
  static ProjParam from_homogeneous(const Scalar& x, const Scalar& y) {
    if (is_zero(y)) {
      require(!is_zero(x), ErrorKind::SingularMap, "[0:0] is not a point of the projective line");
      return infinity();
    }
    return ProjParam(Scalar(x / y));
  }

  friend bool operator==(const ProjParam& a, const ProjParam& b) { return a.value_ == b.value_; }

 private:
  std::optional<Scalar> value_;
};

/// "a/b" or the literal "inf".
inline ProjParam parse_param(std::string_view text) {
  if (text == "inf") return ProjParam::infinity();
  return ProjParam(parse_scalar(text));
}

inline std::string to_string(const ProjParam& p) { return p.is_infinite() ? "inf" : to_string(p.value()); }

inline void require_distinct(const std::vector<ProjParam>& params) {
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (params[i] == params[j])
        fail(ErrorKind::DuplicateParameter, "parameter " + to_string(params[i]) + " appears twice");
}

/// t -> (a t + b) / (c t + d) with ad - bc != 0, normalized so the first nonzero
/// entry in row-major order is 1.
class MobiusMap {
 public:
  MobiusMap() : MobiusMap(1, 0, 0, 1) {}
  MobiusMap(Scalar a, Scalar b, Scalar c, Scalar d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    require(!is_zero(det()), ErrorKind::SingularMap, "Mobius matrix has zero determinant");
    const Scalar lead = is_zero(m_[0]) ? m_[1] : m_[0];
    for (auto& v : m_) v /= lead;
  }

  const Scalar& a() const noexcept { return m_[0]; }
  const Scalar& b() const noexcept { return m_[1]; }
  const Scalar& c() const noexcept { return m_[2]; }
  const Scalar& d() const noexcept { return m_[3]; }
  Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  ProjParam operator()(const ProjParam& s) const {
    const auto [x, y] = s.homogeneous();
    return ProjParam::from_homogeneous(m_[0] * x + m_[1] * y, m_[2] * x + m_[3] * y);
  }

  MobiusMap inverse() const { return MobiusMap(m_[3], -m_[1], -m_[2], m_[0]); }

  /// (f * g)(s) = f(g(s))
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
    return MobiusMap(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(), f.c() * g.a() + f.d() * g.c(),
                     f.c() * g.b() + f.d() * g.d());
  }

  friend bool operator==(const MobiusMap& x, const MobiusMap& y) { return x.m_ == y.m_; }

 private:
  std::array<Scalar, 4> m_;
};

namespace detail {
inline Scalar cross(const std::array<Scalar, 2>& u, const std::array<Scalar, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

/// Map sending (a, b, c) to (0, 1, inf).
inline MobiusMap to_standard_frame(const ProjParam& a, const ProjParam& b, const ProjParam& c) {
  require_distinct({a, b, c});
  const auto ha = a.homogeneous(), hb = b.homogeneous(), hc = c.homogeneous();
  const Scalar bc = cross(hb, hc), ba = cross(hb, ha);
  // z -> cross(z, a) * cross(b, c) / (cross(z, c) * cross(b, a))
  return MobiusMap(bc * ha[1], -bc * ha[0], ba * hc[1], -ba * hc[0]);
}
}  // namespace detail

/// The unique Mobius map sending a -> a2, b -> b2, c -> c2.
inline MobiusMap mobius_three_point(const ProjParam& a, const ProjParam& b, const ProjParam& c, const ProjParam& a2,
                                    const ProjParam& b2, const ProjParam& c2) {
  const MobiusMap from = detail::to_standard_frame(a, b, c);
  const MobiusMap to = detail::to_standard_frame(a2, b2, c2);
  return to.inverse() * from;
}

}  // namespace verona

#ifndef OEK_OCTONION_HPP
#define OEK_OCTONION_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <type_traits>

#include <Eigen/Core>

#include "oek/errors.hpp"
#include "oek/structure_table.hpp"

namespace oek {

// x0 + x1 e1 + ... + x7 e7, stored as an Eigen 8-vector in basis order.
// Scalar is double for everything numeric; the template exists so the same
// arithmetic runs on automatic-differentiation and extended-precision scalars.
template <typename Scalar>
class Octonion {
 public:
  using Coeffs = Eigen::Matrix<Scalar, 8, 1>;

  Octonion() : x_(Coeffs::Zero()) {}
  explicit Octonion(const Scalar& real) : x_(Coeffs::Zero()) {
    x_[0] = real;
    require_finite(x_);
  }
  explicit Octonion(const Coeffs& x) : x_(x) { require_finite(x_); }
  Octonion(const Scalar& x0, const Scalar& x1, const Scalar& x2, const Scalar& x3,
           const Scalar& x4, const Scalar& x5, const Scalar& x6, const Scalar& x7) {
    x_ << x0, x1, x2, x3, x4, x5, x6, x7;
    require_finite(x_);
  }

  // e_k; basis(0) is 1.
  static Octonion basis(int k) {
    Octonion o;
    o.x_[k] = Scalar(1);
    return o;
  }

  const Coeffs& coeffs() const { return x_; }
  const Scalar& operator[](int k) const { return x_[k]; }
  const Scalar& real() const { return x_[0]; }
  Octonion imag() const {
    Octonion o = *this;
    o.x_[0] = Scalar(0);
    return o;
  }
  bool is_zero() const { return (x_.array() == Scalar(0)).all(); }

  template <typename NewScalar>
  Octonion<NewScalar> cast() const {
    return Octonion<NewScalar>(x_.template cast<NewScalar>());
  }

  Octonion operator-() const { return Octonion(Coeffs(-x_), Unchecked{}); }
  Octonion& operator+=(const Octonion& o) { return *this = *this + o; }
  Octonion& operator-=(const Octonion& o) { return *this = *this - o; }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    require_finite(a.x_);
    require_finite(b.x_);
    return Octonion(Coeffs(a.x_ + b.x_), Unchecked{});
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    require_finite(a.x_);
    require_finite(b.x_);
    return Octonion(Coeffs(a.x_ - b.x_), Unchecked{});
  }
  friend Octonion operator*(const Scalar& s, const Octonion& a) {
    require_finite(a.x_);
    require_finite_scalar(s);
    return Octonion(Coeffs(a.x_ * s), Unchecked{});
  }
  friend Octonion operator*(const Octonion& a, const Scalar& s) { return s * a; }
  friend Octonion operator/(const Octonion& a, const Scalar& s) {
    require_finite_scalar(s);
    if (s == Scalar(0)) throw DomainError("octonion divided by zero");
    return Octonion(Coeffs(a.x_ / s), Unchecked{});
  }
  // Product under the default (corrected) table.
  friend Octonion operator*(const Octonion& a, const Octonion& b) {
    return mul(a, b, default_table());
  }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.x_ == b.x_; }

  friend Octonion mul(const Octonion& a, const Octonion& b, const StructureTable& table) {
    table.require_well_formed();
    require_finite(a.x_);
    require_finite(b.x_);
    Coeffs r = Coeffs::Zero();
    for (int i = 0; i < 8; ++i) {
      if (a.x_[i] == Scalar(0)) continue;
      for (int j = 0; j < 8; ++j) {
        const int k = table.product_index(i, j);
        if (table.product_sign(i, j) > 0)
          r[k] += a.x_[i] * b.x_[j];
        else
          r[k] -= a.x_[i] * b.x_[j];
      }
    }
    return Octonion(r, Unchecked{});
  }

 private:
  struct Unchecked {};
  Octonion(const Coeffs& x, Unchecked) : x_(x) {}

  static void require_finite(const Coeffs& x) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      if (!x.allFinite()) throw NonFiniteError("non-finite octonion coordinate");
    }
  }
  static void require_finite_scalar(const Scalar& s) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      if (!std::isfinite(s)) throw NonFiniteError("non-finite real scalar");
    }
  }

  Coeffs x_;
};

using OctonionD = Octonion<double>;

template <typename Scalar>
Octonion<Scalar> conjugate(const Octonion<Scalar>& a) {
  typename Octonion<Scalar>::Coeffs x = -a.coeffs();
  x[0] = a.real();
  return Octonion<Scalar>(x);
}

// Euclidean inner product in R^8.
template <typename Scalar>
Scalar dot(const Octonion<Scalar>& a, const Octonion<Scalar>& b) {
  return a.coeffs().dot(b.coeffs());
}

template <typename Scalar>
Scalar squared_norm(const Octonion<Scalar>& a) {
  return a.coeffs().squaredNorm();
}

// |a| over all eight coordinates, x0 included.
template <typename Scalar>
Scalar norm(const Octonion<Scalar>& a) {
  using std::sqrt;
  return sqrt(squared_norm(a));
}

template <typename Scalar>
Octonion<Scalar> inverse(const Octonion<Scalar>& a) {
  const Scalar n2 = squared_norm(a);
  if (n2 == Scalar(0)) throw DomainError("inverse of the zero octonion");
  return conjugate(a) / n2;
}

// q^k. Any two octonions generate an associative subalgebra, so powers are
// unambiguous; computed as q(q(...q)).
template <typename Scalar>
Octonion<Scalar> power(const Octonion<Scalar>& q, int k,
                       const StructureTable& table = default_table()) {
  if (k < 0) throw DomainError("negative exponent");
  Octonion<Scalar> r(Scalar(1));
  for (int i = 0; i < k; ++i) r = mul(q, r, table);
  return r;
}

// Angle between a and b as vectors of R^8, in [0, pi].
template <typename Scalar>
Scalar angle(const Octonion<Scalar>& a, const Octonion<Scalar>& b) {
  using std::acos;
  const Scalar na = norm(a);
  const Scalar nb = norm(b);
  if (na == Scalar(0) || nb == Scalar(0)) throw DomainError("angle with the zero octonion");
  Scalar c = dot(a, b) / (na * nb);
  if (c > Scalar(1)) c = Scalar(1);
  if (c < Scalar(-1)) c = Scalar(-1);
  return acos(c);
}

// Element of the unit sphere of purely imaginary octonions; squares to -1.
template <typename Scalar>
class ImaginaryUnit {
 public:
  // Normalizes the imaginary part of `direction`. The real part must vanish
  // to within `tol` and the imaginary part must be nonzero.
  explicit ImaginaryUnit(const Octonion<Scalar>& direction, Scalar tol = Scalar(1e-12)) {
    using std::abs;
    if (abs(direction.real()) > tol)
      throw DomainError("imaginary unit must have zero real part");
    const Octonion<Scalar> im = direction.imag();
    const Scalar n = norm(im);
    if (n == Scalar(0)) throw DomainError("imaginary unit direction is zero");
    unit_ = im / n;
  }

  static ImaginaryUnit basis(int k) {
    if (k < 1 || k > 7) throw DomainError("imaginary basis index must be in 1..7");
    return ImaginaryUnit(Octonion<Scalar>::basis(k));
  }

  const Octonion<Scalar>& value() const { return unit_; }
  operator const Octonion<Scalar>&() const { return unit_; }

 private:
  Octonion<Scalar> unit_;
};

using ImaginaryUnitD = ImaginaryUnit<double>;

// Uniform sample of the imaginary unit sphere; same seed, same unit.
inline ImaginaryUnitD random_unit_imaginary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (;;) {
    OctonionD::Coeffs x = OctonionD::Coeffs::Zero();
    for (int k = 1; k < 8; ++k) x[k] = gauss(rng);
    if (x.norm() > 1e-8) return ImaginaryUnitD(OctonionD(x));
  }
}

}  // namespace oek

#endif  // OEK_OCTONION_HPP

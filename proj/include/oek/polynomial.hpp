#ifndef OEK_POLYNOMIAL_HPP
#define OEK_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "oek/errors.hpp"
#include "oek/octonion.hpp"

namespace oek {

// p(q) = a0 + q a1 + q^2 a2 + ... + q^n an, coefficients on the right.
// Trailing coefficients that are exactly zero are trimmed; the zero
// polynomial is stored as the single coefficient 0.
template <typename Scalar>
class Polynomial {
 public:
  using Coefficient = Octonion<Scalar>;

  Polynomial() : coeffs_{Coefficient()} {}
  explicit Polynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  Polynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial from_real(const std::vector<Scalar>& coeffs) {
    std::vector<Coefficient> c;
    c.reserve(coeffs.size());
    for (const Scalar& r : coeffs) c.emplace_back(r);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  const std::vector<Coefficient>& coeffs() const { return coeffs_; }
  const Coefficient& operator[](int k) const { return coeffs_[k]; }
  const Coefficient& leading() const { return coeffs_.back(); }

  bool has_real_coefficients(Scalar tol = Scalar(0)) const {
    using std::abs;
    for (const auto& a : coeffs_)
      for (int l = 1; l < 8; ++l)
        if (abs(a[l]) > tol) return false;
    return true;
  }

  template <typename NewScalar>
  Polynomial<NewScalar> cast() const {
    std::vector<Octonion<NewScalar>> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a.template cast<NewScalar>());
    return Polynomial<NewScalar>(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back();
  }

  std::vector<Coefficient> coeffs_;
};

using OctPolynomial = Polynomial<double>;

// Reference evaluation: sum of power(q, k) * a_k, one product per term.
// Horner nesting agrees only through the left alternative law, which a
// custom (possibly broken) table need not satisfy, so the literal sum is kept.
template <typename Scalar>
Octonion<Scalar> eval(const Polynomial<Scalar>& p, const Octonion<Scalar>& q,
                      const StructureTable& table = default_table()) {
  Octonion<Scalar> sum = p[0];
  Octonion<Scalar> qk(Scalar(1));
  for (int k = 1; k <= p.degree(); ++k) {
    qk = mul(q, qk, table);
    sum += mul(qk, p[k], table);
  }
  return sum;
}

// Regular product: c_n = sum_k a_k b_{n-k}, in that order.
template <typename Scalar>
Polynomial<Scalar> star(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g,
                        const StructureTable& table = default_table()) {
  std::vector<Octonion<Scalar>> c(f.degree() + g.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i)
    for (int j = 0; j <= g.degree(); ++j) c[i + j] += mul(f[i], g[j], table);
  return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> operator+(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  std::vector<Octonion<Scalar>> c(std::max(f.degree(), g.degree()) + 1);
  for (int k = 0; k <= f.degree(); ++k) c[k] += f[k];
  for (int k = 0; k <= g.degree(); ++k) c[k] += g[k];
  return Polynomial<Scalar>(std::move(c));
}

// p * (1 - q) = a0 + q(a1 - a0) + ... + q^n(an - a_{n-1}) - q^{n+1} an.
template <typename Scalar>
Polynomial<Scalar> one_minus_q_transform(const Polynomial<Scalar>& p) {
  const int n = p.degree();
  std::vector<Octonion<Scalar>> c(n + 2);
  c[0] = p[0];
  for (int k = 1; k <= n; ++k) c[k] = p[k] - p[k - 1];
  c[n + 1] = -p[n];
  return Polynomial<Scalar>(std::move(c));
}

// q^n p(1/q): coefficients in reverse order.
template <typename Scalar>
Polynomial<Scalar> reverse(const Polynomial<Scalar>& p) {
  std::vector<Octonion<Scalar>> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Polynomial<Scalar>(std::move(c));
}

// p(q / s): coefficient a_k becomes a_k s^{-k}.
template <typename Scalar>
Polynomial<Scalar> scale_arg(const Polynomial<Scalar>& p, Scalar s) {
  if (!(s > Scalar(0))) throw DomainError("scale_arg requires a positive scale");
  std::vector<Octonion<Scalar>> c;
  c.reserve(p.degree() + 1);
  Scalar factor(1);
  for (int k = 0; k <= p.degree(); ++k) {
    c.push_back(p[k] * factor);
    factor /= s;
  }
  return Polynomial<Scalar>(std::move(c));
}

// Restriction of a polynomial with coefficients in L_I = R + RI to that
// slice, viewed as a complex polynomial via x + yI <-> x + iy.
template <typename Scalar>
class SlicePolynomial {
 public:
  using Complex = std::complex<Scalar>;
  using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  SlicePolynomial(ComplexVector coeffs, ImaginaryUnit<Scalar> unit)
      : coeffs_(std::move(coeffs)), unit_(std::move(unit)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ComplexVector& coeffs() const { return coeffs_; }
  const ImaginaryUnit<Scalar>& unit() const { return unit_; }

  Complex eval(const Complex& z) const {
    Complex sum(0);
    for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) sum = sum * z + coeffs_[k];
    return sum;
  }

  // x + iy -> x + yI
  Octonion<Scalar> embed(const Complex& z) const {
    return Octonion<Scalar>(z.real()) + z.imag() * unit_.value();
  }

 private:
  ComplexVector coeffs_;
  ImaginaryUnit<Scalar> unit_;
};

// Precondition: every coefficient lies in L_I within `tol` per coordinate.
// Throws SliceMembershipError naming the first offending index.
template <typename Scalar>
SlicePolynomial<Scalar> restrict_to_slice(const Polynomial<Scalar>& p,
                                          const ImaginaryUnit<Scalar>& unit,
                                          Scalar tol = Scalar(1e-12)) {
  using std::abs;
  typename SlicePolynomial<Scalar>::ComplexVector c(p.degree() + 1);
  const Octonion<Scalar>& I = unit.value();
  for (int k = 0; k <= p.degree(); ++k) {
    const Octonion<Scalar> im = p[k].imag();
    const Scalar y = dot(im, I);
    const Octonion<Scalar> off = im - y * I;
    if ((off.coeffs().array().abs() > tol).any()) {
      std::ostringstream os;
      os << "coefficient a_" << k << " does not lie in the slice R + RI";
      throw SliceMembershipError(k, os.str());
    }
    c[k] = std::complex<Scalar>(p[k].real(), y);
  }
  return SlicePolynomial<Scalar>(std::move(c), unit);
}

}  // namespace oek

#endif  // OEK_POLYNOMIAL_HPP

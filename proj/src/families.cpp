#include "oek/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace oek {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::ek: return "ek";
    case Family::moduli: return "moduli";
    case Family::angle: return "angle";
    case Family::realpart: return "realpart";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::ek, Family::moduli, Family::angle, Family::realpart})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

TheoremId theorem_of(Family family) {
  switch (family) {
    case Family::ek: return TheoremId::ek;
    case Family::moduli: return TheoremId::moduli;
    case Family::angle: return TheoremId::angle;
    case Family::realpart: return TheoremId::realpart;
  }
  return TheoremId::ek;
}

OctonionD random_octonion_with_modulus(double modulus, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix<double, 8, 1> x;
  do {
    for (int k = 0; k < 8; ++k) x[k] = gauss(rng);
  } while (x.norm() < 1e-8);
  return OctonionD(Eigen::Matrix<double, 8, 1>(modulus * x.normalized()));
}

namespace {

std::vector<double> sorted_uniform(int count, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(lo, hi);
  std::vector<double> v(count);
  for (auto& x : v) x = unif(rng);
  std::sort(v.begin(), v.end());
  return v;
}

OctPolynomial draw(Family family, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<OctonionD> c;
  c.reserve(n + 1);
  switch (family) {
    case Family::ek:
      return OctPolynomial::from_real(sorted_uniform(n + 1, 0.1, 10.0, rng));
    case Family::moduli:
      for (double m : sorted_uniform(n + 1, 0.1, 1.0, rng))
        c.push_back(random_octonion_with_modulus(m, rng));
      break;
    case Family::angle: {
      // Cone of half-angle alpha around sign * 1.
      const double alpha = (std::numbers::pi / 2) * unit(rng);
      const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
      for (double m : sorted_uniform(n + 1, 0.1, 1.0, rng)) {
        const double theta = alpha * unit(rng);
        const ImaginaryUnitD dir = random_unit_imaginary(rng());
        c.push_back(m * (OctonionD(sign * std::cos(theta)) + std::sin(theta) * dir.value()));
      }
      break;
    }
    case Family::realpart: {
      const std::vector<double> re = sorted_uniform(n + 1, 0.0, 1.0, rng);
      std::normal_distribution<double> gauss(0.0, 0.05);
      for (double r : re) {
        Eigen::Matrix<double, 8, 1> x;
        x[0] = r;
        for (int l = 1; l < 8; ++l) x[l] = gauss(rng);
        c.emplace_back(x);
      }
      break;
    }
  }
  return OctPolynomial(std::move(c));
}

}  // namespace

OctPolynomial random_family_polynomial(Family family, int degree, std::mt19937_64& rng) {
  if (degree < 1) throw DomainError("family degree must be >= 1");
  for (int attempt = 0; attempt < 100; ++attempt) {
    OctPolynomial p = draw(family, degree, rng);
    if (p.degree() == degree && check_hypotheses(p).at(theorem_of(family)).applies) return p;
  }
  throw DomainError("could not draw a polynomial satisfying the family hypotheses");
}

}  // namespace oek

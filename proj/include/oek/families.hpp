#ifndef OEK_FAMILIES_HPP
#define OEK_FAMILIES_HPP

#include <optional>
#include <random>
#include <string_view>

#include "oek/bounds.hpp"

namespace oek {

// Random polynomial families that satisfy one theorem's hypotheses by
// construction.
enum class Family { ek, moduli, angle, realpart };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);
TheoremId theorem_of(Family family);

// Degree-n member of `family`; throws DomainError for n < 1. The result is
// re-checked against check_hypotheses before it is returned.
OctPolynomial random_family_polynomial(Family family, int degree, std::mt19937_64& rng);

// Uniform random unit vector of R^8 scaled by `modulus`.
OctonionD random_octonion_with_modulus(double modulus, std::mt19937_64& rng);

}  // namespace oek

#endif  // OEK_FAMILIES_HPP

#include "oek/selftest.hpp"

#include <algorithm>
#include <random>

#include "oek/families.hpp"
#include "oek/polynomial.hpp"

namespace oek {

SelftestReport run_selftest(const StructureTable& table, long trials, std::uint64_t seed) {
  SelftestReport report;
  report.validation = validate_table(table, trials, seed);
  report.matches_cayley_dickson =
      table.well_formed() && table.same_product(StructureTable::from_cayley_dickson());
  if (!table.well_formed()) return report;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> degree(1, 6);
  std::uniform_real_distribution<double> modulus(0.1, 2.0);
  report.star_samples = std::min(trials, 10000L);
  const OctPolynomial one_minus_q{OctonionD(1.0), OctonionD(-1.0)};
  for (long t = 0; t < report.star_samples; ++t) {
    std::vector<OctonionD> c;
    const int n = degree(rng);
    for (int k = 0; k <= n; ++k) c.push_back(random_octonion_with_modulus(modulus(rng), rng));
    const OctPolynomial p(std::move(c));
    const OctonionD q = random_octonion_with_modulus(modulus(rng), rng);

    const OctPolynomial transformed = one_minus_q_transform(p);
    if (!(star(p, one_minus_q, table) == transformed)) report.star_transform_exact = false;

    const OctonionD lhs = eval(transformed, q, table);
    const OctonionD rhs = mul(OctonionD(1.0) - q, eval(p, q, table), table);
    double scale = 0.0, qk = 1.0;
    for (const auto& a : p.coeffs()) {
      scale += norm(a) * qk;
      qk *= norm(q);
    }
    scale *= 1.0 + norm(q);
    report.max_star_identity_error =
        std::max(report.max_star_identity_error, norm(lhs - rhs) / scale);
  }
  report.passed = report.validation.passed && report.star_transform_exact &&
                  report.max_star_identity_error <= 1e-10;
  return report;
}

}  // namespace oek

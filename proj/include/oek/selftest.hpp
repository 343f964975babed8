#ifndef OEK_SELFTEST_HPP
#define OEK_SELFTEST_HPP

#include <cstdint>

#include "oek/structure_table.hpp"

namespace oek {

struct SelftestReport {
  ValidationReport validation;
  bool matches_cayley_dickson = false;
  long star_samples = 0;
  double max_star_identity_error = 0.0;  // |p*(1-q)(q) - (1-q)p(q)| / scale
  bool star_transform_exact = true;      // star(p, 1 - q) == one_minus_q_transform(p)
  bool passed = false;
};

// validate_table plus the star-product identities under `table`, on
// min(trials, 10^4) random (p, q) pairs.
SelftestReport run_selftest(const StructureTable& table, long trials, std::uint64_t seed);

}  // namespace oek

#endif  // OEK_SELFTEST_HPP

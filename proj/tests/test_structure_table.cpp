#include <algorithm>
#include <set>

#include "oek/octonion.hpp"
#include "oek/structure_table.hpp"
#include "test_util.hpp"

namespace oek {
namespace {

using testing::e;
using testing::random_octonion;

const std::vector<SignedTriple> kPrinted = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                                            {2, 5, 7}, {1, 6, 7}, {5, 3, 6}};
const std::vector<SignedTriple> kCorrected = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                                              {2, 5, 7}, {1, 7, 6}, {5, 3, 6}};

// Oracle: e_a e_b = -delta_ab + psi_abc e_c, expanded bilinearly straight from
// the triple list. Shares nothing with StructureTable.
Eigen::Matrix<double, 8, 1> brute_force_mul(const std::vector<SignedTriple>& triples,
                                            const Eigen::Matrix<double, 8, 1>& x,
                                            const Eigen::Matrix<double, 8, 1>& y) {
  auto psi = [&](int a, int b, int c) {
    for (const auto& t : triples) {
      const int cyc[3][3] = {{t.i, t.j, t.k}, {t.j, t.k, t.i}, {t.k, t.i, t.j}};
      for (const auto& p : cyc) {
        if (p[0] == a && p[1] == b && p[2] == c) return 1;
        if (p[1] == a && p[0] == b && p[2] == c) return -1;
      }
    }
    return 0;
  };
  Eigen::Matrix<double, 8, 1> r = Eigen::Matrix<double, 8, 1>::Zero();
  r[0] += x[0] * y[0];
  for (int a = 1; a <= 7; ++a) {
    r[a] += x[0] * y[a] + x[a] * y[0];
    for (int b = 1; b <= 7; ++b) {
      if (a == b) r[0] -= x[a] * y[b];
      for (int c = 1; c <= 7; ++c) r[c] += psi(a, b, c) * x[a] * y[b];
    }
  }
  return r;
}

std::set<std::vector<int>> rotations(const std::vector<SignedTriple>& ts) {
  std::set<std::vector<int>> out;
  for (const auto& t : ts) {
    std::vector<int> v{t.i, t.j, t.k};
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    out.insert(v);
  }
  return out;
}

TEST(StructureTable, BruteForceExpansionMatches) {
  const OctonionD a = e(1) + e(2), b = e(4) + e(7);
  EXPECT_EQ(brute_force_mul(kCorrected, a.coeffs(), b.coeffs()), (2.0 * e(6)).coeffs());
  EXPECT_TRUE(brute_force_mul(kPrinted, a.coeffs(), b.coeffs()).isZero(0));

  std::mt19937_64 rng(20);
  for (int t = 0; t < 500; ++t) {
    const OctonionD x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_TRUE(mul(x, y, StructureTable::corrected())
                    .coeffs()
                    .isApprox(brute_force_mul(kCorrected, x.coeffs(), y.coeffs()), 1e-14));
    EXPECT_TRUE(mul(x, y, StructureTable::paper_printed())
                    .coeffs()
                    .isApprox(brute_force_mul(kPrinted, x.coeffs(), y.coeffs()), 1e-14));
  }
}

TEST(StructureTable, CayleyDicksonReproducesCorrectedTriples) {
  const StructureTable cd = StructureTable::from_cayley_dickson();
  ASSERT_TRUE(cd.well_formed());
  EXPECT_EQ(rotations(cd.triples()), rotations(kCorrected));
  EXPECT_TRUE(cd.same_product(StructureTable(kCorrected)));
  EXPECT_TRUE(StructureTable::corrected().same_product(cd));
  EXPECT_EQ(StructureTable::corrected().flavor(), TableFlavor::corrected);

  // Six of the seven printed lines keep their orientation; (1,6,7) flips.
  const auto printed = rotations(kPrinted);
  const auto derived = rotations(cd.triples());
  std::vector<std::vector<int>> only_printed;
  std::set_difference(printed.begin(), printed.end(), derived.begin(), derived.end(),
                      std::back_inserter(only_printed));
  ASSERT_EQ(only_printed.size(), 1u);
  EXPECT_EQ(only_printed[0], (std::vector<int>{1, 6, 7}));
}

TEST(StructureTable, PsiTotallyAntisymmetric) {
  const StructureTable& t = StructureTable::corrected();
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; b <= 7; ++b)
      for (int c = 1; c <= 7; ++c) {
        EXPECT_EQ(t.psi(a, b, c), -t.psi(b, a, c));
        EXPECT_EQ(t.psi(a, b, c), -t.psi(a, c, b));
        EXPECT_EQ(t.psi(a, b, c), t.psi(b, c, a));
      }
  EXPECT_EQ(t.psi(1, 2, 3), 1);
  EXPECT_EQ(t.psi(1, 7, 6), 1);
  EXPECT_EQ(t.psi(1, 6, 7), -1);
}

TEST(StructureTable, StructuralFailures) {
  std::vector<SignedTriple> missing = kCorrected;
  missing.pop_back();
  const StructureTable t1(missing);
  EXPECT_FALSE(t1.well_formed());
  EXPECT_NE(t1.structural_issue()->find("pair"), std::string::npos);

  std::vector<SignedTriple> repeated = kCorrected;
  repeated[6] = {1, 2, 3};
  EXPECT_FALSE(StructureTable(repeated).well_formed());

  std::vector<SignedTriple> bad_index = kCorrected;
  bad_index[0] = {0, 2, 3};
  EXPECT_FALSE(StructureTable(bad_index).well_formed());

  std::vector<SignedTriple> conflict = kCorrected;
  conflict.push_back({2, 1, 3});
  EXPECT_FALSE(StructureTable(conflict).well_formed());
}

TEST(ValidateTable, CorrectedPasses) {
  const ValidationReport r = validate_table(StructureTable::corrected(), 20000, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.structural_ok);
  EXPECT_LE(r.max_composition_error, 1e-12);
  EXPECT_LE(r.max_alternative_error, 1e-12);
  EXPECT_LE(r.max_associativity_error, 1e-11);
  EXPECT_TRUE(r.nonassociative_witness_found);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(ValidateTable, PrintedFailsWithZeroDivisorWitness) {
  const ValidationReport r = validate_table(StructureTable::paper_printed(), 1000, 1);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.structural_ok);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->a, (e(1) + e(2)).coeffs());
  EXPECT_EQ(r.witness->b, (e(4) + e(7)).coeffs());
  EXPECT_TRUE(r.witness->product.isZero(0));
  EXPECT_EQ(r.witness->product_norm, 0.0);
  EXPECT_DOUBLE_EQ(r.witness->norm_product, 2.0);
}

TEST(ValidateTable, MissingPairFailsBeforeSampling) {
  std::vector<SignedTriple> missing = kCorrected;
  missing.erase(missing.begin() + 2);
  const ValidationReport r = validate_table(StructureTable(missing), 1000, 1);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.structural_ok);
  EXPECT_EQ(r.max_composition_error, 0.0);
  EXPECT_FALSE(r.structural_issue.empty());
}

TEST(ValidateTable, ZeroTrialsIsStructuralOnly) {
  EXPECT_TRUE(validate_table(StructureTable::corrected(), 0, 1).passed);
  const ValidationReport printed = validate_table(StructureTable::paper_printed(), 0, 1);
  EXPECT_FALSE(printed.passed);
  EXPECT_TRUE(printed.witness.has_value());
}

TEST(ValidateTable, DeterministicForSeed) {
  const auto a = validate_table(StructureTable::paper_printed(), 500, 9);
  const auto b = validate_table(StructureTable::paper_printed(), 500, 9);
  EXPECT_EQ(a.max_composition_error, b.max_composition_error);
  EXPECT_EQ(a.max_alternative_error, b.max_alternative_error);
}

}  // namespace
}  // namespace oek

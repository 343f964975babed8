#ifndef OEK_STRUCTURE_TABLE_HPP
#define OEK_STRUCTURE_TABLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace oek {

// Oriented line (i, j, k) of the Fano plane: e_i e_j = e_k, with the cyclic
// rotations positive and the transpositions negative.
struct SignedTriple {
  int i = 0;
  int j = 0;
  int k = 0;
  friend bool operator==(const SignedTriple&, const SignedTriple&) = default;
};

enum class TableFlavor { paper_printed, corrected, custom };

const char* to_string(TableFlavor flavor);

// Multiplication table of the imaginary units e1..e7 built from seven signed
// triples. A table can be constructed from arbitrary triples so that broken
// tables can be validated; multiplying with one that is not well formed
// throws MalformedTableError.
class StructureTable {
 public:
  StructureTable(std::vector<SignedTriple> triples, TableFlavor flavor = TableFlavor::custom);

  // The triple list as printed, including (1,6,7). Not a composition algebra.
  static const StructureTable& paper_printed();
  // Cayley-Dickson doubling C -> H -> O with e3 = e1e2, e5 = e1e4,
  // e6 = e2e4, e7 = e3e4. Same lines as the printed list, (1,7,6) reoriented.
  static const StructureTable& corrected();
  // Recomputes the doubling from scratch (corrected() caches this).
  static StructureTable from_cayley_dickson();

  const std::vector<SignedTriple>& triples() const { return triples_; }
  TableFlavor flavor() const { return flavor_; }

  bool well_formed() const { return !issue_.has_value(); }
  // First structural problem found (bad index, repeated pair, uncovered pair,
  // antisymmetry conflict); empty when well formed.
  const std::optional<std::string>& structural_issue() const { return issue_; }
  void require_well_formed() const;

  // psi_{ijk} for i, j, k in 1..7, zero when {i,j,k} is not a line.
  int psi(int i, int j, int k) const { return psi_[i][j][k]; }

  // e_i e_j = product_sign(i,j) * e_{product_index(i,j)}, for i, j in 0..7.
  int product_index(int i, int j) const { return index_[i][j]; }
  int product_sign(int i, int j) const { return sign_[i][j]; }

  // Same multiplication table, possibly different triple orientation/order.
  bool same_product(const StructureTable& other) const;

 private:
  void build();

  std::vector<SignedTriple> triples_;
  TableFlavor flavor_;
  std::optional<std::string> issue_;
  std::array<std::array<std::array<std::int8_t, 8>, 8>, 8> psi_{};
  std::array<std::array<std::int8_t, 8>, 8> index_{};
  std::array<std::array<std::int8_t, 8>, 8> sign_{};
};

// Default table used by operator* and every evaluation without an explicit table.
inline const StructureTable& default_table() { return StructureTable::corrected(); }

struct ZeroDivisorWitness {
  Eigen::Matrix<double, 8, 1> a;
  Eigen::Matrix<double, 8, 1> b;
  Eigen::Matrix<double, 8, 1> product;
  double product_norm = 0.0;
  double norm_product = 0.0;  // |a||b|
  std::string description;
};

struct ValidationReport {
  bool passed = false;
  bool structural_ok = false;
  std::string structural_issue;
  long trials = 0;
  double max_composition_error = 0.0;   // relative | |ab| - |a||b| | / (|a||b|)
  double max_alternative_error = 0.0;   // relative, scale |a|^2 |b|
  double max_associativity_error = 0.0; // two-generator words, relative
  bool nonassociative_witness_found = false;
  std::optional<ZeroDivisorWitness> witness;
  std::vector<std::string> failures;
};

struct ValidationTolerances {
  double composition = 1e-12;
  double alternative = 1e-12;
  double associativity = 1e-11;
};

// Structural checks, then norm multiplicativity, the alternative laws and
// two-generator associativity on `trials` seeded random pairs. Failures are
// reported with a concrete witness, never thrown.
ValidationReport validate_table(const StructureTable& table, long trials, std::uint64_t seed,
                                const ValidationTolerances& tol = {});

}  // namespace oek

#endif  // OEK_STRUCTURE_TABLE_HPP

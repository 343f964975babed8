#include "oek/structure_table.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Geometry>

#include "oek/errors.hpp"
#include "oek/octonion.hpp"

namespace oek {

const char* to_string(TableFlavor flavor) {
  switch (flavor) {
    case TableFlavor::paper_printed: return "paper";
    case TableFlavor::corrected: return "corrected";
    case TableFlavor::custom: return "custom";
  }
  return "custom";
}

StructureTable::StructureTable(std::vector<SignedTriple> triples, TableFlavor flavor)
    : triples_(std::move(triples)), flavor_(flavor) {
  build();
}

void StructureTable::build() {
  for (auto& plane : psi_)
    for (auto& row : plane) row.fill(0);

  auto fail = [this](const std::string& what) {
    if (!issue_) issue_ = what;
  };

  std::array<std::array<int, 8>, 8> pair_uses{};
  for (const auto& t : triples_) {
    const int idx[3] = {t.i, t.j, t.k};
    bool in_range = true;
    for (int v : idx) in_range = in_range && v >= 1 && v <= 7;
    if (!in_range) {
      std::ostringstream os;
      os << "triple (" << t.i << "," << t.j << "," << t.k << ") has an index outside 1..7";
      fail(os.str());
      continue;
    }
    if (t.i == t.j || t.j == t.k || t.i == t.k) {
      std::ostringstream os;
      os << "triple (" << t.i << "," << t.j << "," << t.k << ") repeats an index";
      fail(os.str());
      continue;
    }
    const int perms[6][3] = {{t.i, t.j, t.k}, {t.j, t.k, t.i}, {t.k, t.i, t.j},
                             {t.j, t.i, t.k}, {t.k, t.j, t.i}, {t.i, t.k, t.j}};
    for (int p = 0; p < 6; ++p) {
      const int s = p < 3 ? 1 : -1;
      auto& cell = psi_[perms[p][0]][perms[p][1]][perms[p][2]];
      if (cell != 0 && cell != s) {
        std::ostringstream os;
        os << "antisymmetry conflict at psi(" << perms[p][0] << "," << perms[p][1] << ","
           << perms[p][2] << ")";
        fail(os.str());
      }
      cell = static_cast<std::int8_t>(s);
    }
    ++pair_uses[std::min(t.i, t.j)][std::max(t.i, t.j)];
    ++pair_uses[std::min(t.j, t.k)][std::max(t.j, t.k)];
    ++pair_uses[std::min(t.i, t.k)][std::max(t.i, t.k)];
  }
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      if (pair_uses[a][b] != 1) {
        std::ostringstream os;
        os << "pair {" << a << "," << b << "} appears in " << pair_uses[a][b]
           << " triples (expected exactly 1)";
        fail(os.str());
      }
    }
  }
  if (triples_.size() != 7) {
    std::ostringstream os;
    os << "expected 7 triples, got " << triples_.size();
    fail(os.str());
  }
  // Total antisymmetry of the assembled tensor.
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; b <= 7; ++b)
      for (int c = 1; c <= 7; ++c)
        if (psi_[a][b][c] != -psi_[b][a][c] || psi_[a][b][c] != -psi_[a][c][b])
          fail("psi is not totally antisymmetric");

  for (int i = 0; i < 8; ++i) {
    index_[0][i] = index_[i][0] = static_cast<std::int8_t>(i);
    sign_[0][i] = sign_[i][0] = 1;
  }
  for (int a = 1; a <= 7; ++a) {
    index_[a][a] = 0;
    sign_[a][a] = -1;
    for (int b = 1; b <= 7; ++b) {
      if (a == b) continue;
      index_[a][b] = 0;
      sign_[a][b] = 0;
      for (int c = 1; c <= 7; ++c) {
        if (psi_[a][b][c] != 0) {
          index_[a][b] = static_cast<std::int8_t>(c);
          sign_[a][b] = psi_[a][b][c];
          break;
        }
      }
    }
  }
}

void StructureTable::require_well_formed() const {
  if (issue_) throw MalformedTableError("malformed structure table: " + *issue_);
}

bool StructureTable::same_product(const StructureTable& other) const {
  return index_ == other.index_ && sign_ == other.sign_;
}

const StructureTable& StructureTable::paper_printed() {
  static const StructureTable table(
      {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {2, 5, 7}, {1, 6, 7}, {5, 3, 6}},
      TableFlavor::paper_printed);
  return table;
}

const StructureTable& StructureTable::corrected() {
  static const StructureTable table = [] {
    StructureTable t = from_cayley_dickson();
    t.flavor_ = TableFlavor::corrected;
    return t;
  }();
  return table;
}

namespace {

using Quat = Eigen::Quaterniond;

struct Doubled {
  Quat lo{0, 0, 0, 0};
  Quat hi{0, 0, 0, 0};
};

Quat add(const Quat& a, const Quat& b) { return Quat(a.coeffs() + b.coeffs()); }
Quat sub(const Quat& a, const Quat& b) { return Quat(a.coeffs() - b.coeffs()); }

// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
Doubled doubled_product(const Doubled& x, const Doubled& y) {
  return {sub(x.lo * y.lo, y.hi.conjugate() * x.hi), add(y.hi * x.lo, x.hi * y.lo.conjugate())};
}

Eigen::Matrix<double, 8, 1> flatten(const Doubled& x) {
  Eigen::Matrix<double, 8, 1> v;
  v << x.lo.w(), x.lo.x(), x.lo.y(), x.lo.z(), x.hi.w(), x.hi.x(), x.hi.y(), x.hi.z();
  return v;
}

}  // namespace

StructureTable StructureTable::from_cayley_dickson() {
  // Basis e0..e7 as pairs of quaternions: e1, e2, e3 = i, j, k; e4 = (0, 1);
  // e5 = e1e4, e6 = e2e4, e7 = e3e4.
  std::array<Doubled, 8> basis;
  basis[0].lo = Quat(1, 0, 0, 0);
  basis[1].lo = Quat(0, 1, 0, 0);
  basis[2].lo = Quat(0, 0, 1, 0);
  basis[3].lo = Quat(0, 0, 0, 1);
  basis[4].hi = Quat(1, 0, 0, 0);
  for (int k = 1; k <= 3; ++k) basis[k + 4] = doubled_product(basis[k], basis[4]);

  Eigen::Matrix<double, 8, 8> to_doubled;
  for (int k = 0; k < 8; ++k) to_doubled.col(k) = flatten(basis[k]);
  const Eigen::Matrix<double, 8, 8> from_doubled = to_doubled.inverse();

  // Each line {a < b < c} yields one cyclic class; emit the rotation that
  // starts at its smallest index.
  std::vector<SignedTriple> triples;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      const Eigen::Matrix<double, 8, 1> prod =
          from_doubled * flatten(doubled_product(basis[a], basis[b]));
      Eigen::Index c = 0;
      const double mag = prod.cwiseAbs().maxCoeff(&c);
      if (std::abs(mag - 1.0) > 1e-12 || c <= b) continue;
      if (prod[c] > 0)
        triples.push_back({a, b, static_cast<int>(c)});
      else
        triples.push_back({a, static_cast<int>(c), b});
    }
  }
  return StructureTable(std::move(triples), TableFlavor::custom);
}

namespace {

double relative(double err, double scale) { return scale > 0 ? err / scale : err; }

OctonionD random_octonion(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  OctonionD::Coeffs x;
  for (int k = 0; k < 8; ++k) x[k] = gauss(rng);
  return OctonionD(x);
}

std::optional<ZeroDivisorWitness> find_basis_pair_zero_divisor(const StructureTable& table) {
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k)
        for (int l = k + 1; l <= 7; ++l) {
          const OctonionD a = OctonionD::basis(i) + OctonionD::basis(j);
          const OctonionD b = OctonionD::basis(k) + OctonionD::basis(l);
          const OctonionD ab = mul(a, b, table);
          if (!ab.is_zero()) continue;
          ZeroDivisorWitness w;
          w.a = a.coeffs();
          w.b = b.coeffs();
          w.product = ab.coeffs();
          w.product_norm = 0.0;
          w.norm_product = std::sqrt(squared_norm(a) * squared_norm(b));
          std::ostringstream os;
          os << "(e" << i << "+e" << j << ")(e" << k << "+e" << l << ") = 0 while |a||b| = "
             << w.norm_product;
          w.description = os.str();
          return w;
        }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_table(const StructureTable& table, long trials, std::uint64_t seed,
                                const ValidationTolerances& tol) {
  ValidationReport report;
  report.trials = std::max(0L, trials);
  report.structural_ok = table.well_formed();
  if (!report.structural_ok) {
    report.structural_issue = *table.structural_issue();
    report.failures.push_back("structure: " + report.structural_issue);
    return report;
  }

  // Non-associativity must be witnessed on basis triples.
  for (int a = 1; a <= 7 && !report.nonassociative_witness_found; ++a)
    for (int b = 1; b <= 7 && !report.nonassociative_witness_found; ++b)
      for (int c = 1; c <= 7; ++c) {
        const OctonionD ea = OctonionD::basis(a), eb = OctonionD::basis(b),
                        ec = OctonionD::basis(c);
        if (mul(mul(ea, eb, table), ec, table) == -mul(ea, mul(eb, ec, table), table) &&
            !(mul(mul(ea, eb, table), ec, table)).is_zero()) {
          report.nonassociative_witness_found = true;
          break;
        }
      }

  std::mt19937_64 rng(seed);
  std::optional<ZeroDivisorWitness> worst_random;
  double worst_random_err = 0.0;
  for (long t = 0; t < report.trials; ++t) {
    const OctonionD a = random_octonion(rng);
    const OctonionD b = random_octonion(rng);
    const double na = norm(a), nb = norm(b);
    const OctonionD ab = mul(a, b, table);

    const double comp = relative(std::abs(norm(ab) - na * nb), na * nb);
    if (comp > worst_random_err) {
      worst_random_err = comp;
      ZeroDivisorWitness w;
      w.a = a.coeffs();
      w.b = b.coeffs();
      w.product = ab.coeffs();
      w.product_norm = norm(ab);
      w.norm_product = na * nb;
      w.description = "random pair with the largest composition defect";
      worst_random = w;
    }
    report.max_composition_error = std::max(report.max_composition_error, comp);

    const double alt_scale = na * na * nb;
    const double left = norm(mul(mul(a, a, table), b, table) - mul(a, mul(a, b, table), table));
    const double right = norm(mul(ab, b, table) - mul(a, mul(b, b, table), table));
    report.max_alternative_error =
        std::max({report.max_alternative_error, relative(left, alt_scale),
                  relative(right, na * nb * nb)});

    // Words of length <= 3 in {a, b}: compare (w1 w2) w3 with w1 (w2 w3) for
    // single-letter and two-letter words.
    if (t < 10000) {
      const OctonionD words[6] = {a, b, ab, mul(b, a, table), mul(a, a, table), mul(b, b, table)};
      const double wn[6] = {na, nb, na * nb, na * nb, na * na, nb * nb};
      for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 2; ++y)
          for (int z = 0; z < 2; ++z) {
            const OctonionD lhs = mul(mul(words[x], words[y], table), words[z], table);
            const OctonionD rhs = mul(words[x], mul(words[y], words[z], table), table);
            report.max_associativity_error =
                std::max(report.max_associativity_error,
                         relative(norm(lhs - rhs), wn[x] * wn[y] * wn[z]));
          }
    }
  }

  if (report.max_composition_error > tol.composition) {
    std::ostringstream os;
    os << "norm multiplicativity fails: max relative error " << report.max_composition_error;
    report.failures.push_back(os.str());
    report.witness = find_basis_pair_zero_divisor(table);
    if (!report.witness) report.witness = worst_random;
  }
  if (report.max_alternative_error > tol.alternative) {
    std::ostringstream os;
    os << "alternative laws fail: max relative error " << report.max_alternative_error;
    report.failures.push_back(os.str());
  }
  if (report.max_associativity_error > tol.associativity) {
    std::ostringstream os;
    os << "two-generator associativity fails: max relative error "
       << report.max_associativity_error;
    report.failures.push_back(os.str());
  }
  if (!report.nonassociative_witness_found)
    report.failures.push_back("no basis triple with (e_a e_b) e_c = -e_a (e_b e_c)");
  // Exhaustive basis-pair search also catches zero divisors when trials == 0.
  if (report.trials == 0 && !report.witness) {
    report.witness = find_basis_pair_zero_divisor(table);
    if (report.witness) report.failures.push_back("zero divisor among basis-pair sums");
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace oek

#pragma once

// Exact agreement densities of character pairs, with Frobenius classes
// weighted by class size, and the DH1 inequality chain.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twistlab/groups.hpp"

namespace twistlab {

/// sum of |c| / |G| over classes where chi1 and chi2 agree.
Rational agreement_density(const ClassFunction& chi1, const ClassFunction& chi2, const ClassStructure& s);

/// Fraction of cosets of the normal subgroup on which chi1 == chi2 at every
/// class. Throws std::invalid_argument without coset data.
Rational component_density(const ClassFunction& chi1, const ClassFunction& chi2, const SubgroupEmbedding& e);

/// 1 - 1/(2 m^2).
Rational dh1_bound(const Integer& m);

struct DensityReport {
  Rational lambda_elem;
  std::optional<Rational> lambda_comp;
  Integer m;
  Rational dh1_bound;
  Rational mean_square_diff;
  bool characters_equal = false;
  std::optional<bool> identity_coset_in_x;
  std::optional<bool> restrictions_equal;
  std::optional<Integer> dh2_c;
  std::optional<Rational> dh2_bound;  // 1 - 1/c
  std::vector<std::pair<std::string, bool>> verdicts;

  bool all_verdicts_hold() const;
};

/// Throws std::invalid_argument when the degrees differ or are not positive
/// integers.
DensityReport dh_bounds_report(const ClassFunction& chi1, const ClassFunction& chi2, const ClassStructure& s,
                               const SubgroupEmbedding* e = nullptr);

nlohmann::json density_report_to_json(const DensityReport& r);

struct TraceLemmaResult {
  std::size_t elements = 0;
  std::size_t trace_equals_dimension = 0;
  std::size_t identity_matrices = 0;
  bool holds = false;  // trace == dim exactly at the identity matrices
};

/// Scans rep.element_enumeration(); throws std::invalid_argument without one.
TraceLemmaResult trace_identity_lemma_check(const MatrixRep& rep);

/// Both sides of 1 - 1/(2 (2^m)^2) = 1 - 2^-(2m+1).
std::pair<Rational, Rational> gl2_threshold(long m);

}  // namespace twistlab

#pragma once

// Twist equivalence: decompositions, power-ratio tests, twist search,
// extension of twists from a normal subgroup, Clifford analysis and the
// adjoint twist-or-dual search.

#include <optional>
#include <utility>
#include <vector>

#include "twistlab/groups.hpp"

namespace twistlab {

struct Decomposition {
  CycNum selfnorm;
  std::vector<CycNum> inner_products;  // <chi, chi_i> per irreducible
  std::vector<Integer> multiplicities;  // filled only when genuine
  bool genuine = false;                 // all inner products non-negative integers
  bool irreducible = false;             // selfnorm == 1
  bool reconstructs = false;            // sum m_i chi_i == chi (genuine case)
};

Decomposition inner_product_and_decompose(const ClassFunction& chi, const CharacterTable& t);

struct ClassWitness {
  bool powers_equal = false;
  bool both_zero = false;
  /// chi1(c)/chi2(c) as a root of unity, when it is one.
  std::optional<RootRatio> ratio;
};

struct RatioVerdict {
  bool equal_powers = false;
  long k = 1;
  std::vector<ClassWitness> witnesses;
};

/// chi1(c)^k == chi2(c)^k at every class.
RatioVerdict power_char_ratio_test(const ClassFunction& chi1, const ClassFunction& chi2, long k);

/// Sorted indices of the linear characters lambda with chi2 = chi1 * lambda.
/// With a restriction the search runs over the linear rows of its sub_table
/// after restricting both characters; throws std::invalid_argument when the
/// sub_table is missing.
std::vector<std::size_t> find_twist(const ClassFunction& chi1, const ClassFunction& chi2, const CharacterTable& t,
                                    const SubgroupEmbedding* restriction = nullptr);

struct ExtendResult {
  std::optional<std::size_t> twist;  // row index in the table of G
  bool restriction_irreducible = false;
  bool chi_prime_invariant = false;
  /// Linear characters of G restricting to chi'.
  std::vector<std::size_t> extensions;
};

/// chi' is a linear character of H given as a class function on H. Throws
/// std::invalid_argument unless e is normal with a sub_table, chi' is linear
/// and chi2|H == chi1|H * chi'.
ExtendResult extend_twist(const ClassFunction& chi1, const ClassFunction& chi2, const CharacterTable& t,
                          const SubgroupEmbedding& e, const ClassFunction& chi_prime);

/// True when chi' (an H-class function) is fixed by every coset's action.
bool is_invariant(const ClassFunction& chi_prime, const SubgroupEmbedding& e);

struct CliffordResult {
  std::vector<std::pair<std::size_t, Integer>> constituents;  // (sub_table row, multiplicity)
  /// Orbits of the sub_table rows under the conjugation action.
  std::vector<std::vector<std::size_t>> orbits;
  /// Orbit of the first constituent.
  std::vector<std::size_t> constituent_orbit;
  /// Cosets fixing the first constituent.
  std::vector<std::size_t> stabilizer_cosets;
  /// chi == Ind(first constituent); set only when the stabilizer is H.
  std::optional<bool> induced_check;
};

/// Throws std::invalid_argument unless e is normal with coset data and a
/// sub_table, or when chi|H is not a genuine character of H.
CliffordResult clifford_analysis(const ClassFunction& chi, const CharacterTable& t, const SubgroupEmbedding& e);

/// Row index of the image of sub_table row i under the action of a coset.
std::size_t act_on_sub_row(std::size_t row, const SubgroupEmbedding& e, std::size_t coset);

enum class TwistBranch { Twist, DualTwist };

struct AdjointSearch {
  TwistBranch branch = TwistBranch::Twist;
  std::size_t lambda = 0;
};

/// Throws std::invalid_argument unless adjoint(chi1) == adjoint(chi2).
std::optional<AdjointSearch> adjoint_twist_or_dual_search(const ClassFunction& chi1, const ClassFunction& chi2,
                                                          const CharacterTable& t);

}  // namespace twistlab

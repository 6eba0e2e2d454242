#pragma once

// Finite groups presented by conjugacy-class data, their character tables
// and subgroup embeddings. Nothing here stores group elements; element-level
// models live in finite_group.hpp and are used to build and check tables.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/cyclo.hpp"
#include "twistlab/matrix_rep.hpp"

namespace twistlab {

struct ClassStructure {
  Integer order = 1;
  long exponent = 1;
  long modulus = 1;  // cyclotomic modulus N, a multiple of exponent
  std::vector<Integer> class_sizes;
  std::size_t identity_class = 0;
  std::vector<std::size_t> inverse_classes;
  // powers[c][i] = class of g^i for g in c, 0 <= i < exponent
  std::vector<std::vector<std::size_t>> powers;

  std::size_t num_classes() const { return class_sizes.size(); }
  /// Class of g^i for g in class c; any integer i, reduced mod exponent.
  std::size_t power_map(std::size_t c, long i) const;
  std::size_t inverse_class(std::size_t c) const { return inverse_classes[c]; }

  friend bool operator==(const ClassStructure&, const ClassStructure&) = default;
};

/// One value per class, all in Q(zeta_N) for the structure's N.
struct ClassFunction {
  std::vector<CycNum> values;

  ClassFunction() = default;
  explicit ClassFunction(std::vector<CycNum> v) : values(std::move(v)) {}
  static ClassFunction constant(const ClassStructure& s, long value);

  std::size_t size() const { return values.size(); }
  const CycNum& operator[](std::size_t c) const { return values[c]; }
  CycNum& operator[](std::size_t c) { return values[c]; }
  const CycNum& degree(const ClassStructure& s) const { return values.at(s.identity_class); }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(ClassFunction a, const Rational& q);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

struct CharacterTable;

struct SubgroupEmbedding {
  std::string name;
  ClassStructure sub;
  Integer index = 1;
  std::vector<std::size_t> fusion;  // H-class -> G-class
  bool is_normal = false;
  // Normal case only. Cosets are labelled 0..index-1, label 0 is H itself.
  std::vector<std::size_t> coset_of_class;               // G-class -> coset
  std::vector<std::vector<std::size_t>> quotient_table;  // coset product
  std::vector<std::vector<std::size_t>> conj_action;     // [coset][H-class] -> H-class
  std::shared_ptr<const CharacterTable> sub_table;

  bool has_coset_data() const { return is_normal && !coset_of_class.empty(); }

  friend bool operator==(const SubgroupEmbedding& a, const SubgroupEmbedding& b);
};

struct CharacterTable {
  std::string name;
  ClassStructure structure;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::size_t> linear_indices;
  std::vector<SubgroupEmbedding> embeddings;

  long modulus() const { return structure.modulus; }
  /// Recomputes linear_indices from the degree-1 rows.
  void refresh_linear_indices();

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// <a, b> = (1/|G|) sum_c |c| a(c) conj(b(c)).
CycNum inner_product(const ClassFunction& a, const ClassFunction& b, const ClassStructure& s);

// ---------------------------------------------------------------- builders

/// Cyclic group of order n: chi_j(g^i) = zeta_n^(ij).
CharacterTable build_cyclic(long n);

/// Classes are pairs (a, b) indexed a * |classes(B)| + b; rows are chi (x) psi,
/// chi-major. The cyclotomic modulus is lcm of the factors'.
CharacterTable build_direct_product(const CharacterTable& a, const CharacterTable& b);

/// H = G embedded in itself as a normal subgroup, with sub_table = the table.
SubgroupEmbedding whole_group_embedding(const CharacterTable& t);

// ------------------------------------------------------------- validation

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  /// Name of the first failed check, empty if none.
  std::string first_failure() const;
};

/// Check names: "class size sum", "identity class", "power map identity",
/// "power map exponent", "power map composition", "inverse class",
/// "value modulus", "irreducible count", "degree sum mismatch",
/// "row orthogonality", "linear indices", and "embedding <i>: ..." entries.
ValidationReport validate_character_table(const CharacterTable& t);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : std::runtime_error("validation failed: " + invariant + (detail.empty() ? "" : " (" + detail + ")")),
        invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// ------------------------------------------------------- class functions

/// Traces of the representation at one word per class. Throws
/// std::invalid_argument when a defining relation fails.
ClassFunction char_of_matrix_rep(const MatrixRep& rep, const ClassStructure& s,
                                 const std::vector<std::string>& class_reps);

/// Value at H-class d is chi(fusion(d)).
ClassFunction restrict_char(const ClassFunction& chi, const SubgroupEmbedding& e);

/// Frobenius formula: Ind psi(c) = ([G:H] / |c|) sum_{fusion(d) = c} |d| psi(d).
ClassFunction induce_char(const ClassFunction& psi, const SubgroupEmbedding& e, const ClassStructure& g);

/// (phi . psi)(d) = psi(conj_action[phi][d]); the G-action on H-class functions.
ClassFunction conjugate_sub_char(const ClassFunction& psi, const SubgroupEmbedding& e, std::size_t coset);

/// Index of an irreducible equal to chi, if any.
std::optional<std::size_t> find_irreducible(const CharacterTable& t, const ClassFunction& chi);

}  // namespace twistlab

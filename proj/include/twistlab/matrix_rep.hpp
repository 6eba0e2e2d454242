#pragma once

// Dense matrices over Q(zeta_N) and representations given by generator
// images. Words are strings over the generator letters: an upper-case
// letter is a generator, the matching lower-case letter its inverse.

#include <map>
#include <string>
#include <vector>

#include "twistlab/cyclo.hpp"

namespace twistlab {

class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t n, long modulus);  // zero matrix
  static CycMatrix identity(std::size_t n, long modulus);
  static CycMatrix diagonal(const std::vector<CycNum>& entries);

  std::size_t size() const { return n_; }
  long modulus() const { return modulus_; }
  CycNum& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const CycNum& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  CycNum trace() const;
  CycNum determinant() const;
  bool is_identity() const;
  /// Gauss-Jordan; throws std::domain_error when singular.
  CycMatrix inverse() const;

  friend CycMatrix operator*(const CycMatrix& x, const CycMatrix& y);
  friend bool operator==(const CycMatrix& x, const CycMatrix& y) = default;

  /// Canonical text form, usable as a hash key.
  std::string key() const;

 private:
  std::size_t n_ = 0;
  long modulus_ = 1;
  std::vector<CycNum> a_;
};

class MatrixRep {
 public:
  MatrixRep() = default;
  MatrixRep(std::map<char, CycMatrix> generator_images, std::vector<std::string> relations = {});

  std::size_t dimension() const { return dimension_; }
  long modulus() const { return modulus_; }
  const std::map<char, CycMatrix>& generator_images() const { return images_; }
  const std::vector<std::string>& relations() const { return relations_; }

  /// Optional normal-form list of every group element as a word.
  const std::vector<std::string>& element_enumeration() const { return elements_; }
  void set_element_enumeration(std::vector<std::string> words) { elements_ = std::move(words); }
  bool has_element_enumeration() const { return !elements_.empty(); }

  /// Throws std::invalid_argument on an unknown letter.
  CycMatrix evaluate(const std::string& word) const;
  bool relations_hold() const;
  /// Name of the first relation that fails, empty when all hold.
  std::string first_failing_relation() const;

 private:
  std::size_t dimension_ = 0;
  long modulus_ = 1;
  std::map<char, CycMatrix> images_;
  std::map<char, CycMatrix> inverses_;
  std::vector<std::string> relations_;
  std::vector<std::string> elements_;
};

/// Repeats a word k times, e.g. power_word("A", 3) == "AAA".
std::string power_word(const std::string& word, long k);
/// Formal inverse: reversed with the case of every letter swapped.
std::string inverse_word(const std::string& word);

}  // namespace twistlab

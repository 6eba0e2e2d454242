#pragma once

// Element-level model of a small finite group: a full multiplication table
// with a shortest word for every element. Used to build class data and
// character tables, and as the brute-force oracle behind tests.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/groups.hpp"
#include "twistlab/matrix_rep.hpp"

namespace twistlab {

class FiniteGroup {
 public:
  using Element = std::size_t;
  using Law = std::function<Element(Element, Element)>;

  FiniteGroup() = default;

  /// Elements are 0..order-1 with 0 the identity.
  static FiniteGroup from_law(std::size_t order, const Law& multiply,
                              std::vector<std::pair<char, Element>> generators);
  /// Closure of the generator images of a faithful representation.
  /// letter_order fixes the breadth-first order, hence element numbering.
  static FiniteGroup from_matrices(const MatrixRep& faithful, const std::string& letter_order,
                                   std::size_t max_order = 20000);

  std::size_t order() const { return table_.size(); }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, long k) const;
  long element_order(Element a) const;
  long exponent() const;

  const std::vector<std::pair<char, Element>>& generators() const { return generators_; }
  /// Shortest word over the generator letters (breadth-first).
  const std::string& word(Element e) const { return words_[e]; }
  Element evaluate(const std::string& word) const;

  /// Conjugacy classes ordered by their smallest element.
  const std::vector<std::vector<Element>>& classes() const { return classes_; }
  std::size_t class_of(Element e) const { return class_of_[e]; }
  ClassStructure class_structure(long modulus) const;
  /// Word of the smallest element of every class.
  std::vector<std::string> class_representatives() const;

  std::vector<Element> closure(const std::vector<Element>& gens) const;
  bool is_normal(const std::vector<Element>& subset) const;

 private:
  void finish();

  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverses_;
  std::vector<std::pair<char, Element>> generators_;
  std::vector<std::string> words_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_of_;
};

/// A subgroup named by generator words in the ambient group, with optional
/// irreducible representations written over the subgroup's own letters.
struct SubgroupSpec {
  std::string name;
  std::vector<std::pair<char, std::string>> generators;
  std::vector<MatrixRep> irreps;
};

/// Builds the class-level embedding of spec.generators' closure. Fills the
/// coset data and conjugation action when the subgroup is normal, and the
/// sub table when irreps are supplied.
SubgroupEmbedding make_embedding(const FiniteGroup& g, const ClassStructure& gs, const SubgroupSpec& spec);

}  // namespace twistlab

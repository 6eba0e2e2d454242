#pragma once

// Concrete small groups with element models, explicit representations and
// character tables.

#include <string>
#include <vector>

#include "twistlab/finite_group.hpp"
#include "twistlab/groups.hpp"
#include "twistlab/matrix_rep.hpp"

namespace twistlab {

struct GroupModel {
  FiniteGroup group;
  CharacterTable table;
  std::vector<std::string> class_reps;
  /// One representation per row of table.irreducibles, same order.
  std::vector<MatrixRep> irreps;
};

/// Heisenberg group H_n = <A, B, C | A^n = B^n = C^n = 1, AC = CA, BC = CB,
/// AB = CBA> for an odd prime n. Elements are normal forms A^i B^j C^l with
/// index (i * n + j) * n + l. Rows: the n^2 linear characters
/// chi_{s,t}(A^i B^j C^l) = zeta^(s i + t j) at index s * n + t, then the
/// degree-n characters chi_a at index n^2 + a - 1 for a = 1..n-1.
/// table.embeddings[0] is the abelian normal subgroup T = <A, C>, whose
/// rows psi_{u,v}(A^i C^l) = zeta^(u i + v l) sit at index u * n + v.
struct HeisenbergModel : GroupModel {
  long n = 0;
  /// rho[a - 1] is rho_a: A e_i = zeta^((i-1)a) e_i, B e_i = e_{i+1}, C = zeta^a.
  std::vector<MatrixRep> rho;

  std::size_t linear_index(long s, long t) const;
  std::size_t rho_index(long a) const;
  const SubgroupEmbedding& torus() const { return table.embeddings.at(0); }
  std::size_t torus_char_index(long u, long v) const;
};

/// Throws std::invalid_argument("n must be an odd prime") otherwise.
HeisenbergModel build_heisenberg(long n);

/// The rep rho_a of H_n on its own (a coprime to n), with relations and the
/// normal-form element enumeration attached.
MatrixRep heisenberg_rep(long n, long a);

/// S3 with classes (identity, transpositions, 3-cycles) and rows
/// (trivial, sign, standard); embeddings[0] is A3 with rows omega^k.
GroupModel build_symmetric3();
/// D4 of order 8 with rows (four linear, then the 2-dimensional);
/// embeddings[0] is the rotation subgroup C4.
GroupModel build_dihedral4();
/// Q8 with rows (four linear, then the 2-dimensional); embeddings[0] is <i>.
GroupModel build_quaternion8();

/// A named table from "cyclic:<n>", "s3", "d4", "q8", "heisenberg:<p>",
/// or "<spec>*<spec>" for a direct product.
CharacterTable build_named_table(const std::string& spec);

/// Cyclic groups of order 1..12, S3, D4, Q8, H3, H5, C2xC2, C3xC3.
std::vector<CharacterTable> standard_corpus();

}  // namespace twistlab

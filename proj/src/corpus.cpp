#include "twistlab/corpus.hpp"

#include <stdexcept>

namespace twistlab {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

CycMatrix matrix(long modulus, std::initializer_list<std::initializer_list<long>> rows) {
  CycMatrix m(rows.size(), modulus);
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m.at(r, c++) = CycNum(modulus, v);
    ++r;
  }
  return m;
}

CycMatrix scalar(const CycNum& v) { return CycMatrix::diagonal({v}); }

CycMatrix scalar(long modulus, long v) { return scalar(CycNum(modulus, v)); }

// Builds the table rows from irreps evaluated at the class representatives.
GroupModel finish_model(std::string name, const MatrixRep& faithful, const std::string& letters,
                        std::vector<MatrixRep> irreps, const SubgroupSpec& normal_sub) {
  GroupModel m;
  m.group = FiniteGroup::from_matrices(faithful, letters);
  const long modulus = faithful.modulus();
  m.table.name = std::move(name);
  m.table.structure = m.group.class_structure(modulus);
  m.class_reps = m.group.class_representatives();
  for (const auto& rep : irreps) {
    m.table.irreducibles.push_back(char_of_matrix_rep(rep, m.table.structure, m.class_reps));
  }
  m.table.refresh_linear_indices();
  m.irreps = std::move(irreps);
  m.table.embeddings.push_back(make_embedding(m.group, m.table.structure, normal_sub));
  return m;
}

std::vector<MatrixRep> sign_pattern_reps(long modulus, char x, char y, const std::vector<std::string>& relations) {
  std::vector<MatrixRep> reps;
  for (long sx : {1L, -1L}) {
    for (long sy : {1L, -1L}) {
      reps.emplace_back(std::map<char, CycMatrix>{{x, scalar(modulus, sx)}, {y, scalar(modulus, sy)}}, relations);
    }
  }
  return reps;
}

std::vector<MatrixRep> cyclic_sub_reps(long modulus, char letter, long order) {
  std::vector<MatrixRep> reps;
  const long step = modulus / order;
  for (long k = 0; k < order; ++k) {
    reps.emplace_back(std::map<char, CycMatrix>{{letter, scalar(CycNum::zeta(modulus, k * step))}},
                      std::vector<std::string>{power_word(std::string(1, letter), order)});
  }
  return reps;
}

std::vector<std::string> heisenberg_relations(long n) {
  return {power_word("A", n), power_word("B", n), power_word("C", n), "ACac", "BCbc", "ABabc"};
}

struct Triple {
  long i, j, l;
};

Triple decode(std::size_t e, long n) {
  const long x = static_cast<long>(e);
  return {x / (n * n), (x / n) % n, x % n};
}

}  // namespace

std::size_t HeisenbergModel::linear_index(long s, long t) const {
  return static_cast<std::size_t>(((s % n + n) % n) * n + ((t % n + n) % n));
}

std::size_t HeisenbergModel::rho_index(long a) const {
  const long r = ((a % n) + n) % n;
  if (r == 0) throw std::invalid_argument("rho_index: a must be coprime to n");
  return static_cast<std::size_t>(n * n + r - 1);
}

std::size_t HeisenbergModel::torus_char_index(long u, long v) const {
  return static_cast<std::size_t>(((u % n + n) % n) * n + ((v % n + n) % n));
}

MatrixRep heisenberg_rep(long n, long a) {
  const auto dim = static_cast<std::size_t>(n);
  std::vector<CycNum> diag;
  for (long i = 0; i < n; ++i) diag.push_back(CycNum::zeta(n, i * a));
  CycMatrix shift(dim, n);
  for (std::size_t i = 0; i < dim; ++i) shift.at((i + 1) % dim, i) = CycNum(n, 1);
  std::vector<CycNum> central(dim, CycNum::zeta(n, a));
  MatrixRep rep({{'A', CycMatrix::diagonal(diag)}, {'B', shift}, {'C', CycMatrix::diagonal(central)}},
                heisenberg_relations(n));
  std::vector<std::string> elements;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      for (long l = 0; l < n; ++l) elements.push_back(power_word("A", i) + power_word("B", j) + power_word("C", l));
    }
  }
  rep.set_element_enumeration(std::move(elements));
  return rep;
}

HeisenbergModel build_heisenberg(long n) {
  if (n % 2 == 0 || !is_prime(n)) throw std::invalid_argument("n must be an odd prime");
  HeisenbergModel m;
  m.n = n;
  const auto order = static_cast<std::size_t>(n * n * n);
  auto idx = [n](long i, long j, long l) {
    return static_cast<std::size_t>((((i % n + n) % n) * n + ((j % n + n) % n)) * n + ((l % n + n) % n));
  };
  // (A^i B^j C^l)(A^i' B^j' C^l') = A^(i+i') B^(j+j') C^(l+l'-i'j), from BA = C^-1 AB.
  auto law = [n, idx](std::size_t x, std::size_t y) {
    Triple p = decode(x, n);
    Triple q = decode(y, n);
    return idx(p.i + q.i, p.j + q.j, p.l + q.l - q.i * p.j);
  };
  m.group = FiniteGroup::from_law(order, law, {{'A', idx(1, 0, 0)}, {'B', idx(0, 1, 0)}, {'C', idx(0, 0, 1)}});
  m.table.name = "H" + std::to_string(n);
  m.table.structure = m.group.class_structure(n);
  m.class_reps = m.group.class_representatives();

  const auto relations = heisenberg_relations(n);
  for (long s = 0; s < n; ++s) {
    for (long t = 0; t < n; ++t) {
      ClassFunction chi;
      for (const auto& cls : m.group.classes()) {
        Triple e = decode(cls.front(), n);
        chi.values.push_back(CycNum::zeta(n, s * e.i + t * e.j));
      }
      m.table.irreducibles.push_back(std::move(chi));
      m.irreps.emplace_back(std::map<char, CycMatrix>{{'A', scalar(CycNum::zeta(n, s))},
                                                      {'B', scalar(CycNum::zeta(n, t))},
                                                      {'C', scalar(n, 1)}},
                            relations);
    }
  }
  for (long a = 1; a < n; ++a) {
    ClassFunction chi;
    for (const auto& cls : m.group.classes()) {
      Triple e = decode(cls.front(), n);
      const bool central = e.i == 0 && e.j == 0;
      chi.values.push_back(central ? CycNum::zeta(n, a * e.l) * Rational(n) : CycNum(n));
    }
    m.table.irreducibles.push_back(std::move(chi));
    m.rho.push_back(heisenberg_rep(n, a));
    m.irreps.push_back(m.rho.back());
  }
  m.table.refresh_linear_indices();

  SubgroupSpec torus{"T", {{'A', "A"}, {'C', "C"}}, {}};
  for (long u = 0; u < n; ++u) {
    for (long v = 0; v < n; ++v) {
      torus.irreps.emplace_back(
          std::map<char, CycMatrix>{{'A', scalar(CycNum::zeta(n, u))}, {'C', scalar(CycNum::zeta(n, v))}},
          std::vector<std::string>{power_word("A", n), power_word("C", n), "ACac"});
    }
  }
  m.table.embeddings.push_back(make_embedding(m.group, m.table.structure, torus));
  return m;
}

GroupModel build_symmetric3() {
  const long N = 6;
  const std::vector<std::string> rel{"SS", "RRR", "SRSR"};
  MatrixRep standard({{'S', matrix(N, {{0, 1}, {1, 0}})}, {'R', matrix(N, {{0, -1}, {1, -1}})}}, rel);
  std::vector<MatrixRep> irreps{
      MatrixRep({{'S', scalar(N, 1)}, {'R', scalar(N, 1)}}, rel),
      MatrixRep({{'S', scalar(N, -1)}, {'R', scalar(N, 1)}}, rel),
      standard,
  };
  return finish_model("S3", standard, "SR", std::move(irreps),
                      SubgroupSpec{"A3", {{'R', "R"}}, cyclic_sub_reps(N, 'R', 3)});
}

GroupModel build_dihedral4() {
  const long N = 4;
  const std::vector<std::string> rel{"RRRR", "SS", "SRSR"};
  MatrixRep faithful({{'R', matrix(N, {{0, -1}, {1, 0}})}, {'S', matrix(N, {{1, 0}, {0, -1}})}}, rel);
  auto irreps = sign_pattern_reps(N, 'R', 'S', rel);
  irreps.push_back(faithful);
  return finish_model("D4", faithful, "RS", std::move(irreps),
                      SubgroupSpec{"C4", {{'R', "R"}}, cyclic_sub_reps(N, 'R', 4)});
}

GroupModel build_quaternion8() {
  const long N = 4;
  const std::vector<std::string> rel{"IIII", "IIjj", "JIjI"};
  MatrixRep faithful({{'I', CycMatrix::diagonal({CycNum::zeta(N, 1), CycNum::zeta(N, 3)})},
                      {'J', matrix(N, {{0, -1}, {1, 0}})}},
                     rel);
  auto irreps = sign_pattern_reps(N, 'I', 'J', rel);
  irreps.push_back(faithful);
  return finish_model("Q8", faithful, "IJ", std::move(irreps),
                      SubgroupSpec{"<i>", {{'I', "I"}}, cyclic_sub_reps(N, 'I', 4)});
}

CharacterTable build_named_table(const std::string& spec) {
  const auto star = spec.find('*');
  if (star != std::string::npos) {
    return build_direct_product(build_named_table(spec.substr(0, star)), build_named_table(spec.substr(star + 1)));
  }
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  long param = 0;
  if (colon != std::string::npos) {
    try {
      param = std::stol(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad group parameter in '" + spec + "'");
    }
  }
  if (kind == "cyclic" && colon != std::string::npos) return build_cyclic(param);
  if (kind == "heisenberg" && colon != std::string::npos) return build_heisenberg(param).table;
  if (kind == "s3") return build_symmetric3().table;
  if (kind == "d4") return build_dihedral4().table;
  if (kind == "q8") return build_quaternion8().table;
  throw std::invalid_argument("unknown group '" + spec + "'");
}

std::vector<CharacterTable> standard_corpus() {
  std::vector<CharacterTable> corpus;
  for (long n = 1; n <= 12; ++n) corpus.push_back(build_cyclic(n));
  corpus.push_back(build_symmetric3().table);
  corpus.push_back(build_dihedral4().table);
  corpus.push_back(build_quaternion8().table);
  corpus.push_back(build_heisenberg(3).table);
  corpus.push_back(build_heisenberg(5).table);
  corpus.push_back(build_direct_product(build_cyclic(2), build_cyclic(2)));
  corpus.push_back(build_direct_product(build_cyclic(3), build_cyclic(3)));
  return corpus;
}

}  // namespace twistlab

#include "twistlab/equivalence.hpp"

#include <set>
#include <stdexcept>

#include "twistlab/powerops.hpp"

namespace twistlab {

namespace {

void require_size(const ClassFunction& chi, std::size_t n, const char* what) {
  if (chi.size() != n) throw std::invalid_argument(std::string(what) + ": class count mismatch");
}

const CharacterTable& sub_table_of(const SubgroupEmbedding& e, const char* what) {
  if (!e.sub_table) throw std::invalid_argument(std::string(what) + ": embedding has no sub_table");
  return *e.sub_table;
}

std::optional<Integer> as_nonneg_integer(const CycNum& z) {
  if (!z.is_rational()) return std::nullopt;
  Rational q = z.rational_value();
  if (q.get_den() != 1 || q < 0) return std::nullopt;
  return q.get_num();
}

std::vector<std::size_t> twists_in(const ClassFunction& a, const ClassFunction& b, const CharacterTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i : t.linear_indices) {
    if (a * t.irreducibles[i] == b) out.push_back(i);
  }
  return out;
}

}  // namespace

Decomposition inner_product_and_decompose(const ClassFunction& chi, const CharacterTable& t) {
  const auto& s = t.structure;
  require_size(chi, s.num_classes(), "decompose");
  Decomposition d;
  d.selfnorm = inner_product(chi, chi, s);
  d.irreducible = d.selfnorm.is_one();
  d.genuine = true;
  for (const auto& row : t.irreducibles) {
    d.inner_products.push_back(inner_product(chi, row, s));
    auto m = as_nonneg_integer(d.inner_products.back());
    if (!m) {
      d.genuine = false;
    } else {
      d.multiplicities.push_back(*m);
    }
  }
  if (!d.genuine) {
    d.multiplicities.clear();
    return d;
  }
  ClassFunction sum(std::vector<CycNum>(s.num_classes(), CycNum(s.modulus)));
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    if (d.multiplicities[i] != 0) sum += t.irreducibles[i] * Rational(d.multiplicities[i]);
  }
  d.reconstructs = sum == chi;
  if (!d.reconstructs) throw std::logic_error("decompose: multiplicities do not reconstruct the character");
  return d;
}

RatioVerdict power_char_ratio_test(const ClassFunction& chi1, const ClassFunction& chi2, long k) {
  if (k < 1) throw std::invalid_argument("ratio test: k must be positive");
  require_size(chi2, chi1.size(), "ratio test");
  RatioVerdict v;
  v.k = k;
  v.equal_powers = true;
  for (std::size_t c = 0; c < chi1.size(); ++c) {
    ClassWitness w;
    w.powers_equal = chi1[c].pow(k) == chi2[c].pow(k);
    w.both_zero = chi1[c].is_zero() && chi2[c].is_zero();
    try {
      w.ratio = root_of_unity_ratio(chi1[c], chi2[c]);
    } catch (const UndefinedRatio&) {
      w.ratio.reset();
    }
    v.equal_powers = v.equal_powers && w.powers_equal;
    v.witnesses.push_back(std::move(w));
  }
  return v;
}

std::vector<std::size_t> find_twist(const ClassFunction& chi1, const ClassFunction& chi2, const CharacterTable& t,
                                    const SubgroupEmbedding* restriction) {
  require_size(chi1, t.structure.num_classes(), "find_twist");
  require_size(chi2, t.structure.num_classes(), "find_twist");
  if (!restriction) return twists_in(chi1, chi2, t);
  const auto& sub = sub_table_of(*restriction, "find_twist");
  return twists_in(restrict_char(chi1, *restriction), restrict_char(chi2, *restriction), sub);
}

bool is_invariant(const ClassFunction& chi_prime, const SubgroupEmbedding& e) {
  for (std::size_t x = 0; x < e.conj_action.size(); ++x) {
    if (!(conjugate_sub_char(chi_prime, e, x) == chi_prime)) return false;
  }
  return true;
}

ExtendResult extend_twist(const ClassFunction& chi1, const ClassFunction& chi2, const CharacterTable& t,
                          const SubgroupEmbedding& e, const ClassFunction& chi_prime) {
  if (!e.has_coset_data()) throw std::invalid_argument("extend_twist: subgroup must be normal with coset data");
  const auto& sub = sub_table_of(e, "extend_twist");
  require_size(chi1, t.structure.num_classes(), "extend_twist");
  require_size(chi2, t.structure.num_classes(), "extend_twist");
  require_size(chi_prime, e.sub.num_classes(), "extend_twist");
  if (!chi_prime.degree(e.sub).is_one()) throw std::invalid_argument("extend_twist: chi' is not linear");
  const ClassFunction r1 = restrict_char(chi1, e);
  if (!(restrict_char(chi2, e) == r1 * chi_prime)) {
    throw std::invalid_argument("extend_twist: chi2|H differs from chi1|H * chi'");
  }

  ExtendResult out;
  out.restriction_irreducible = inner_product(r1, r1, sub.structure).is_one();
  out.chi_prime_invariant = is_invariant(chi_prime, e);
  for (std::size_t i : t.linear_indices) {
    if (restrict_char(t.irreducibles[i], e) == chi_prime) out.extensions.push_back(i);
  }
  for (std::size_t i : out.extensions) {
    if (chi1 * t.irreducibles[i] == chi2) {
      out.twist = i;
      break;
    }
  }
  if (out.twist && !out.chi_prime_invariant) {
    throw std::logic_error("extend_twist: global twist found for a non-invariant chi'");
  }
  return out;
}

std::size_t act_on_sub_row(std::size_t row, const SubgroupEmbedding& e, std::size_t coset) {
  const auto& sub = sub_table_of(e, "act_on_sub_row");
  auto image = find_irreducible(sub, conjugate_sub_char(sub.irreducibles.at(row), e, coset));
  if (!image) throw std::logic_error("conjugation action does not permute the irreducibles of H");
  return *image;
}

CliffordResult clifford_analysis(const ClassFunction& chi, const CharacterTable& t, const SubgroupEmbedding& e) {
  if (!e.has_coset_data()) throw std::invalid_argument("clifford: subgroup must be normal with coset data");
  const auto& sub = sub_table_of(e, "clifford");
  require_size(chi, t.structure.num_classes(), "clifford");

  CliffordResult out;
  const auto d = inner_product_and_decompose(restrict_char(chi, e), sub);
  if (!d.genuine) throw std::invalid_argument("clifford: restriction is not a genuine character of H");
  for (std::size_t i = 0; i < d.multiplicities.size(); ++i) {
    if (d.multiplicities[i] != 0) out.constituents.emplace_back(i, d.multiplicities[i]);
  }

  const std::size_t cosets = e.conj_action.size();
  std::vector<bool> placed(sub.irreducibles.size(), false);
  for (std::size_t i = 0; i < sub.irreducibles.size(); ++i) {
    if (placed[i]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t x = 0; x < cosets; ++x) orbit.insert(act_on_sub_row(i, e, x));
    for (std::size_t j : orbit) placed[j] = true;
    out.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  if (out.constituents.empty()) return out;

  const std::size_t i0 = out.constituents.front().first;
  for (const auto& orbit : out.orbits) {
    for (std::size_t j : orbit) {
      if (j == i0) out.constituent_orbit = orbit;
    }
  }
  for (std::size_t x = 0; x < cosets; ++x) {
    if (act_on_sub_row(i0, e, x) == i0) out.stabilizer_cosets.push_back(x);
  }
  if (out.stabilizer_cosets.size() == 1) {
    out.induced_check = induce_char(sub.irreducibles[i0], e, t.structure) == chi;
  }
  return out;
}

std::optional<AdjointSearch> adjoint_twist_or_dual_search(const ClassFunction& chi1, const ClassFunction& chi2,
                                                          const CharacterTable& t) {
  const auto& s = t.structure;
  if (!(adjoint_char(chi1, s) == adjoint_char(chi2, s))) {
    throw std::invalid_argument("adjoint search: adjoint characters differ");
  }
  auto direct = twists_in(chi1, chi2, t);
  if (!direct.empty()) return AdjointSearch{TwistBranch::Twist, direct.front()};
  auto dual = twists_in(dual_char(chi1, s), chi2, t);
  if (!dual.empty()) return AdjointSearch{TwistBranch::DualTwist, dual.front()};
  return std::nullopt;
}

}  // namespace twistlab

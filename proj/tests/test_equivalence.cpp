#include <gtest/gtest.h>

#include "twistlab/corpus.hpp"
#include "twistlab/equivalence.hpp"
#include "twistlab/powerops.hpp"

using namespace twistlab;

namespace {

ClassFunction cf(long n, std::initializer_list<long> v) {
  ClassFunction out;
  for (long x : v) out.values.push_back(CycNum(n, x));
  return out;
}

bool is_scalar(const CycMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (r != c && !m.at(r, c).is_zero()) return false;
      if (r == c && !(m.at(r, c) == m.at(0, 0))) return false;
    }
  }
  return true;
}

// Element-level oracle: lambda twists rep1 into rep2 when the traces agree
// at every element of the group.
std::vector<std::size_t> element_twists(const GroupModel& m, std::size_t i1, std::size_t i2) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < m.irreps.size(); ++l) {
    if (m.irreps[l].dimension() != 1) continue;
    bool ok = true;
    for (std::size_t g = 0; g < m.group.order() && ok; ++g) {
      const auto& w = m.group.word(g);
      ok = m.irreps[i1].evaluate(w).trace() * m.irreps[l].evaluate(w).trace() == m.irreps[i2].evaluate(w).trace();
    }
    if (ok) out.push_back(l);
  }
  return out;
}

}  // namespace

TEST(Decompose, S3Standard) {
  auto t = build_symmetric3().table;
  auto d = inner_product_and_decompose(t.irreducibles[2], t);
  EXPECT_TRUE(d.selfnorm.is_one());
  EXPECT_TRUE(d.irreducible);
  EXPECT_EQ(d.multiplicities, (std::vector<Integer>{0, 0, 1}));
  EXPECT_TRUE(d.reconstructs);
}

TEST(Decompose, C2Regular) {
  auto t = build_cyclic(2);
  auto d = inner_product_and_decompose(cf(2, {2, 0}), t);
  EXPECT_EQ(d.multiplicities, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(d.selfnorm, CycNum(2, 2));
  EXPECT_FALSE(d.irreducible);
}

TEST(Decompose, DistinctHeisenbergRowsOrthogonal) {
  auto m = build_heisenberg(3);
  EXPECT_TRUE(inner_product(m.table.irreducibles[m.rho_index(1)], m.table.irreducibles[m.rho_index(2)],
                            m.table.structure)
                  .is_zero());
}

TEST(Decompose, NonGenuineIsFlagged) {
  auto t = build_cyclic(2);
  auto d = inner_product_and_decompose(cf(2, {1, 0}), t);  // half the regular character
  EXPECT_FALSE(d.genuine);
  EXPECT_TRUE(d.multiplicities.empty());
  auto v = inner_product_and_decompose(t.irreducibles[0] - t.irreducibles[1], t);
  EXPECT_FALSE(v.genuine);
}

TEST(RatioTest, SelfIsTrivial) {
  auto t = build_symmetric3().table;
  auto v = power_char_ratio_test(t.irreducibles[2], t.irreducibles[2], 4);
  EXPECT_TRUE(v.equal_powers);
  for (const auto& w : v.witnesses) {
    EXPECT_TRUE(w.powers_equal);
    ASSERT_TRUE(w.ratio);
    EXPECT_EQ(w.ratio->order, 1);
  }
  EXPECT_TRUE(v.witnesses[1].both_zero);
}

TEST(RatioTest, HeisenbergCubes) {
  auto m = build_heisenberg(3);
  auto v = power_char_ratio_test(m.table.irreducibles[m.rho_index(1)], m.table.irreducibles[m.rho_index(2)], 3);
  EXPECT_TRUE(v.equal_powers);
  const auto c = m.group.class_of(m.group.evaluate("C"));
  ASSERT_TRUE(v.witnesses[c].ratio);
  EXPECT_EQ(v.witnesses[c].ratio->order, 3);
  EXPECT_FALSE(power_char_ratio_test(m.table.irreducibles[m.rho_index(1)], m.table.irreducibles[m.rho_index(2)], 2)
                   .equal_powers);
}

TEST(RatioTest, S3TrivialVersusSign) {
  auto t = build_symmetric3().table;
  EXPECT_FALSE(power_char_ratio_test(t.irreducibles[0], t.irreducibles[1], 3).equal_powers);
  EXPECT_TRUE(power_char_ratio_test(t.irreducibles[0], t.irreducibles[1], 2).equal_powers);
}

TEST(FindTwist, Examples) {
  auto s3 = build_symmetric3().table;
  EXPECT_EQ(find_twist(s3.irreducibles[2], s3.irreducibles[2], s3), (std::vector<std::size_t>{0, 1}));

  auto m = build_heisenberg(3);
  const auto& t = m.table;
  const auto& chi1 = t.irreducibles[m.rho_index(1)];
  const auto& chi2 = t.irreducibles[m.rho_index(2)];
  EXPECT_TRUE(find_twist(chi1, chi2, t).empty());
  auto local = find_twist(chi1, chi2, t, &m.torus());
  EXPECT_FALSE(local.empty());
  EXPECT_NE(std::find(local.begin(), local.end(), m.torus_char_index(0, 1)), local.end());
}

TEST(FindTwist, RestrictionWithoutSubTableThrows) {
  auto m = build_heisenberg(3);
  auto e = m.torus();
  e.sub_table.reset();
  EXPECT_THROW(find_twist(m.table.irreducibles[9], m.table.irreducibles[10], m.table, &e), std::invalid_argument);
}

TEST(FindTwist, MatchesElementOracle) {
  std::vector<GroupModel> models{build_symmetric3(), build_dihedral4(), build_quaternion8()};
  models.push_back(build_heisenberg(3));
  for (const auto& m : models) {
    for (std::size_t i = 0; i < m.irreps.size(); ++i) {
      for (std::size_t j = 0; j < m.irreps.size(); ++j) {
        auto found = find_twist(m.table.irreducibles[i], m.table.irreducibles[j], m.table);
        EXPECT_EQ(found, element_twists(m, i, j)) << m.table.name << " " << i << " " << j;
        for (auto l : found) EXPECT_EQ(m.table.irreducibles[i] * m.table.irreducibles[l], m.table.irreducibles[j]);
      }
    }
  }
}

TEST(ExtendTwist, ConstructedPositiveCase) {
  auto m = build_dihedral4();
  const auto& t = m.table;
  const auto& e = t.embeddings[0];
  const auto& chi1 = t.irreducibles[4];
  for (auto eta : t.linear_indices) {
    const auto chi2 = chi1 * t.irreducibles[eta];
    auto r = extend_twist(chi1, chi2, t, e, restrict_char(t.irreducibles[eta], e));
    ASSERT_TRUE(r.twist);
    EXPECT_EQ(chi1 * t.irreducibles[*r.twist], chi2);
    EXPECT_TRUE(r.chi_prime_invariant);
  }
  // a linear chi1 has irreducible restriction
  const auto& lin = t.irreducibles[1];
  auto r = extend_twist(lin, lin * t.irreducibles[2], t, e, restrict_char(t.irreducibles[2], e));
  EXPECT_TRUE(r.restriction_irreducible);
  ASSERT_TRUE(r.twist);
}

TEST(ExtendTwist, HeisenbergNegativeCase) {
  auto m = build_heisenberg(3);
  const auto& t = m.table;
  const auto& e = m.torus();
  auto r = extend_twist(t.irreducibles[m.rho_index(1)], t.irreducibles[m.rho_index(2)], t, e,
                        e.sub_table->irreducibles[m.torus_char_index(0, 1)]);
  EXPECT_FALSE(r.twist);
  EXPECT_FALSE(r.restriction_irreducible);
  EXPECT_FALSE(r.chi_prime_invariant);
  EXPECT_TRUE(r.extensions.empty());
}

TEST(ExtendTwist, S3StandardBySign) {
  auto t = build_symmetric3().table;
  const auto& e = t.embeddings[0];
  const auto& std_char = t.irreducibles[2];
  auto r = extend_twist(std_char, std_char * t.irreducibles[1], t, e, e.sub_table->irreducibles[0]);
  ASSERT_TRUE(r.twist);
  EXPECT_TRUE(*r.twist == 0 || *r.twist == 1);
  EXPECT_TRUE(r.chi_prime_invariant);
}

TEST(ExtendTwist, Preconditions) {
  auto m = build_heisenberg(3);
  const auto& t = m.table;
  auto e = m.torus();
  // chi2|T != chi1|T * chi' for the trivial chi'
  EXPECT_THROW(extend_twist(t.irreducibles[9], t.irreducibles[10], t, e, e.sub_table->irreducibles[0]),
               std::invalid_argument);
  // non-linear chi'
  EXPECT_THROW(extend_twist(t.irreducibles[9], t.irreducibles[9], t, e, restrict_char(t.irreducibles[9], e)),
               std::invalid_argument);
  auto no_table = e;
  no_table.sub_table.reset();
  EXPECT_THROW(extend_twist(t.irreducibles[9], t.irreducibles[9], t, no_table, e.sub_table->irreducibles[0]),
               std::invalid_argument);
}

// Over abelian normal subgroups: an irreducible restriction plus an
// invariant chi' always yields a global twist; a returned twist always comes
// with an invariant chi'.
TEST(ExtendTwist, LemmaAcrossCorpus) {
  std::vector<CharacterTable> tables{build_symmetric3().table, build_dihedral4().table, build_quaternion8().table,
                                     build_heisenberg(3).table, build_heisenberg(5).table};
  auto c6 = build_cyclic(6);
  c6.embeddings.push_back(whole_group_embedding(c6));
  tables.push_back(c6);
  int lemma_cases = 0;
  for (const auto& t : tables) {
    const auto& e = t.embeddings[0];
    for (const auto& chi1 : t.irreducibles) {
      for (const auto& chi2 : t.irreducibles) {
        for (auto j : find_twist(chi1, chi2, t, &e)) {
          auto r = extend_twist(chi1, chi2, t, e, e.sub_table->irreducibles[j]);
          if (r.twist) EXPECT_TRUE(r.chi_prime_invariant);
          if (r.restriction_irreducible && r.chi_prime_invariant) {
            ++lemma_cases;
            EXPECT_TRUE(r.twist || r.extensions.empty()) << t.name;
            EXPECT_TRUE(r.twist.has_value()) << t.name;
          }
        }
      }
    }
  }
  EXPECT_GT(lemma_cases, 0);
}

// The matrix mechanism: with rho1|H (x) chi' equal to rho2|H as matrices,
// T(s) = rho1(s)^-1 rho2(s) is the scalar chi(s) when a twist exists.
TEST(ExtendTwist, MatrixLevelMechanismS3) {
  auto m = build_symmetric3();
  const auto& rho1 = m.irreps[2];
  const auto& sign = m.irreps[1];
  for (std::size_t g = 0; g < m.group.order(); ++g) {
    const auto& w = m.group.word(g);
    CycMatrix rho2 = rho1.evaluate(w) * CycMatrix::diagonal({sign.evaluate(w).at(0, 0), sign.evaluate(w).at(0, 0)});
    CycMatrix tm = rho1.evaluate(w).inverse() * rho2;
    EXPECT_TRUE(is_scalar(tm));
    EXPECT_EQ(tm.at(0, 0), sign.evaluate(w).trace());
  }
}

TEST(ExtendTwist, MatrixLevelMechanismFailsForHeisenberg) {
  for (long n : {3L, 5L}) {
    auto m = build_heisenberg(n);
    for (long a = 1; a < n; ++a) {
      for (long b = 1; b < n; ++b) {
        if (a == b) continue;
        const auto& ra = m.rho[static_cast<std::size_t>(a - 1)];
        const auto& rb = m.rho[static_cast<std::size_t>(b - 1)];
        // P e_i = e_(i a / b) makes P rho_a P^-1 (x) chi' agree with rho_b on T
        long binv = 1;
        while ((b * binv) % n != 1) ++binv;
        CycMatrix p(static_cast<std::size_t>(n), n);
        for (long i = 0; i < n; ++i) p.at(static_cast<std::size_t>((i * a * binv) % n), static_cast<std::size_t>(i)) = CycNum(n, 1);
        const CycMatrix pinv = p.inverse();
        auto conj_a = [&](const std::string& w) { return p * ra.evaluate(w) * pinv; };
        const CycNum chi_prime_c = CycNum::zeta(n, b - a);
        ASSERT_EQ(conj_a("A"), rb.evaluate("A"));
        ASSERT_EQ(conj_a("C") * CycMatrix::diagonal(std::vector<CycNum>(static_cast<std::size_t>(n), chi_prime_c)),
                  rb.evaluate("C"));
        // On T the quotient is the scalar chi'; at B it is not scalar.
        EXPECT_TRUE(is_scalar(conj_a("AC").inverse() * rb.evaluate("AC")));
        EXPECT_FALSE(is_scalar(conj_a("B").inverse() * rb.evaluate("B")));
      }
    }
  }
}

TEST(Clifford, HeisenbergOverTorus) {
  auto m = build_heisenberg(3);
  auto r = clifford_analysis(m.table.irreducibles[m.rho_index(1)], m.table, m.torus());
  ASSERT_EQ(r.constituents.size(), 3u);
  for (const auto& c : r.constituents) EXPECT_EQ(c.second, 1);
  EXPECT_EQ(r.constituent_orbit.size(), 3u);
  EXPECT_EQ(r.stabilizer_cosets, (std::vector<std::size_t>{0}));
  ASSERT_TRUE(r.induced_check);
  EXPECT_TRUE(*r.induced_check);
}

TEST(Clifford, AbelianWholeGroup) {
  auto t = build_cyclic(5);
  auto e = whole_group_embedding(t);
  auto r = clifford_analysis(t.irreducibles[2], t, e);
  ASSERT_EQ(r.constituents.size(), 1u);
  EXPECT_EQ(e.sub_table->irreducibles[r.constituents[0].first], t.irreducibles[2]);
  EXPECT_EQ(r.constituent_orbit.size(), 1u);
  EXPECT_EQ(r.orbits.size(), 5u);
}

TEST(Clifford, S3StandardOverA3) {
  auto t = build_symmetric3().table;
  const auto& e = t.embeddings[0];
  auto r = clifford_analysis(t.irreducibles[2], t, e);
  ASSERT_EQ(r.constituents.size(), 2u);
  const auto w1 = r.constituents[0].first, w2 = r.constituents[1].first;
  EXPECT_EQ(act_on_sub_row(w1, e, 1), w2);
  EXPECT_EQ(r.stabilizer_cosets, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(r.induced_check.value_or(false));
}

TEST(Clifford, DegreeBookkeepingAcrossCorpus) {
  std::vector<CharacterTable> tables{build_symmetric3().table, build_dihedral4().table, build_quaternion8().table,
                                     build_heisenberg(3).table, build_heisenberg(5).table};
  for (const auto& t : tables) {
    const auto& e = t.embeddings[0];
    for (const auto& chi : t.irreducibles) {
      auto r = clifford_analysis(chi, t, e);
      CycNum total(t.modulus());
      for (const auto& [i, mult] : r.constituents) {
        total += e.sub_table->irreducibles[i].degree(e.sub) * Rational(mult);
      }
      EXPECT_EQ(total, chi.degree(t.structure)) << t.name;
    }
  }
}

TEST(AdjointSearch, Cases) {
  auto s3 = build_symmetric3().table;
  auto same = adjoint_twist_or_dual_search(s3.irreducibles[2], s3.irreducibles[2], s3);
  ASSERT_TRUE(same);
  EXPECT_EQ(same->branch, TwistBranch::Twist);
  EXPECT_EQ(same->lambda, 0u);

  auto h3 = build_heisenberg(3);
  auto dual = adjoint_twist_or_dual_search(h3.table.irreducibles[h3.rho_index(1)],
                                           h3.table.irreducibles[h3.rho_index(2)], h3.table);
  ASSERT_TRUE(dual);
  EXPECT_EQ(dual->branch, TwistBranch::DualTwist);
  EXPECT_EQ(dual->lambda, 0u);

  auto h5 = build_heisenberg(5);
  EXPECT_FALSE(adjoint_twist_or_dual_search(h5.table.irreducibles[h5.rho_index(1)],
                                            h5.table.irreducibles[h5.rho_index(2)], h5.table));

  EXPECT_THROW(adjoint_twist_or_dual_search(s3.irreducibles[0], s3.irreducibles[2], s3), std::invalid_argument);
}

TEST(EquivalenceProperty, IrreducibilityTransfersUnderEqualPowers) {
  int pairs = 0;
  for (const auto& t : standard_corpus()) {
    const auto& s = t.structure;
    for (const auto& a : t.irreducibles) {
      for (const auto& b : t.irreducibles) {
        if (!power_char_ratio_test(a, b, s.exponent).equal_powers) continue;
        ++pairs;
        EXPECT_EQ(inner_product(a, a, s), inner_product(b, b, s)) << t.name;
      }
    }
    // also for reducible characters built from sums of irreducibles
    if (t.irreducibles.size() >= 2) {
      auto sum = t.irreducibles[0] + t.irreducibles[1];
      for (const auto& b : t.irreducibles) EXPECT_FALSE(power_char_ratio_test(sum, b, s.exponent).equal_powers);
    }
  }
  EXPECT_GT(pairs, 0);
}

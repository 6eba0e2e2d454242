#include <gtest/gtest.h>

#include "twistlab/corpus.hpp"
#include "twistlab/density.hpp"

using namespace twistlab;

namespace {

// Agreement density straight from the element model, one element at a time.
Rational element_agreement(const GroupModel& m, std::size_t i, std::size_t j) {
  long agree = 0;
  for (std::size_t g = 0; g < m.group.order(); ++g) {
    const auto& w = m.group.word(g);
    agree += m.irreps[i].evaluate(w).trace() == m.irreps[j].evaluate(w).trace();
  }
  return make_rational(Integer(agree), Integer(static_cast<long>(m.group.order())));
}

}  // namespace

TEST(Density, AgreementExamples) {
  auto c2 = build_cyclic(2);
  EXPECT_EQ(agreement_density(c2.irreducibles[0], c2.irreducibles[1], c2.structure), make_rational(1, 2));
  EXPECT_EQ(agreement_density(c2.irreducibles[1], c2.irreducibles[1], c2.structure), Rational(1));
  auto h = build_heisenberg(3);
  EXPECT_EQ(agreement_density(h.table.irreducibles[h.rho_index(1)], h.table.irreducibles[h.rho_index(2)],
                              h.table.structure),
            make_rational(25, 27));
}

TEST(Density, AgreementMatchesElementCount) {
  std::vector<GroupModel> models{build_symmetric3(), build_dihedral4(), build_quaternion8()};
  models.push_back(build_heisenberg(3));
  for (const auto& m : models) {
    for (std::size_t i = 0; i < m.irreps.size(); ++i) {
      for (std::size_t j = 0; j < m.irreps.size(); ++j) {
        EXPECT_EQ(agreement_density(m.table.irreducibles[i], m.table.irreducibles[j], m.table.structure),
                  element_agreement(m, i, j))
            << m.table.name;
      }
    }
  }
}

TEST(Density, ComponentExamples) {
  auto h = build_heisenberg(3);
  EXPECT_EQ(component_density(h.table.irreducibles[h.rho_index(1)], h.table.irreducibles[h.rho_index(2)], h.torus()),
            make_rational(2, 3));
  auto s3 = build_symmetric3().table;
  EXPECT_EQ(component_density(s3.irreducibles[0], s3.irreducibles[1], s3.embeddings[0]), make_rational(1, 2));
  auto c4 = build_cyclic(4);
  auto whole = whole_group_embedding(c4);
  EXPECT_EQ(component_density(c4.irreducibles[1], c4.irreducibles[1], whole), Rational(1));
  EXPECT_EQ(component_density(c4.irreducibles[1], c4.irreducibles[3], whole), Rational(0));
  auto no_cosets = s3.embeddings[0];
  no_cosets.coset_of_class.clear();
  EXPECT_THROW(component_density(s3.irreducibles[0], s3.irreducibles[1], no_cosets), std::invalid_argument);
}

TEST(Density, ReportC2IsTight) {
  auto c2 = build_cyclic(2);
  auto r = dh_bounds_report(c2.irreducibles[0], c2.irreducibles[1], c2.structure);
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.lambda_elem, make_rational(1, 2));
  EXPECT_EQ(r.dh1_bound, make_rational(1, 2));
  EXPECT_EQ(r.mean_square_diff, Rational(2));
  EXPECT_EQ(r.mean_square_diff, (1 - r.lambda_elem) * 4);
  EXPECT_FALSE(r.characters_equal);
  EXPECT_TRUE(r.all_verdicts_hold());
  EXPECT_EQ(r.verdicts.size(), 4u);
}

TEST(Density, ReportHeisenberg) {
  auto h = build_heisenberg(3);
  auto r = dh_bounds_report(h.table.irreducibles[h.rho_index(1)], h.table.irreducibles[h.rho_index(2)],
                            h.table.structure, &h.torus());
  EXPECT_EQ(r.m, 3);
  EXPECT_EQ(r.lambda_elem, make_rational(25, 27));
  EXPECT_EQ(r.dh1_bound, make_rational(17, 18));
  EXPECT_LE(r.lambda_elem, r.dh1_bound);
  EXPECT_EQ(r.mean_square_diff, Rational(2));
  ASSERT_TRUE(r.lambda_comp);
  EXPECT_EQ(*r.lambda_comp, make_rational(2, 3));
  EXPECT_EQ(r.identity_coset_in_x, false);
  EXPECT_EQ(r.restrictions_equal, false);
  EXPECT_EQ(r.dh2_c, 3);
  EXPECT_EQ(r.dh2_bound, make_rational(2, 3));
  EXPECT_EQ(r.verdicts.size(), 5u);
  EXPECT_TRUE(r.all_verdicts_hold());
}

TEST(Density, ReportRejectsDegreeMismatch) {
  auto s3 = build_symmetric3().table;
  EXPECT_THROW(dh_bounds_report(s3.irreducibles[0], s3.irreducibles[2], s3.structure), std::invalid_argument);
  EXPECT_THROW(dh_bounds_report(s3.irreducibles[0] * make_rational(1, 2), s3.irreducibles[0] * make_rational(1, 2),
                                s3.structure),
               std::invalid_argument);
}

TEST(Density, ReportJson) {
  auto c2 = build_cyclic(2);
  auto j = density_report_to_json(dh_bounds_report(c2.irreducibles[0], c2.irreducibles[1], c2.structure));
  EXPECT_EQ(j["lambda_elem"], "1/2");
  EXPECT_EQ(j["mean_square_diff"], "2/1");
  EXPECT_EQ(j["dh1_bound"], "1/2");
  EXPECT_EQ(j["verdicts"].size(), 4u);
  EXPECT_TRUE(j["verdicts"]["(i) distinct implies mean_square_diff >= 2"].get<bool>());
  EXPECT_FALSE(j.contains("component_model"));
}

TEST(TraceLemma, Heisenberg3Rho1) {
  auto r = trace_identity_lemma_check(heisenberg_rep(3, 1));
  EXPECT_EQ(r.elements, 27u);
  EXPECT_EQ(r.trace_equals_dimension, 1u);
  EXPECT_EQ(r.identity_matrices, 1u);
  EXPECT_TRUE(r.holds);
}

TEST(TraceLemma, Heisenberg5Rho2) {
  auto r = trace_identity_lemma_check(heisenberg_rep(5, 2));
  EXPECT_EQ(r.elements, 125u);
  EXPECT_EQ(r.trace_equals_dimension, 1u);
  EXPECT_TRUE(r.holds);
}

TEST(TraceLemma, TrivialImage) {
  MatrixRep triv({{'A', CycMatrix::identity(1, 3)}, {'B', CycMatrix::identity(1, 3)}}, {"AAA", "BBB"});
  triv.set_element_enumeration({"", "A", "AA", "B", "AB", "BB"});
  auto r = trace_identity_lemma_check(triv);
  EXPECT_EQ(r.elements, 6u);
  EXPECT_EQ(r.trace_equals_dimension, 6u);
  EXPECT_EQ(r.identity_matrices, 6u);
  EXPECT_TRUE(r.holds);
}

TEST(TraceLemma, MissingEnumerationThrows) {
  MatrixRep rep({{'A', CycMatrix::identity(2, 1)}});
  EXPECT_THROW(trace_identity_lemma_check(rep), std::invalid_argument);
}

TEST(Threshold, Gl2IdentityForMUpTo10) {
  for (long m = 1; m <= 10; ++m) {
    auto [lhs, rhs] = gl2_threshold(m);
    EXPECT_EQ(lhs, rhs);
    const Integer dim = Integer(1) << static_cast<mp_bitcnt_t>(m);
    EXPECT_EQ(lhs, dh1_bound(dim));
  }
  EXPECT_EQ(gl2_threshold(1).first, make_rational(7, 8));
}

TEST(DensityProperty, CorpusSweep) {
  int pairs = 0;
  for (const auto& t : standard_corpus()) {
    const SubgroupEmbedding* e = nullptr;
    if (!t.embeddings.empty() && t.embeddings[0].has_coset_data()) e = &t.embeddings[0];
    for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
      for (std::size_t j = 0; j < t.irreducibles.size(); ++j) {
        const auto& a = t.irreducibles[i];
        const auto& b = t.irreducibles[j];
        if (!(a.degree(t.structure) == b.degree(t.structure))) continue;
        auto r = dh_bounds_report(a, b, t.structure, e);
        EXPECT_TRUE(r.all_verdicts_hold()) << t.name << " " << i << " " << j;
        EXPECT_EQ(r.lambda_elem, agreement_density(b, a, t.structure));
        EXPECT_EQ(r.characters_equal, i == j);
        EXPECT_EQ(r.lambda_elem == 1, i == j);
        EXPECT_GE(r.mean_square_diff, 0);
        if (i != j) {
          ++pairs;
          EXPECT_GE(r.mean_square_diff, 2);
          EXPECT_LE(r.lambda_elem, r.dh1_bound);
        }
        if (e) EXPECT_EQ(*r.identity_coset_in_x, *r.restrictions_equal);
      }
    }
  }
  EXPECT_GT(pairs, 100);
}

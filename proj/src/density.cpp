#include "twistlab/density.hpp"

#include <stdexcept>

namespace twistlab {

namespace {

Integer positive_degree(const ClassFunction& chi, const ClassStructure& s) {
  const CycNum& d = chi.degree(s);
  if (!d.is_rational() || d.rational_value().get_den() != 1 || d.rational_value() <= 0) {
    throw std::invalid_argument("density: degree must be a positive integer");
  }
  return d.rational_value().get_num();
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(p);
}

}  // namespace

Rational agreement_density(const ClassFunction& chi1, const ClassFunction& chi2, const ClassStructure& s) {
  if (chi1.size() != s.num_classes() || chi2.size() != s.num_classes()) {
    throw std::invalid_argument("agreement_density: class count mismatch");
  }
  Integer agree = 0;
  for (std::size_t c = 0; c < s.num_classes(); ++c) {
    if (chi1[c] == chi2[c]) agree += s.class_sizes[c];
  }
  return make_rational(agree, s.order);
}

Rational component_density(const ClassFunction& chi1, const ClassFunction& chi2, const SubgroupEmbedding& e) {
  if (!e.has_coset_data()) throw std::invalid_argument("component_density: embedding has no coset data");
  if (chi1.size() != e.coset_of_class.size() || chi2.size() != e.coset_of_class.size()) {
    throw std::invalid_argument("component_density: class count mismatch");
  }
  std::vector<bool> good(e.quotient_table.size(), true);
  for (std::size_t c = 0; c < chi1.size(); ++c) {
    if (!(chi1[c] == chi2[c])) good[e.coset_of_class[c]] = false;
  }
  long count = 0;
  for (bool g : good) count += g ? 1 : 0;
  return make_rational(Integer(count), e.index);
}

Rational dh1_bound(const Integer& m) { return 1 - make_rational(Integer(1), 2 * m * m); }

bool DensityReport::all_verdicts_hold() const {
  for (const auto& v : verdicts) {
    if (!v.second) return false;
  }
  return true;
}

DensityReport dh_bounds_report(const ClassFunction& chi1, const ClassFunction& chi2, const ClassStructure& s,
                               const SubgroupEmbedding* e) {
  const Integer m1 = positive_degree(chi1, s);
  const Integer m2 = positive_degree(chi2, s);
  if (m1 != m2) throw std::invalid_argument("density: degree mismatch (" + m1.get_str() + " vs " + m2.get_str() + ")");

  DensityReport r;
  r.m = m1;
  r.lambda_elem = agreement_density(chi1, chi2, s);
  r.dh1_bound = dh1_bound(r.m);
  r.characters_equal = chi1 == chi2;
  const ClassFunction diff = chi1 - chi2;
  const CycNum msd = inner_product(diff, diff, s);
  if (!msd.is_rational()) throw std::logic_error("density: mean square difference is not rational");
  r.mean_square_diff = msd.rational_value();

  const Rational four_m2 = Rational(4 * r.m * r.m);
  r.verdicts.emplace_back("(i) distinct implies mean_square_diff >= 2", r.characters_equal || r.mean_square_diff >= 2);
  r.verdicts.emplace_back("(ii) mean_square_diff <= (1 - lambda) 4m^2",
                          r.mean_square_diff <= (1 - r.lambda_elem) * four_m2);
  r.verdicts.emplace_back("(iii) distinct implies lambda <= 1 - 1/(2m^2)",
                          r.characters_equal || r.lambda_elem <= r.dh1_bound);
  r.verdicts.emplace_back("(iv) lambda > 1 - 1/(2m^2) implies equal",
                          !(r.lambda_elem > r.dh1_bound) || r.characters_equal);
  if (e) {
    r.lambda_comp = component_density(chi1, chi2, *e);
    r.dh2_c = e->index;
    r.dh2_bound = 1 - make_rational(Integer(1), e->index);
    const ClassFunction a = restrict_char(chi1, *e);
    const ClassFunction b = restrict_char(chi2, *e);
    r.restrictions_equal = a == b;
    bool in_x = true;
    for (std::size_t c = 0; c < chi1.size(); ++c) {
      if (e->coset_of_class[c] == 0 && !(chi1[c] == chi2[c])) in_x = false;
    }
    r.identity_coset_in_x = in_x;
    r.verdicts.emplace_back("(v) identity coset in X iff restrictions agree", in_x == *r.restrictions_equal);
  }
  return r;
}

nlohmann::json density_report_to_json(const DensityReport& r) {
  nlohmann::json j;
  j["lambda_elem"] = rational_to_string(r.lambda_elem);
  j["lambda_comp"] = r.lambda_comp ? nlohmann::json(rational_to_string(*r.lambda_comp)) : nlohmann::json(nullptr);
  j["m"] = r.m.get_str();
  j["dh1_bound"] = rational_to_string(r.dh1_bound);
  j["mean_square_diff"] = rational_to_string(r.mean_square_diff);
  j["characters_equal"] = r.characters_equal;
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [name, ok] : r.verdicts) verdicts[name] = ok;
  j["verdicts"] = verdicts;
  if (r.dh2_c) {
    j["component_model"] = {
        {"c", r.dh2_c->get_str()},
        {"dh2_bound", rational_to_string(*r.dh2_bound)},
        {"identity_coset_in_X", *r.identity_coset_in_x},
        {"restrictions_equal", *r.restrictions_equal},
        {"note",
         "components are the cosets of the designated normal subgroup; lambda_comp counts cosets on which "
         "the characters agree at every class"},
    };
  }
  return j;
}

TraceLemmaResult trace_identity_lemma_check(const MatrixRep& rep) {
  if (!rep.has_element_enumeration()) throw std::invalid_argument("trace lemma: representation has no element enumeration");
  TraceLemmaResult r;
  r.holds = true;
  const CycNum dim(rep.modulus(), static_cast<long>(rep.dimension()));
  for (const auto& word : rep.element_enumeration()) {
    const CycMatrix m = rep.evaluate(word);
    const bool full = m.trace() == dim;
    const bool id = m.is_identity();
    ++r.elements;
    if (full) ++r.trace_equals_dimension;
    if (id) ++r.identity_matrices;
    if (full != id) r.holds = false;
  }
  return r;
}

std::pair<Rational, Rational> gl2_threshold(long m) {
  const Rational two_m = pow2(m);
  const Rational lhs = 1 - 1 / (2 * two_m * two_m);
  const Rational rhs = 1 - 1 / pow2(2 * m + 1);
  return {lhs, rhs};
}

}  // namespace twistlab

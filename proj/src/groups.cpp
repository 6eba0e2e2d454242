#include "twistlab/groups.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace twistlab {

std::size_t ClassStructure::power_map(std::size_t c, long i) const {
  const long r = ((i % exponent) + exponent) % exponent;
  return powers.at(c).at(static_cast<std::size_t>(r));
}

ClassFunction ClassFunction::constant(const ClassStructure& s, long value) {
  return ClassFunction(std::vector<CycNum>(s.num_classes(), CycNum(s.modulus, value)));
}

namespace {

void require_same_length(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) throw std::invalid_argument("class functions over different class counts");
}

}  // namespace

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_length(*this, o);
  for (std::size_t c = 0; c < values.size(); ++c) values[c] += o.values[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_length(*this, o);
  for (std::size_t c = 0; c < values.size(); ++c) values[c] -= o.values[c];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_length(a, b);
  ClassFunction out;
  out.values.reserve(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out.values.push_back(a.values[c] * b.values[c]);
  return out;
}

ClassFunction operator*(ClassFunction a, const Rational& q) {
  for (auto& v : a.values) v *= q;
  return a;
}

bool operator==(const SubgroupEmbedding& a, const SubgroupEmbedding& b) {
  if (!(a.name == b.name && a.sub == b.sub && a.index == b.index && a.fusion == b.fusion &&
        a.is_normal == b.is_normal && a.coset_of_class == b.coset_of_class &&
        a.quotient_table == b.quotient_table && a.conj_action == b.conj_action)) {
    return false;
  }
  if (static_cast<bool>(a.sub_table) != static_cast<bool>(b.sub_table)) return false;
  return !a.sub_table || *a.sub_table == *b.sub_table;
}

void CharacterTable::refresh_linear_indices() {
  linear_indices.clear();
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    if (irreducibles[i].degree(structure).is_one()) linear_indices.push_back(i);
  }
}

CycNum inner_product(const ClassFunction& a, const ClassFunction& b, const ClassStructure& s) {
  require_same_length(a, b);
  if (a.size() != s.num_classes()) throw std::invalid_argument("inner_product: class count mismatch");
  CycNum sum(s.modulus);
  for (std::size_t c = 0; c < a.size(); ++c) {
    sum += (a[c] * b[c].conj()) * Rational(s.class_sizes[c]);
  }
  return sum * make_rational(Integer(1), s.order);
}

CharacterTable build_cyclic(long n) {
  if (n < 1) throw std::invalid_argument("build_cyclic: n must be at least 1");
  CharacterTable t;
  t.name = "C" + std::to_string(n);
  auto& s = t.structure;
  s.order = n;
  s.exponent = n;
  s.modulus = n;
  s.class_sizes.assign(static_cast<std::size_t>(n), Integer(1));
  s.identity_class = 0;
  s.powers.resize(static_cast<std::size_t>(n));
  s.inverse_classes.resize(static_cast<std::size_t>(n));
  for (long c = 0; c < n; ++c) {
    auto& row = s.powers[static_cast<std::size_t>(c)];
    for (long i = 0; i < n; ++i) row.push_back(static_cast<std::size_t>((c * i) % n));
    s.inverse_classes[static_cast<std::size_t>(c)] = static_cast<std::size_t>((n - c) % n);
  }
  for (long j = 0; j < n; ++j) {
    ClassFunction chi;
    for (long i = 0; i < n; ++i) chi.values.push_back(CycNum::zeta(n, (i * j) % n));
    t.irreducibles.push_back(std::move(chi));
  }
  t.refresh_linear_indices();
  return t;
}

CharacterTable build_direct_product(const CharacterTable& a, const CharacterTable& b) {
  const auto& sa = a.structure;
  const auto& sb = b.structure;
  CharacterTable t;
  t.name = a.name + "x" + b.name;
  auto& s = t.structure;
  s.order = sa.order * sb.order;
  s.exponent = lcm_long(sa.exponent, sb.exponent);
  s.modulus = lcm_long(sa.modulus, sb.modulus);
  const std::size_t nb = sb.num_classes();
  const std::size_t count = sa.num_classes() * nb;
  s.class_sizes.resize(count);
  s.powers.assign(count, {});
  s.inverse_classes.resize(count);
  for (std::size_t x = 0; x < sa.num_classes(); ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t c = x * nb + y;
      s.class_sizes[c] = sa.class_sizes[x] * sb.class_sizes[y];
      s.inverse_classes[c] = sa.inverse_class(x) * nb + sb.inverse_class(y);
      for (long i = 0; i < s.exponent; ++i) {
        s.powers[c].push_back(sa.power_map(x, i) * nb + sb.power_map(y, i));
      }
    }
  }
  s.identity_class = sa.identity_class * nb + sb.identity_class;
  for (const auto& chi : a.irreducibles) {
    for (const auto& psi : b.irreducibles) {
      ClassFunction row;
      row.values.reserve(count);
      for (std::size_t x = 0; x < sa.num_classes(); ++x) {
        CycNum u = cyc_embed(chi[x], s.modulus);
        for (std::size_t y = 0; y < nb; ++y) row.values.push_back(u * cyc_embed(psi[y], s.modulus));
      }
      t.irreducibles.push_back(std::move(row));
    }
  }
  t.refresh_linear_indices();
  return t;
}

SubgroupEmbedding whole_group_embedding(const CharacterTable& t) {
  SubgroupEmbedding e;
  e.name = t.name;
  e.sub = t.structure;
  e.index = 1;
  e.is_normal = true;
  const std::size_t n = t.structure.num_classes();
  e.fusion.resize(n);
  std::iota(e.fusion.begin(), e.fusion.end(), std::size_t{0});
  e.coset_of_class.assign(n, 0);
  e.quotient_table = {{0}};
  e.conj_action = {e.fusion};
  CharacterTable copy = t;
  copy.embeddings.clear();
  e.sub_table = std::make_shared<const CharacterTable>(std::move(copy));
  return e;
}

// ------------------------------------------------------------- validation

bool ValidationReport::ok() const { return first_failure().empty(); }

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name;
  }
  return {};
}

namespace {

class Checker {
 public:
  explicit Checker(std::string prefix) : prefix_(std::move(prefix)) {}

  void fail(const std::string& name, const std::string& detail) {
    auto& c = entry(name);
    if (c.passed) {
      c.passed = false;
      c.detail = detail;
    }
  }
  void pass(const std::string& name) { entry(name); }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  CheckResult& entry(const std::string& name) {
    const std::string full = prefix_ + name;
    for (auto& c : checks_) {
      if (c.name == full) return c;
    }
    checks_.push_back({full, true, {}});
    return checks_.back();
  }

  std::string prefix_;
  std::vector<CheckResult> checks_;
};

std::string cls(std::size_t c) { return "class " + std::to_string(c); }

// Every check below is registered before any early return so the report
// always lists the full set of checks in a fixed order.
void check_structure(const ClassStructure& s, Checker& ck) {
  const std::size_t n = s.num_classes();
  for (const char* name : {"class size sum", "identity class", "power map identity", "power map exponent",
                           "power map composition", "inverse class"}) {
    ck.pass(name);
  }
  if (s.exponent < 1 || s.modulus < 1 || s.modulus % s.exponent != 0) {
    ck.fail("power map exponent", "modulus must be a positive multiple of the exponent");
    return;
  }
  if (n == 0 || s.powers.size() != n || s.inverse_classes.size() != n) {
    ck.fail("class size sum", "class data has inconsistent lengths");
    return;
  }
  Integer total = 0;
  for (const auto& sz : s.class_sizes) {
    if (sz < 1) ck.fail("class size sum", "non-positive class size");
    total += sz;
  }
  if (total != s.order) {
    ck.fail("class size sum", "sizes sum to " + total.get_str() + ", order is " + s.order.get_str());
  }
  if (s.identity_class >= n || s.class_sizes[s.identity_class] != 1) {
    ck.fail("identity class", "identity class missing or not of size 1");
    return;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (s.powers[c].size() != static_cast<std::size_t>(s.exponent)) {
      ck.fail("power map exponent", cls(c) + " has " + std::to_string(s.powers[c].size()) + " powers");
      return;
    }
    for (auto p : s.powers[c]) {
      if (p >= n) {
        ck.fail("power map exponent", cls(c) + " has an out-of-range power");
        return;
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (s.power_map(c, 1) != c) ck.fail("power map identity", cls(c) + " ^1 != itself");
    if (s.power_map(c, 0) != s.identity_class) ck.fail("power map exponent", cls(c) + " ^exponent != identity");
    for (long i = 0; i < s.exponent; ++i) {
      for (long j = 0; j < s.exponent; ++j) {
        if (s.power_map(s.power_map(c, i), j) != s.power_map(c, i * j)) {
          ck.fail("power map composition", "(" + cls(c) + "^" + std::to_string(i) + ")^" + std::to_string(j) +
                                                " != " + cls(c) + "^" + std::to_string(i * j));
        }
      }
    }
    const std::size_t inv = s.inverse_classes[c];
    if (inv >= n || inv != s.power_map(c, -1) || s.class_sizes[inv] != s.class_sizes[c]) {
      ck.fail("inverse class", cls(c) + " has an inconsistent inverse class");
    }
  }
}

bool structure_usable(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void check_characters(const CharacterTable& t, Checker& ck) {
  const auto& s = t.structure;
  const std::size_t n = s.num_classes();
  for (const char* name : {"value modulus", "irreducible count", "degree sum mismatch", "row orthogonality",
                           "linear indices"}) {
    ck.pass(name);
  }
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    const auto& chi = t.irreducibles[i];
    if (chi.size() != n) {
      ck.fail("value modulus", "row " + std::to_string(i) + " has the wrong number of values");
      return;
    }
    for (const auto& v : chi.values) {
      if (v.modulus() != s.modulus) {
        ck.fail("value modulus", "row " + std::to_string(i) + " has a value outside Q(zeta_" +
                                     std::to_string(s.modulus) + ")");
        return;
      }
    }
  }
  if (t.irreducibles.size() != n) {
    ck.fail("irreducible count", std::to_string(t.irreducibles.size()) + " rows for " + std::to_string(n) +
                                     " classes");
  }
  CycNum degree_sum(s.modulus);
  for (const auto& chi : t.irreducibles) degree_sum += chi.degree(s) * chi.degree(s);
  if (degree_sum != CycNum(s.modulus, Rational(s.order))) {
    ck.fail("degree sum mismatch", "sum of squared degrees is " + degree_sum.to_string() + ", order is " +
                                       s.order.get_str());
  }
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    for (std::size_t j = i; j < t.irreducibles.size(); ++j) {
      CycNum ip = inner_product(t.irreducibles[i], t.irreducibles[j], s);
      if (ip != CycNum(s.modulus, i == j ? 1 : 0)) {
        ck.fail("row orthogonality", "<chi_" + std::to_string(i) + ", chi_" + std::to_string(j) +
                                         "> = " + ip.to_string());
      }
    }
  }
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    if (t.irreducibles[i].degree(s).is_one()) expected.push_back(i);
  }
  if (expected != t.linear_indices) ck.fail("linear indices", "linear_indices disagree with degree-1 rows");
}

void check_embedding(const CharacterTable& t, const SubgroupEmbedding& e, Checker& ck) {
  const auto& g = t.structure;
  const auto& h = e.sub;
  const std::size_t nh = h.num_classes();
  const std::size_t ng = g.num_classes();
  for (const char* name : {"subgroup structure", "index", "fusion", "fusion power maps", "coset map",
                           "quotient table", "conj action", "sub table"}) {
    ck.pass(name);
  }

  Checker sub_ck("");
  check_structure(h, sub_ck);
  auto sub_checks = sub_ck.take();
  for (const auto& c : sub_checks) {
    if (!c.passed) ck.fail("subgroup structure", c.name + ": " + c.detail);
  }
  if (!structure_usable(sub_checks)) return;

  if (e.index * h.order != g.order) ck.fail("index", "index * |H| != |G|");
  if (g.exponent % h.exponent != 0 || h.modulus != g.modulus) {
    ck.fail("subgroup structure", "subgroup exponent/modulus incompatible with the group");
  }
  if (e.fusion.size() != nh) {
    ck.fail("fusion", "fusion map has the wrong length");
    return;
  }
  std::vector<Integer> fused(ng, Integer(0));
  for (std::size_t d = 0; d < nh; ++d) {
    if (e.fusion[d] >= ng) {
      ck.fail("fusion", "fusion target out of range");
      return;
    }
    fused[e.fusion[d]] += h.class_sizes[d];
  }
  for (std::size_t c = 0; c < ng; ++c) {
    if (fused[c] > g.class_sizes[c]) {
      ck.fail("fusion", "H-classes fused into " + cls(c) + " exceed its size");
    }
    if (e.is_normal && fused[c] != 0 && fused[c] != g.class_sizes[c]) {
      ck.fail("fusion", "normal subgroup does not contain all of " + cls(c));
    }
  }
  if (e.fusion[h.identity_class] != g.identity_class) ck.fail("fusion", "identity not fused to identity");
  for (std::size_t d = 0; d < nh; ++d) {
    for (long i = 0; i < h.exponent; ++i) {
      if (e.fusion[h.power_map(d, i)] != g.power_map(e.fusion[d], i)) {
        ck.fail("fusion power maps", "fusion does not commute with powers at H-class " + std::to_string(d));
      }
    }
  }

  if (e.has_coset_data()) {
    if (!e.index.fits_ulong_p()) {
      ck.fail("coset map", "index too large for coset data");
      return;
    }
    const std::size_t idx = e.index.get_ui();
    if (e.coset_of_class.size() != ng) {
      ck.fail("coset map", "coset map has the wrong length");
      return;
    }
    std::vector<Integer> per_coset(idx, Integer(0));
    for (std::size_t c = 0; c < ng; ++c) {
      if (e.coset_of_class[c] >= idx) {
        ck.fail("coset map", "coset label out of range");
        return;
      }
      per_coset[e.coset_of_class[c]] += g.class_sizes[c];
      if ((fused[c] != 0) != (e.coset_of_class[c] == 0)) {
        ck.fail("coset map", cls(c) + " lies in H iff it is labelled coset 0 fails");
      }
    }
    for (std::size_t phi = 0; phi < idx; ++phi) {
      if (per_coset[phi] != h.order) ck.fail("coset map", "coset " + std::to_string(phi) + " does not have |H| elements");
    }
    bool table_ok = e.quotient_table.size() == idx;
    for (const auto& row : e.quotient_table) table_ok = table_ok && row.size() == idx;
    if (!table_ok) {
      ck.fail("quotient table", "quotient table has the wrong shape");
    } else {
      for (std::size_t x = 0; x < idx; ++x) {
        if (e.quotient_table[0][x] != x || e.quotient_table[x][0] != x) ck.fail("quotient table", "label 0 is not the identity");
        std::set<std::size_t> row(e.quotient_table[x].begin(), e.quotient_table[x].end());
        if (row.size() != idx || *row.rbegin() >= idx) ck.fail("quotient table", "row is not a permutation");
        for (std::size_t y = 0; y < idx; ++y) {
          for (std::size_t z = 0; z < idx; ++z) {
            const auto& q = e.quotient_table;
            if (q[q[x][y]][z] != q[x][q[y][z]]) {
              ck.fail("quotient table", "quotient multiplication is not associative");
            }
          }
        }
      }
    }
    if (e.conj_action.size() != idx) {
      ck.fail("conj action", "conj action needs one row per coset");
    } else {
      for (std::size_t phi = 0; phi < idx; ++phi) {
        const auto& row = e.conj_action[phi];
        std::set<std::size_t> seen(row.begin(), row.end());
        if (row.size() != nh || seen.size() != nh || *seen.rbegin() >= nh) {
          ck.fail("conj action", "coset " + std::to_string(phi) + " does not permute the H-classes");
          continue;
        }
        for (std::size_t d = 0; d < nh; ++d) {
          if (h.class_sizes[row[d]] != h.class_sizes[d]) ck.fail("conj action", "conjugation changes a class size");
          if (e.fusion[row[d]] != e.fusion[d]) ck.fail("conj action", "conjugation leaves the G-class");
        }
        if (phi == 0) {
          for (std::size_t d = 0; d < nh; ++d) {
            if (row[d] != d) ck.fail("conj action", "H acts non-trivially on its own classes");
          }
        }
      }
    }
  } else if (e.is_normal) {
    ck.pass("coset map");
  }

  if (e.sub_table) {
    if (!(e.sub_table->structure == h)) {
      ck.fail("sub table", "sub_table structure differs from the embedded structure");
    } else {
      auto sub_report = validate_character_table(*e.sub_table);
      if (!sub_report.ok()) ck.fail("sub table", sub_report.first_failure());
    }
  }
}

}  // namespace

ValidationReport validate_character_table(const CharacterTable& t) {
  ValidationReport report;
  Checker ck("");
  check_structure(t.structure, ck);
  auto structure_checks = ck.take();
  const bool usable = structure_usable(structure_checks);
  report.checks = std::move(structure_checks);
  if (!usable) return report;

  Checker chars("");
  check_characters(t, chars);
  for (auto& c : chars.take()) report.checks.push_back(std::move(c));

  for (std::size_t i = 0; i < t.embeddings.size(); ++i) {
    Checker emb("embedding " + std::to_string(i) + ": ");
    check_embedding(t, t.embeddings[i], emb);
    for (auto& c : emb.take()) report.checks.push_back(std::move(c));
  }
  return report;
}

// ------------------------------------------------------- class functions

ClassFunction char_of_matrix_rep(const MatrixRep& rep, const ClassStructure& s,
                                 const std::vector<std::string>& class_reps) {
  if (class_reps.size() != s.num_classes()) {
    throw std::invalid_argument("char_of_matrix_rep: need one word per class");
  }
  const std::string bad = rep.first_failing_relation();
  if (!bad.empty()) throw std::invalid_argument("char_of_matrix_rep: relation " + bad + " fails");
  if (!rep.evaluate("").trace().is_rational() ||
      rep.evaluate("").trace().rational_value() != static_cast<long>(rep.dimension())) {
    throw std::logic_error("char_of_matrix_rep: identity trace is not the dimension");
  }
  ClassFunction chi;
  for (const auto& w : class_reps) {
    CycNum tr = rep.evaluate(w).trace();
    if (tr.modulus() != s.modulus) tr = cyc_embed(tr, s.modulus);
    chi.values.push_back(std::move(tr));
  }
  return chi;
}

ClassFunction restrict_char(const ClassFunction& chi, const SubgroupEmbedding& e) {
  ClassFunction out;
  out.values.reserve(e.fusion.size());
  for (auto c : e.fusion) out.values.push_back(chi.values.at(c));
  return out;
}

ClassFunction induce_char(const ClassFunction& psi, const SubgroupEmbedding& e, const ClassStructure& g) {
  if (psi.size() != e.sub.num_classes()) throw std::invalid_argument("induce_char: psi is not a class function on H");
  std::vector<CycNum> sums(g.num_classes(), CycNum(g.modulus));
  for (std::size_t d = 0; d < psi.size(); ++d) {
    sums[e.fusion[d]] += psi[d] * Rational(e.sub.class_sizes[d]);
  }
  ClassFunction out;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    out.values.push_back(sums[c] * make_rational(e.index, g.class_sizes[c]));
  }
  return out;
}

ClassFunction conjugate_sub_char(const ClassFunction& psi, const SubgroupEmbedding& e, std::size_t coset) {
  const auto& perm = e.conj_action.at(coset);
  ClassFunction out;
  out.values.reserve(psi.size());
  for (std::size_t d = 0; d < psi.size(); ++d) out.values.push_back(psi.values.at(perm[d]));
  return out;
}

std::optional<std::size_t> find_irreducible(const CharacterTable& t, const ClassFunction& chi) {
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    if (t.irreducibles[i] == chi) return i;
  }
  return std::nullopt;
}

}  // namespace twistlab

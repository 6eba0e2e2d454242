#include "twistlab/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

namespace twistlab {

namespace {

using Element = FiniteGroup::Element;

// Breadth-first words from the identity; entry e is the parent of e and the
// generator letter that reaches e from it.
struct BfsTree {
  std::vector<std::string> words;
  std::vector<Element> order;  // elements in discovery order
  std::vector<Element> parent;
  std::vector<std::size_t> via;  // generator position
};

BfsTree bfs_words(std::size_t n, const std::vector<std::vector<Element>>& right_mul,
                  const std::vector<std::pair<char, Element>>& gens) {
  BfsTree tree;
  tree.words.assign(n, {});
  tree.parent.assign(n, 0);
  tree.via.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<Element> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    tree.order.push_back(x);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Element y = right_mul[x][gi];
      if (!seen[y]) {
        seen[y] = true;
        tree.words[y] = tree.words[x] + gens[gi].first;
        tree.parent[y] = x;
        tree.via[y] = gi;
        queue.push_back(y);
      }
    }
  }
  if (tree.order.size() != n) throw std::invalid_argument("generators do not generate the group");
  return tree;
}

}  // namespace

FiniteGroup FiniteGroup::from_law(std::size_t order, const Law& multiply,
                                  std::vector<std::pair<char, Element>> generators) {
  if (order == 0) throw std::invalid_argument("FiniteGroup: empty group");
  FiniteGroup g;
  g.table_.assign(order, std::vector<Element>(order));
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      Element c = multiply(a, b);
      if (c >= order) throw std::invalid_argument("FiniteGroup: product out of range");
      g.table_[a][b] = c;
    }
  }
  g.generators_ = std::move(generators);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_matrices(const MatrixRep& faithful, const std::string& letter_order,
                                       std::size_t max_order) {
  std::vector<std::pair<char, CycMatrix>> gens;
  for (char letter : letter_order) {
    auto it = faithful.generator_images().find(letter);
    if (it == faithful.generator_images().end()) {
      throw std::invalid_argument(std::string("from_matrices: unknown generator '") + letter + "'");
    }
    gens.emplace_back(letter, it->second);
  }
  const std::size_t dim = faithful.dimension();
  std::vector<CycMatrix> elements{CycMatrix::identity(dim, faithful.modulus())};
  std::unordered_map<std::string, Element> index{{elements[0].key(), 0}};
  std::vector<std::vector<Element>> right_mul;
  for (std::size_t x = 0; x < elements.size(); ++x) {
    right_mul.emplace_back();
    for (const auto& [letter, m] : gens) {
      CycMatrix y = elements[x] * m;
      auto key = y.key();
      auto it = index.find(key);
      if (it == index.end()) {
        if (elements.size() >= max_order) throw std::invalid_argument("from_matrices: group too large");
        it = index.emplace(std::move(key), elements.size()).first;
        elements.push_back(std::move(y));
      }
      right_mul[x].push_back(it->second);
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::pair<char, Element>> gen_elems;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) gen_elems.emplace_back(gens[gi].first, right_mul[0][gi]);
  BfsTree tree = bfs_words(n, right_mul, gen_elems);

  // table[a][b] by walking b's word: b = parent(b) * letter.
  FiniteGroup g;
  g.table_.assign(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    g.table_[a][0] = a;
    for (Element b : tree.order) {
      if (b == 0) continue;
      g.table_[a][b] = right_mul[g.table_[a][tree.parent[b]]][tree.via[b]];
    }
  }
  g.generators_ = std::move(gen_elems);
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = table_.size();
  for (Element a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) throw std::invalid_argument("FiniteGroup: 0 is not the identity");
  }
  inverses_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        inverses_[a] = b;
        break;
      }
    }
    if (inverses_[a] == n) throw std::invalid_argument("FiniteGroup: element without inverse");
  }
  std::vector<std::vector<Element>> right_mul(n);
  for (Element x = 0; x < n; ++x) {
    for (const auto& gen : generators_) right_mul[x].push_back(table_[x][gen.second]);
  }
  words_ = bfs_words(n, right_mul, generators_).words;

  class_of_.assign(n, n);
  classes_.clear();
  for (Element a = 0; a < n; ++a) {
    if (class_of_[a] != n) continue;
    std::vector<Element> cls;
    for (Element x = 0; x < n; ++x) {
      Element c = table_[table_[x][a]][inverses_[x]];
      if (class_of_[c] == n) {
        class_of_[c] = classes_.size();
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

Element FiniteGroup::power(Element a, long k) const {
  if (k < 0) return power(inverse(a), -k);
  Element r = 0;
  for (long i = 0; i < k; ++i) r = table_[r][a];
  return r;
}

long FiniteGroup::element_order(Element a) const {
  long k = 1;
  for (Element x = a; x != 0; x = table_[x][a]) ++k;
  return k;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (Element a = 0; a < order(); ++a) e = lcm_long(e, element_order(a));
  return e;
}

Element FiniteGroup::evaluate(const std::string& word) const {
  Element r = 0;
  for (char letter : word) {
    const bool inv = std::islower(static_cast<unsigned char>(letter));
    const char name = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
    auto it = std::find_if(generators_.begin(), generators_.end(),
                           [name](const auto& g) { return g.first == name; });
    if (it == generators_.end()) throw std::invalid_argument(std::string("unknown generator '") + letter + "'");
    r = table_[r][inv ? inverses_[it->second] : it->second];
  }
  return r;
}

ClassStructure FiniteGroup::class_structure(long modulus) const {
  ClassStructure s;
  s.order = static_cast<unsigned long>(order());
  s.exponent = exponent();
  s.modulus = modulus;
  if (modulus % s.exponent != 0) throw std::invalid_argument("class_structure: modulus not a multiple of exponent");
  s.identity_class = class_of_[0];
  for (const auto& cls : classes_) {
    s.class_sizes.emplace_back(static_cast<unsigned long>(cls.size()));
    std::vector<std::size_t> row;
    for (long i = 0; i < s.exponent; ++i) row.push_back(class_of_[power(cls.front(), i)]);
    s.powers.push_back(std::move(row));
    s.inverse_classes.push_back(class_of_[inverses_[cls.front()]]);
  }
  return s;
}

std::vector<std::string> FiniteGroup::class_representatives() const {
  std::vector<std::string> reps;
  for (const auto& cls : classes_) reps.push_back(words_[cls.front()]);
  return reps;
}

std::vector<Element> FiniteGroup::closure(const std::vector<Element>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<Element> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : gens) {
      Element y = table_[members[i]][g];
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return members;
}

bool FiniteGroup::is_normal(const std::vector<Element>& subset) const {
  std::vector<bool> in(order(), false);
  for (Element h : subset) in[h] = true;
  for (Element x = 0; x < order(); ++x) {
    for (Element h : subset) {
      if (!in[table_[table_[x][h]][inverses_[x]]]) return false;
    }
  }
  return true;
}

SubgroupEmbedding make_embedding(const FiniteGroup& g, const ClassStructure& gs, const SubgroupSpec& spec) {
  std::vector<Element> gen_elems;
  for (const auto& [letter, word] : spec.generators) gen_elems.push_back(g.evaluate(word));
  std::vector<Element> members = g.closure(gen_elems);
  const std::size_t hn = members.size();
  std::unordered_map<Element, std::size_t> local;
  for (std::size_t i = 0; i < hn; ++i) local[members[i]] = i;

  std::vector<std::pair<char, Element>> local_gens;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    local_gens.emplace_back(spec.generators[i].first, local.at(gen_elems[i]));
  }
  FiniteGroup h = FiniteGroup::from_law(
      hn, [&](Element a, Element b) { return local.at(g.multiply(members[a], members[b])); }, local_gens);

  SubgroupEmbedding e;
  e.name = spec.name;
  e.sub = h.class_structure(gs.modulus);
  e.index = static_cast<unsigned long>(g.order() / hn);
  for (const auto& cls : h.classes()) e.fusion.push_back(g.class_of(members[cls.front()]));
  e.is_normal = g.is_normal(members);

  if (e.is_normal) {
    std::vector<std::size_t> coset_of(g.order(), g.order());
    std::vector<Element> reps;
    for (Element x = 0; x < g.order(); ++x) {
      if (coset_of[x] != g.order()) continue;
      for (Element m : members) coset_of[g.multiply(x, m)] = reps.size();
      reps.push_back(x);
    }
    for (const auto& cls : g.classes()) {
      const std::size_t label = coset_of[cls.front()];
      for (Element x : cls) {
        if (coset_of[x] != label) throw std::logic_error("make_embedding: coset map not constant on a class");
      }
      e.coset_of_class.push_back(label);
    }
    for (Element x : reps) {
      std::vector<std::size_t> row;
      for (Element y : reps) row.push_back(coset_of[g.multiply(x, y)]);
      e.quotient_table.push_back(std::move(row));
      std::vector<std::size_t> action;
      for (const auto& cls : h.classes()) {
        Element conj = g.multiply(g.multiply(x, members[cls.front()]), g.inverse(x));
        action.push_back(h.class_of(local.at(conj)));
      }
      e.conj_action.push_back(std::move(action));
    }
  }

  if (!spec.irreps.empty()) {
    auto sub = std::make_shared<CharacterTable>();
    sub->name = spec.name;
    sub->structure = e.sub;
    const auto reps = h.class_representatives();
    for (const auto& rep : spec.irreps) sub->irreducibles.push_back(char_of_matrix_rep(rep, e.sub, reps));
    sub->refresh_linear_indices();
    e.sub_table = std::move(sub);
  }
  return e;
}

}  // namespace twistlab

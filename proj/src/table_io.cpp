#include "twistlab/table_io.hpp"

#include <map>

namespace twistlab {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& ex) {
    throw ParseError(std::string("field '") + key + "': " + ex.what());
  }
}

Integer big_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be an integer string");
  Integer out;
  if (out.set_str(v.get<std::string>(), 10) != 0) {
    throw ParseError(std::string("field '") + key + "' is not an integer: " + v.get<std::string>());
  }
  return out;
}

std::vector<std::size_t> index_list(const json& j, const char* key) {
  return field<std::vector<std::size_t>>(j, key);
}

long smallest_prime_factor(long n) {
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

json structure_to_json(const ClassStructure& s) {
  json j;
  j["order"] = s.order.get_str();
  j["exponent"] = s.exponent;
  j["N"] = s.modulus;
  j["identity"] = s.identity_class;
  json classes = json::array();
  for (std::size_t c = 0; c < s.num_classes(); ++c) {
    json powers = json::object();
    for (long i = 2; i < s.exponent; ++i) powers[std::to_string(i)] = s.powers[c][static_cast<std::size_t>(i)];
    classes.push_back({{"size", s.class_sizes[c].get_str()}, {"inverse", s.inverse_classes[c]}, {"powers", powers}});
  }
  j["classes"] = std::move(classes);
  return j;
}

ClassStructure structure_from_json(const json& j) {
  ClassStructure s;
  s.order = big_int(j, "order");
  s.exponent = field<long>(j, "exponent");
  s.modulus = field<long>(j, "N");
  s.identity_class = field<std::size_t>(j, "identity");
  if (s.exponent < 1 || s.modulus < 1) throw ParseError("exponent and N must be positive");
  const json& classes = j.at("classes");
  if (!classes.is_array() || classes.empty()) throw ParseError("'classes' must be a non-empty array");
  const std::size_t n = classes.size();
  if (s.identity_class >= n) throw ParseError("identity class out of range");

  std::vector<std::map<long, std::size_t>> given(n);
  for (const auto& cj : classes) {
    s.class_sizes.push_back(big_int(cj, "size"));
    s.inverse_classes.push_back(field<std::size_t>(cj, "inverse"));
    std::map<long, std::size_t> row;
    if (cj.contains("powers")) {
      const json& pj = cj.at("powers");
      if (!pj.is_object()) throw ParseError("'powers' must be an object");
      for (auto it = pj.begin(); it != pj.end(); ++it) {
        long key = 0;
        try {
          std::size_t used = 0;
          key = std::stol(it.key(), &used);
          if (used != it.key().size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw ParseError("bad power key '" + it.key() + "'");
        }
        if (key < 2 || key >= s.exponent) throw ParseError("power key '" + it.key() + "' outside 2..exponent-1");
        if (!it.value().is_number_unsigned()) throw ParseError("power target must be a class index");
        const auto target = it.value().get<std::size_t>();
        if (target >= n) throw ParseError("power target out of range");
        row[key] = target;
      }
    }
    given[s.class_sizes.size() - 1] = std::move(row);
  }

  s.powers.assign(n, std::vector<std::size_t>(static_cast<std::size_t>(s.exponent), 0));
  for (std::size_t c = 0; c < n; ++c) {
    s.powers[c][0] = s.identity_class;
    if (s.exponent > 1) s.powers[c][1] = c;
  }
  for (long i = 2; i < s.exponent; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      auto it = given[c].find(i);
      if (it != given[c].end()) {
        s.powers[c][static_cast<std::size_t>(i)] = it->second;
        continue;
      }
      const long p = smallest_prime_factor(i);
      if (p == i) throw ParseError("power map for prime " + std::to_string(i) + " missing at class " + std::to_string(c));
      s.powers[c][static_cast<std::size_t>(i)] = s.powers[s.powers[c][static_cast<std::size_t>(p)]][static_cast<std::size_t>(i / p)];
    }
  }
  for (auto inv : s.inverse_classes) {
    if (inv >= n) throw ParseError("inverse class out of range");
  }
  return s;
}

json rows_to_json(const std::vector<ClassFunction>& rows) {
  json out = json::array();
  for (const auto& chi : rows) out.push_back(class_function_to_json(chi));
  return out;
}

std::vector<ClassFunction> rows_from_json(const json& j, std::size_t num_classes) {
  if (!j.is_array()) throw ParseError("'irreducibles' must be an array");
  std::vector<ClassFunction> rows;
  for (const auto& rj : j) {
    rows.push_back(class_function_from_json(rj));
    if (rows.back().size() != num_classes) throw ParseError("irreducible row length differs from class count");
  }
  return rows;
}

std::vector<std::vector<std::size_t>> matrix_from_json(const json& j, const char* key) {
  return field<std::vector<std::vector<std::size_t>>>(j, key);
}

}  // namespace

json cycnum_to_json(const CycNum& z) {
  json coeffs = json::array();
  for (const auto& q : z.coeffs()) coeffs.push_back(rational_to_string(q));
  return {{"N", z.modulus()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const json& j) {
  const long n = field<long>(j, "N");
  if (n < 1) throw ParseError("CycNum modulus must be positive");
  const auto coeffs = field<std::vector<std::string>>(j, "coeffs");
  if (static_cast<long>(coeffs.size()) != euler_phi(n)) {
    throw ParseError("CycNum over N=" + std::to_string(n) + " needs " + std::to_string(euler_phi(n)) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  std::vector<Rational> poly;
  try {
    for (const auto& c : coeffs) poly.push_back(parse_rational(c));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  return CycNum::from_polynomial(n, poly);
}

json class_function_to_json(const ClassFunction& chi) {
  json row = json::array();
  for (const auto& v : chi.values) row.push_back(cycnum_to_json(v));
  return row;
}

ClassFunction class_function_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("class function must be an array");
  ClassFunction chi;
  for (const auto& v : j) chi.values.push_back(cycnum_from_json(v));
  return chi;
}

json table_to_json(const CharacterTable& t) {
  json j = structure_to_json(t.structure);
  j["name"] = t.name;
  j["irreducibles"] = rows_to_json(t.irreducibles);
  json embeddings = json::array();
  for (const auto& e : t.embeddings) {
    json ej;
    ej["name"] = e.name;
    ej["index"] = e.index.get_str();
    json sub = structure_to_json(e.sub);
    if (e.sub_table) sub["irreducibles"] = rows_to_json(e.sub_table->irreducibles);
    ej["sub"] = std::move(sub);
    ej["fusion"] = e.fusion;
    ej["normal"] = e.is_normal;
    if (e.has_coset_data()) {
      ej["coset_of_class"] = e.coset_of_class;
      ej["quotient"] = e.quotient_table;
      ej["conj_action"] = e.conj_action;
    }
    embeddings.push_back(std::move(ej));
  }
  j["embeddings"] = std::move(embeddings);
  return j;
}

CharacterTable table_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("table document must be a JSON object");
  CharacterTable t;
  t.name = field<std::string>(j, "name");
  t.structure = structure_from_json(j);
  if (!j.contains("irreducibles")) throw ParseError("missing field 'irreducibles'");
  t.irreducibles = rows_from_json(j.at("irreducibles"), t.structure.num_classes());
  t.refresh_linear_indices();
  if (j.contains("embeddings")) {
    const json& ejs = j.at("embeddings");
    if (!ejs.is_array()) throw ParseError("'embeddings' must be an array");
    for (const auto& ej : ejs) {
      SubgroupEmbedding e;
      e.name = field<std::string>(ej, "name");
      e.index = big_int(ej, "index");
      if (!ej.contains("sub")) throw ParseError("embedding missing 'sub'");
      const json& sj = ej.at("sub");
      e.sub = structure_from_json(sj);
      e.fusion = index_list(ej, "fusion");
      e.is_normal = field<bool>(ej, "normal");
      if (ej.contains("coset_of_class")) {
        e.coset_of_class = index_list(ej, "coset_of_class");
        e.quotient_table = matrix_from_json(ej, "quotient");
        e.conj_action = matrix_from_json(ej, "conj_action");
      }
      if (sj.contains("irreducibles")) {
        auto sub = std::make_shared<CharacterTable>();
        sub->name = e.name;
        sub->structure = e.sub;
        sub->irreducibles = rows_from_json(sj.at("irreducibles"), e.sub.num_classes());
        sub->refresh_linear_indices();
        e.sub_table = std::move(sub);
      }
      t.embeddings.push_back(std::move(e));
    }
  }
  return t;
}

std::string serialize_table(const CharacterTable& t) { return table_to_json(t).dump(2) + "\n"; }

CharacterTable load_character_table(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  }
  CharacterTable t = table_from_json(j);
  auto report = validate_character_table(t);
  if (!report.ok()) {
    const std::string name = report.first_failure();
    std::string detail;
    for (const auto& c : report.checks) {
      if (c.name == name) detail = c.detail;
    }
    throw ValidationError(name, detail);
  }
  return t;
}

}  // namespace twistlab

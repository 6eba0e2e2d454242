#include "twistlab/weights.hpp"

#include <sstream>

namespace twistlab {

namespace {

Weight add_scaled(const Weight& a, const Weight& b, long t) {
  Weight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * b[i];
  return out;
}

// sum with multiplicity product over all pairs
WeightMultiset sumset(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out(a.rank());
  for (const auto& [x, mx] : a.entries()) {
    for (const auto& [y, my] : b.entries()) out.add(add_scaled(x, y, 1), mx * my);
  }
  return out;
}

// Sums over exactly k basis vectors, choosing t of the m copies of each
// weight in count(m, t) ways.
template <class Count>
WeightMultiset counted_power(const WeightMultiset& w, long k, Count count) {
  const auto ku = static_cast<std::size_t>(k);
  std::vector<std::map<Weight, Integer>> dp(ku + 1);
  dp[0][Weight(w.rank(), 0)] = 1;
  for (const auto& [v, m] : w.entries()) {
    std::vector<std::map<Weight, Integer>> next(ku + 1);
    for (std::size_t j = 0; j <= ku; ++j) {
      for (const auto& [sum, c] : dp[j]) {
        for (std::size_t t = 0; j + t <= ku; ++t) {
          Integer ways = count(m, t);
          if (ways == 0) break;
          next[j + t][add_scaled(sum, v, static_cast<long>(t))] += c * ways;
        }
      }
    }
    dp = std::move(next);
  }
  WeightMultiset out(w.rank());
  for (const auto& [sum, c] : dp[ku]) {
    if (c != 0) out.add(sum, c);
  }
  return out;
}

void require_rank(const WeightMultiset& w, const Weight& v) {
  if (v.size() != w.rank()) throw std::invalid_argument("weight vector has the wrong rank");
}

}  // namespace

WeightMultiset WeightMultiset::of(std::size_t rank, const std::vector<Weight>& weights) {
  WeightMultiset out(rank);
  for (const auto& v : weights) out.add(v);
  return out;
}

WeightMultiset WeightMultiset::of_scalars(const std::vector<long>& values) {
  WeightMultiset out(1);
  for (long v : values) out.add({v});
  return out;
}

Integer WeightMultiset::dimension() const {
  Integer d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

const Weight& WeightMultiset::lexmax() const {
  if (entries_.empty()) throw std::invalid_argument("lexmax of an empty multiset");
  return entries_.begin()->first;
}

Integer WeightMultiset::multiplicity(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? Integer(0) : it->second;
}

void WeightMultiset::add(const Weight& w, const Integer& m) {
  require_rank(*this, w);
  if (m <= 0) throw std::invalid_argument("multiplicity must be positive");
  entries_[w] += m;
}

bool WeightMultiset::subtract(const WeightMultiset& other) {
  for (const auto& [v, m] : other.entries_) {
    if (multiplicity(v) < m) return false;
  }
  for (const auto& [v, m] : other.entries_) {
    auto it = entries_.find(v);
    it->second -= m;
    if (it->second == 0) entries_.erase(it);
  }
  return true;
}

WeightMultiset WeightMultiset::negated() const {
  WeightMultiset out(rank_);
  for (const auto& [v, m] : entries_) out.add(add_scaled(Weight(rank_, 0), v, -1), m);
  return out;
}

std::string WeightMultiset::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, m] : entries_) {
    if (!first) os << ", ";
    first = false;
    if (rank_ == 1) {
      os << v[0];
    } else {
      os << "(";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << ")";
    }
    if (m != 1) os << " x" << m.get_str();
  }
  os << "}";
  return os.str();
}

PowerMode parse_power_mode(const std::string& name) {
  if (name == "tensor") return PowerMode::Tensor;
  if (name == "sym") return PowerMode::Sym;
  if (name == "ext") return PowerMode::Ext;
  if (name == "adjoint") return PowerMode::Adjoint;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

std::string power_mode_name(PowerMode m) {
  switch (m) {
    case PowerMode::Tensor: return "tensor";
    case PowerMode::Sym: return "sym";
    case PowerMode::Ext: return "ext";
    case PowerMode::Adjoint: return "adjoint";
  }
  return "?";
}

Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

Integer power_dimension(const Integer& n, long k, PowerMode mode) {
  const auto ku = static_cast<unsigned long>(k);
  switch (mode) {
    case PowerMode::Tensor: {
      Integer out;
      mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), ku);
      return out;
    }
    case PowerMode::Sym: return binomial(n + k - 1, ku);
    case PowerMode::Ext: return binomial(n, ku);
    case PowerMode::Adjoint: return n * n;
  }
  return 0;
}

WeightMultiset power_weights(const WeightMultiset& w, long k, PowerMode mode) {
  WeightMultiset out(w.rank());
  switch (mode) {
    case PowerMode::Adjoint:
      for (const auto& [x, mx] : w.entries()) {
        for (const auto& [y, my] : w.entries()) out.add(add_scaled(x, y, -1), mx * my);
      }
      break;
    case PowerMode::Tensor: {
      if (k < 1) throw std::invalid_argument("power_weights: k must be positive");
      out.add(Weight(w.rank(), 0));
      for (long i = 0; i < k; ++i) out = sumset(out, w);
      break;
    }
    case PowerMode::Sym:
      if (k < 1) throw std::invalid_argument("power_weights: k must be positive");
      out = counted_power(w, k, [](const Integer& m, std::size_t t) { return binomial(m + t - 1, t); });
      break;
    case PowerMode::Ext:
      if (k < 1) throw std::invalid_argument("power_weights: k must be positive");
      if (Integer(k) > w.dimension()) throw std::invalid_argument("power_weights: ext needs k <= dimension");
      out = counted_power(w, k, [](const Integer& m, std::size_t t) { return binomial(m, t); });
      break;
  }
  if (out.dimension() != power_dimension(w.dimension(), k, mode)) {
    throw std::logic_error("power_weights: size formula violated");
  }
  return out;
}

WeightMultiset recover_from_power(const WeightMultiset& p, long n, long k, PowerMode mode) {
  if (mode != PowerMode::Tensor && mode != PowerMode::Sym) {
    throw std::invalid_argument("recover_from_power: only tensor and sym modes are recoverable");
  }
  if (n < 1 || k < 1) throw std::invalid_argument("recover_from_power: n and k must be positive");
  const Integer expected = power_dimension(n, k, mode);
  if (p.dimension() != expected) {
    throw RecoveryError("size check", "dimension " + p.dimension().get_str() + " but " + power_mode_name(mode) +
                                          " power of dimension " + std::to_string(n) + " has " +
                                          expected.get_str());
  }
  Weight top = p.lexmax();
  for (long& x : top) {
    if (x % k != 0) {
      throw RecoveryError("divisibility", "highest weight coordinate " + std::to_string(x) +
                                              " is not divisible by k = " + std::to_string(k));
    }
    x /= k;
  }
  WeightMultiset w(p.rank());
  w.add(top);
  for (long l = 2; l <= n; ++l) {
    WeightMultiset rest = p;
    if (!rest.subtract(power_weights(w, k, mode))) {
      throw RecoveryError("subtraction", "k-fold sums of the first " + std::to_string(l - 1) +
                                             " weights are not contained in P");
    }
    if (rest.empty()) throw RecoveryError("subtraction", "P exhausted after " + std::to_string(l - 1) + " weights");
    w.add(add_scaled(rest.lexmax(), top, -(k - 1)));
  }
  if (!(power_weights(w, k, mode) == p)) {
    throw RecoveryError("final verification", "candidate " + w.to_string() + " has " + power_mode_name(mode) +
                                                  " power " + power_weights(w, k, mode).to_string());
  }
  return w;
}

bool self_dual_check(const WeightMultiset& w) { return w.negated() == w; }

nlohmann::json weights_to_json(const WeightMultiset& w) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [v, m] : w.entries()) list.push_back({{"v", v}, {"m", m.get_str()}});
  return {{"rank", w.rank()}, {"weights", list}};
}

WeightMultiset weights_from_json(const nlohmann::json& j) {
  try {
    const auto rank = j.at("rank").get<std::size_t>();
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    WeightMultiset out(rank);
    for (const auto& e : j.at("weights")) {
      Integer m;
      const auto& mj = e.at("m");
      if (mj.is_number_integer()) {
        m = mj.get<long>();
      } else if (m.set_str(mj.get<std::string>(), 10) != 0) {
        throw std::invalid_argument("bad multiplicity " + mj.dump());
      }
      out.add(e.at("v").get<Weight>(), m);
    }
    if (out.empty()) throw std::invalid_argument("weight multiset is empty");
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("weight document: ") + ex.what());
  }
}

}  // namespace twistlab

#include "twistlab/powerops.hpp"

#include <string>

namespace twistlab {

namespace {

void check_k(long k, const PowerOptions& opt) {
  if (k < 0) throw std::invalid_argument("power: k must be non-negative");
  if (k > opt.max_k) {
    throw std::invalid_argument("power: k = " + std::to_string(k) + " exceeds the cap " + std::to_string(opt.max_k));
  }
}

void check_size(const ClassFunction& chi, const ClassStructure& s) {
  if (chi.size() != s.num_classes()) throw std::invalid_argument("class function does not match the class count");
}

// Shared Newton-type recurrence; sign = -1 gives exterior powers.
ClassFunction newton_power(const ClassFunction& chi, const ClassStructure& s, long k, int sign) {
  const std::size_t n = s.num_classes();
  std::vector<ClassFunction> p{ClassFunction::constant(s, 1)};
  for (long m = 1; m <= k; ++m) {
    ClassFunction next;
    next.values.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      CycNum acc(s.modulus);
      for (long i = 1; i <= m; ++i) {
        CycNum term = chi[s.power_map(c, i)] * p[static_cast<std::size_t>(m - i)][c];
        if (sign < 0 && i % 2 == 0) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      next.values.push_back(acc * make_rational(Integer(1), Integer(m)));
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

}  // namespace

ClassFunction tensor_power_char(const ClassFunction& chi, const ClassStructure& s, long k, const PowerOptions& opt) {
  check_k(k, opt);
  check_size(chi, s);
  ClassFunction out;
  for (const auto& v : chi.values) out.values.push_back(k == 0 ? CycNum(s.modulus, 1) : v.pow(k));
  return out;
}

ClassFunction sym_power_char(const ClassFunction& chi, const ClassStructure& s, long k, const PowerOptions& opt) {
  check_k(k, opt);
  check_size(chi, s);
  return newton_power(chi, s, k, 1);
}

ClassFunction ext_power_char(const ClassFunction& chi, const ClassStructure& s, long k, const PowerOptions& opt) {
  check_k(k, opt);
  check_size(chi, s);
  return newton_power(chi, s, k, -1);
}

ClassFunction adjoint_char(const ClassFunction& chi, const ClassStructure& s) {
  check_size(chi, s);
  ClassFunction out;
  for (std::size_t c = 0; c < chi.size(); ++c) out.values.push_back(chi[c] * chi[s.inverse_class(c)]);
  return out;
}

ClassFunction dual_char(const ClassFunction& chi, const ClassStructure& s) {
  check_size(chi, s);
  ClassFunction out;
  for (std::size_t c = 0; c < chi.size(); ++c) out.values.push_back(chi[s.inverse_class(c)]);
  return out;
}

void check_class_automorphism(const ClassMap& theta, const ClassStructure& s) {
  const std::size_t n = s.num_classes();
  if (theta.size() != n) throw std::invalid_argument("class map has the wrong length");
  std::vector<bool> hit(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    if (theta[c] >= n || hit[theta[c]]) throw std::invalid_argument("class map is not a permutation");
    hit[theta[c]] = true;
    if (s.class_sizes[theta[c]] != s.class_sizes[c]) {
      throw std::invalid_argument("class map does not preserve class sizes at class " + std::to_string(c));
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (long i = 0; i < s.exponent; ++i) {
      if (theta[s.power_map(c, i)] != s.power_map(theta[c], i)) {
        throw std::invalid_argument("class map does not commute with the power map " + std::to_string(i) +
                                    " at class " + std::to_string(c));
      }
    }
  }
}

ClassFunction asai_char(const ClassFunction& chi, const ClassStructure& s, const std::vector<ClassMap>& autos) {
  check_size(chi, s);
  for (const auto& theta : autos) check_class_automorphism(theta, s);
  ClassFunction out = ClassFunction::constant(s, 1);
  for (const auto& theta : autos) {
    for (std::size_t c = 0; c < out.size(); ++c) out[c] *= chi[theta[c]];
  }
  return out;
}

ClassFunction twist_char(const ClassFunction& chi, const ClassFunction& lambda, const ClassStructure& s) {
  check_size(chi, s);
  check_size(lambda, s);
  if (!lambda.degree(s).is_one()) throw std::invalid_argument("twist: lambda is not a degree-1 character");
  return chi * lambda;
}

}  // namespace twistlab

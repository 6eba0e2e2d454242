#include "twistlab/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace twistlab {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Integer>;

// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  Poly quot(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer lead = num[i];
    if (lead == 0) continue;
    quot[i - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  }
  return quot;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

namespace detail {

struct CycloField {
  long modulus = 1;
  long degree = 1;
  // zeta_powers[e] = canonical coefficients of zeta^e for 0 <= e < modulus.
  std::vector<std::vector<Integer>> zeta_powers;
};

const CycloField* field_for(long n);

}  // namespace detail

namespace {

std::map<long, Poly>& poly_cache() {
  static std::map<long, Poly> cache;
  return cache;
}

const Poly& cyclotomic_locked(long n) {
  auto& cache = poly_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly num(static_cast<std::size_t>(n) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(num, cyclotomic_locked(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::lock_guard<std::mutex> lock(registry_mutex());
  return cyclotomic_locked(n);
}

namespace detail {

const CycloField* field_for(long n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic modulus must be positive");
  static std::map<long, std::unique_ptr<CycloField>> fields;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = fields.find(n);
  if (it != fields.end()) return it->second.get();

  const Poly& phi_poly = cyclotomic_locked(n);
  auto field = std::make_unique<CycloField>();
  field->modulus = n;
  field->degree = static_cast<long>(phi_poly.size()) - 1;
  const auto deg = static_cast<std::size_t>(field->degree);
  std::vector<Integer> current(deg, Integer(0));
  current[0] = 1;
  field->zeta_powers.reserve(static_cast<std::size_t>(n));
  for (long e = 0; e < n; ++e) {
    field->zeta_powers.push_back(current);
    // multiply by zeta and reduce by the monic Phi_n
    Integer carry = current[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (carry != 0) {
      for (std::size_t i = 0; i < deg; ++i) current[i] -= carry * phi_poly[i];
    }
  }
  const CycloField* raw = field.get();
  fields.emplace(n, std::move(field));
  return raw;
}

}  // namespace detail

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

CycNum::CycNum() : CycNum(1) {}

CycNum::CycNum(long modulus)
    : field_(detail::field_for(modulus)),
      coeffs_(static_cast<std::size_t>(field_->degree), Rational(0)) {}

CycNum::CycNum(long modulus, const Rational& value) : CycNum(modulus) { coeffs_[0] = value; }

CycNum::CycNum(long modulus, long value) : CycNum(modulus, Rational(value)) {}

CycNum::CycNum(const detail::CycloField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CycNum CycNum::zeta(long modulus, long power) {
  const detail::CycloField* f = detail::field_for(modulus);
  long e = ((power % modulus) + modulus) % modulus;
  const auto& basis = f->zeta_powers[static_cast<std::size_t>(e)];
  std::vector<Rational> c(basis.begin(), basis.end());
  return CycNum(f, std::move(c));
}

CycNum CycNum::from_polynomial(long modulus, std::span<const Rational> poly) {
  const detail::CycloField* f = detail::field_for(modulus);
  std::vector<Rational> out(static_cast<std::size_t>(f->degree), Rational(0));
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0) continue;
    const auto& basis = f->zeta_powers[j % static_cast<std::size_t>(modulus)];
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (basis[i] != 0) out[i] += poly[j] * basis[i];
    }
  }
  return CycNum(f, std::move(out));
}

long CycNum::modulus() const { return field_->modulus; }

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const { return coeffs_[0] == 1 && is_rational(); }

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

void CycNum::require_same_field(const CycNum& other, const char* op) const {
  if (field_ != other.field_) {
    throw ModulusMismatch(std::string(op) + ": modulus mismatch (" + std::to_string(modulus()) +
                          " vs " + std::to_string(other.modulus()) + ")");
  }
}

CycNum CycNum::galois(long t) const {
  const long n = modulus();
  t = ((t % n) + n) % n;
  if (gcd_long(t, n) != 1) throw std::invalid_argument("galois: exponent not coprime to modulus");
  std::vector<Rational> poly(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    poly[(i * static_cast<std::size_t>(t)) % static_cast<std::size_t>(n)] += coeffs_[i];
  }
  return from_polynomial(n, poly);
}

CycNum CycNum::conj() const { return galois(modulus() - 1); }

CycNum CycNum::times_zeta(long j) const {
  const long n = modulus();
  j = ((j % n) + n) % n;
  std::vector<Rational> poly(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    poly[(i + static_cast<std::size_t>(j)) % static_cast<std::size_t>(n)] = coeffs_[i];
  }
  return from_polynomial(n, poly);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  require_same_field(other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  require_same_field(other, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.require_same_field(b, "mul");
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  const auto n = static_cast<std::size_t>(a.modulus());
  for (std::size_t j = d; j < prod.size(); ++j) {
    if (prod[j] == 0) continue;
    const auto& basis = a.field_->zeta_powers[j % n];
    for (std::size_t i = 0; i < d; ++i) {
      if (basis[i] != 0) out[i] += prod[j] * basis[i];
    }
  }
  return CycNum(a.field_, std::move(out));
}

CycNum& CycNum::operator*=(const CycNum& other) { return *this = *this * other; }

CycNum& CycNum::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(modulus()) + ")");
  if (is_rational()) return CycNum(field_->modulus, Rational(1) / coeffs_[0]);
  // Solve (multiplication-by-this) x = 1 by Gauss-Jordan over Q.
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  CycNum column = *this;
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) m[r][c] = column.coeffs_[r];
    column = column.times_zeta(1);
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = c;
    while (pivot < d && m[pivot][c] == 0) ++pivot;
    if (pivot == d) throw std::logic_error("inverse: singular multiplication matrix");
    std::swap(m[pivot], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> out(d);
  for (std::size_t r = 0; r < d; ++r) out[r] = m[r][d];
  return CycNum(field_, std::move(out));
}

CycNum& CycNum::operator/=(const CycNum& other) {
  require_same_field(other, "div");
  return *this = *this * other.inverse();
}

CycNum CycNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycNum result(modulus(), 1);
  CycNum base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << modulus();
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycNum cyc_embed(const CycNum& a, long target_modulus) {
  const long n = a.modulus();
  if (target_modulus <= 0 || target_modulus % n != 0) {
    throw ModulusMismatch("cyc_embed: " + std::to_string(n) + " does not divide " +
                          std::to_string(target_modulus));
  }
  if (target_modulus == n) return a;
  const auto step = static_cast<std::size_t>(target_modulus / n);
  std::vector<Rational> poly(static_cast<std::size_t>(target_modulus), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) poly[i * step] = a.coeffs_[i];
  return CycNum::from_polynomial(target_modulus, poly);
}

std::optional<RootRatio> root_of_unity_ratio(const CycNum& a, const CycNum& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch("root_of_unity_ratio: modulus mismatch");
  const long n = a.modulus();
  if (b.is_zero()) {
    if (a.is_zero()) return RootRatio{0, n, 1};
    throw UndefinedRatio("ratio undefined: denominator is zero, numerator is " + a.to_string());
  }
  if (a.is_zero()) return std::nullopt;
  CycNum shifted = b;
  const CycNum neg_a = -a;
  for (long j = 0; j < n; ++j) {
    if (shifted == a) return RootRatio{j, n, n / gcd_long(j, n)};
    if (n % 2 == 1 && shifted == neg_a) {
      // -zeta_n^j = zeta_{2n}^{2j+n}
      const long base = 2 * n;
      const long e = (2 * j + n) % base;
      return RootRatio{e, base, base / gcd_long(e, base)};
    }
    shifted = shifted.times_zeta(1);
  }
  return std::nullopt;
}

}  // namespace twistlab

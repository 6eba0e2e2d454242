#include "twistlab/matrix_rep.hpp"

#include <cctype>

namespace twistlab {

CycMatrix::CycMatrix(std::size_t n, long modulus) : n_(n), modulus_(modulus), a_(n * n, CycNum(modulus)) {}

CycMatrix CycMatrix::identity(std::size_t n, long modulus) {
  CycMatrix m(n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(modulus, 1);
  return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycNum>& entries) {
  if (entries.empty()) throw std::invalid_argument("diagonal: no entries");
  CycMatrix m(entries.size(), entries.front().modulus());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

CycNum CycMatrix::trace() const {
  CycNum t(modulus_);
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool CycMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      const CycNum& v = at(r, c);
      if (r == c ? !v.is_one() : !v.is_zero()) return false;
    }
  }
  return true;
}

CycMatrix operator*(const CycMatrix& x, const CycMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix product: dimension mismatch");
  CycMatrix out(x.n_, x.modulus_);
  for (std::size_t r = 0; r < x.n_; ++r) {
    for (std::size_t k = 0; k < x.n_; ++k) {
      const CycNum& xv = x.at(r, k);
      if (xv.is_zero()) continue;
      for (std::size_t c = 0; c < x.n_; ++c) {
        const CycNum& yv = y.at(k, c);
        if (yv.is_zero()) continue;
        out.at(r, c) += xv * yv;
      }
    }
  }
  return out;
}

CycNum CycMatrix::determinant() const {
  CycMatrix m = *this;
  CycNum det(modulus_, 1);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == n_) return CycNum(modulus_);
    if (pivot != c) {
      for (std::size_t k = 0; k < n_; ++k) std::swap(m.at(pivot, k), m.at(c, k));
      det = -det;
    }
    det *= m.at(c, c);
    CycNum inv = m.at(c, c).inverse();
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      CycNum f = m.at(r, c) * inv;
      for (std::size_t k = c; k < n_; ++k) m.at(r, k) -= f * m.at(c, k);
    }
  }
  return det;
}

CycMatrix CycMatrix::inverse() const {
  CycMatrix m = *this;
  CycMatrix inv = identity(n_, modulus_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == n_) throw std::domain_error("matrix is singular");
    for (std::size_t k = 0; k < n_; ++k) {
      std::swap(m.at(pivot, k), m.at(c, k));
      std::swap(inv.at(pivot, k), inv.at(c, k));
    }
    CycNum p = m.at(c, c).inverse();
    for (std::size_t k = 0; k < n_; ++k) {
      m.at(c, k) *= p;
      inv.at(c, k) *= p;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      CycNum f = m.at(r, c);
      for (std::size_t k = 0; k < n_; ++k) {
        m.at(r, k) -= f * m.at(c, k);
        inv.at(r, k) -= f * inv.at(c, k);
      }
    }
  }
  return inv;
}

std::string CycMatrix::key() const {
  std::string k;
  for (const auto& v : a_) {
    for (const auto& q : v.coeffs()) {
      k += q.get_str();
      k += ',';
    }
    k += ';';
  }
  return k;
}

MatrixRep::MatrixRep(std::map<char, CycMatrix> generator_images, std::vector<std::string> relations)
    : images_(std::move(generator_images)), relations_(std::move(relations)) {
  if (images_.empty()) throw std::invalid_argument("MatrixRep: no generators");
  dimension_ = images_.begin()->second.size();
  modulus_ = images_.begin()->second.modulus();
  for (const auto& [name, m] : images_) {
    if (!std::isupper(static_cast<unsigned char>(name))) {
      throw std::invalid_argument(std::string("MatrixRep: generator names must be upper-case letters, got '") +
                                  name + "'");
    }
    if (m.size() != dimension_ || m.modulus() != modulus_) {
      throw std::invalid_argument("MatrixRep: generator images disagree in size or modulus");
    }
    inverses_.emplace(name, m.inverse());
  }
}

CycMatrix MatrixRep::evaluate(const std::string& word) const {
  CycMatrix result = CycMatrix::identity(dimension_, modulus_);
  for (char letter : word) {
    const bool inverse = std::islower(static_cast<unsigned char>(letter));
    const char name = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
    const auto& table = inverse ? inverses_ : images_;
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument(std::string("unknown generator '") + letter + "'");
    result = result * it->second;
  }
  return result;
}

std::string MatrixRep::first_failing_relation() const {
  for (const auto& r : relations_) {
    if (!evaluate(r).is_identity()) return r;
  }
  return {};
}

bool MatrixRep::relations_hold() const { return first_failing_relation().empty(); }

std::string power_word(const std::string& word, long k) {
  if (k < 0) return power_word(inverse_word(word), -k);
  std::string out;
  for (long i = 0; i < k; ++i) out += word;
  return out;
}

std::string inverse_word(const std::string& word) {
  std::string out(word.rbegin(), word.rend());
  for (auto& ch : out) {
    auto u = static_cast<unsigned char>(ch);
    ch = static_cast<char>(std::isupper(u) ? std::tolower(u) : std::toupper(u));
  }
  return out;
}

}  // namespace twistlab

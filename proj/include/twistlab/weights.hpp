#pragma once

// Representations of a connected reductive group seen through a maximal
// torus: multisets of integral weight vectors, their power constructions and
// the highest-weight recovery induction.
//
// Weights are ordered lexicographically, coordinate 0 first.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistlab/cyclo.hpp"

namespace twistlab {

using Weight = std::vector<long>;

class WeightMultiset {
 public:
  using Entries = std::map<Weight, Integer, std::greater<Weight>>;  // descending

  WeightMultiset() = default;
  explicit WeightMultiset(std::size_t rank) : rank_(rank) {}
  /// Each listed vector counts once.
  static WeightMultiset of(std::size_t rank, const std::vector<Weight>& weights);
  /// Rank-one shorthand, e.g. of_scalars({1, -1}).
  static WeightMultiset of_scalars(const std::vector<long>& values);

  std::size_t rank() const { return rank_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Integer dimension() const;
  const Weight& lexmax() const;
  Integer multiplicity(const Weight& w) const;

  /// m must be positive.
  void add(const Weight& w, const Integer& m = 1);
  /// Removes every entry of other; false (and *this unchanged) if any
  /// multiplicity would go negative.
  bool subtract(const WeightMultiset& other);

  WeightMultiset negated() const;
  std::string to_string() const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  std::size_t rank_ = 1;
  Entries entries_;
};

enum class PowerMode { Tensor, Sym, Ext, Adjoint };

PowerMode parse_power_mode(const std::string& name);
std::string power_mode_name(PowerMode m);

/// Binomial coefficient with arbitrary precision.
Integer binomial(const Integer& n, unsigned long k);

/// Expected dimension of the k-th power of an n-dimensional representation.
Integer power_dimension(const Integer& n, long k, PowerMode mode);

/// Multiset of k-fold sums (tensor: ordered tuples, sym: multisets, ext:
/// subsets) or of pairwise differences (adjoint; k ignored). Throws
/// std::invalid_argument for ext with k > dimension or k < 1.
WeightMultiset power_weights(const WeightMultiset& w, long k, PowerMode mode);

class RecoveryError : public std::invalid_argument {
 public:
  RecoveryError(std::string step, const std::string& detail)
      : std::invalid_argument(step + ": " + detail + "; P is not a valid k-th power image"), step_(std::move(step)) {}
  /// One of "size check", "divisibility", "subtraction", "final verification".
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

/// The unique W of dimension n with power_weights(W, k, mode) == P, for
/// mode Tensor or Sym. Throws RecoveryError naming the failing step.
WeightMultiset recover_from_power(const WeightMultiset& p, long n, long k, PowerMode mode);

/// Invariant under w -> -w.
bool self_dual_check(const WeightMultiset& w);

/// {"rank": r, "weights": [{"v": [ints], "m": "<int>"}]}.
nlohmann::json weights_to_json(const WeightMultiset& w);
/// Throws std::invalid_argument on malformed documents.
WeightMultiset weights_from_json(const nlohmann::json& j);

}  // namespace twistlab

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "twistlab/weights.hpp"

using namespace twistlab;

namespace {

WeightMultiset scalars_with_mult(std::initializer_list<std::pair<long, long>> v) {
  WeightMultiset w(1);
  for (auto [x, m] : v) w.add({x}, m);
  return w;
}

WeightMultiset random_multiset(std::mt19937& rng, std::size_t rank, long dim) {
  std::uniform_int_distribution<long> coord(-5, 5);
  WeightMultiset w(rank);
  for (long i = 0; i < dim; ++i) {
    Weight v(rank);
    for (auto& x : v) x = coord(rng);
    w.add(v);
  }
  return w;
}

std::vector<Weight> expand(const WeightMultiset& w) {
  std::vector<Weight> out;
  for (const auto& [v, m] : w.entries()) {
    for (long i = 0; i < m.get_si(); ++i) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Weights, PowerExamples) {
  auto w = WeightMultiset::of_scalars({1, -1});
  EXPECT_EQ(power_weights(w, 2, PowerMode::Sym), WeightMultiset::of_scalars({2, 0, -2}));
  EXPECT_EQ(power_weights(w, 2, PowerMode::Tensor), scalars_with_mult({{2, 1}, {0, 2}, {-2, 1}}));
  EXPECT_EQ(power_weights(WeightMultiset::of_scalars({1, 1, 0}), 2, PowerMode::Sym),
            scalars_with_mult({{2, 3}, {1, 2}, {0, 1}}));
  EXPECT_EQ(power_weights(w, 7, PowerMode::Adjoint), scalars_with_mult({{2, 1}, {0, 2}, {-2, 1}}));
}

TEST(Weights, ExtErrors) {
  auto w = WeightMultiset::of_scalars({1, 0});
  EXPECT_THROW(power_weights(w, 3, PowerMode::Ext), std::invalid_argument);
  EXPECT_THROW(power_weights(w, 0, PowerMode::Sym), std::invalid_argument);
  EXPECT_EQ(power_weights(w, 2, PowerMode::Ext), WeightMultiset::of_scalars({1}));
}

TEST(Weights, MultisetBasics) {
  auto w = WeightMultiset::of(2, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(w.dimension(), 3);
  EXPECT_EQ(w.lexmax(), (Weight{1, 0}));
  EXPECT_EQ(w.multiplicity({0, 1}), 2);
  EXPECT_EQ(w.multiplicity({5, 5}), 0);
  EXPECT_EQ(w.to_string(), "{(1,0), (0,1) x2}");
  EXPECT_EQ(WeightMultiset::of_scalars({1, -1, -1}).to_string(), "{1, -1 x2}");
  EXPECT_THROW(w.add({1}), std::invalid_argument);
  EXPECT_THROW(w.add({1, 1}, 0), std::invalid_argument);

  auto before = w;
  EXPECT_FALSE(w.subtract(WeightMultiset::of(2, {{1, 0}, {1, 0}})));
  EXPECT_EQ(w, before);
  EXPECT_TRUE(w.subtract(WeightMultiset::of(2, {{0, 1}})));
  EXPECT_EQ(w.multiplicity({0, 1}), 1);
}

TEST(Weights, LargeMultiplicities) {
  WeightMultiset w(1);
  w.add({0}, Integer("100000000000000000000"));
  w.add({1}, 1);
  EXPECT_EQ(w.dimension(), Integer("100000000000000000001"));
}

TEST(Recover, Examples) {
  EXPECT_EQ(recover_from_power(WeightMultiset::of_scalars({2, 0, -2}), 2, 2, PowerMode::Sym),
            WeightMultiset::of_scalars({1, -1}));
  EXPECT_EQ(recover_from_power(scalars_with_mult({{2, 3}, {1, 2}, {0, 1}}), 3, 2, PowerMode::Sym),
            WeightMultiset::of_scalars({1, 1, 0}));
  EXPECT_EQ(recover_from_power(scalars_with_mult({{2, 1}, {0, 2}, {-2, 1}}), 2, 2, PowerMode::Tensor),
            WeightMultiset::of_scalars({1, -1}));
}

TEST(Recover, FailureSteps) {
  auto step_of = [](const WeightMultiset& p, long n, long k, PowerMode m) -> std::string {
    try {
      recover_from_power(p, n, k, m);
    } catch (const RecoveryError& e) {
      EXPECT_NE(std::string(e.what()).find("P is not a valid k-th power image"), std::string::npos);
      return e.step();
    }
    return "none";
  };
  EXPECT_EQ(step_of(WeightMultiset::of_scalars({2, 1}), 2, 2, PowerMode::Sym), "size check");
  EXPECT_EQ(step_of(WeightMultiset::of_scalars({3, 1, 0}), 2, 2, PowerMode::Sym), "divisibility");
  // candidate {1, 0} powers to {2, 1, 0}
  EXPECT_EQ(step_of(WeightMultiset::of_scalars({2, 1, 1}), 2, 2, PowerMode::Sym), "final verification");
  // {1, 0} needs the sum 0, which P lacks
  EXPECT_EQ(step_of(scalars_with_mult({{2, 1}, {1, 1}, {-5, 4}}), 3, 2, PowerMode::Sym), "subtraction");
  EXPECT_THROW(recover_from_power(WeightMultiset::of_scalars({2, 0, -2}), 2, 2, PowerMode::Ext),
               std::invalid_argument);
}

TEST(Weights, SelfDual) {
  EXPECT_TRUE(self_dual_check(WeightMultiset::of_scalars({1, -1})));
  auto w = WeightMultiset::of_scalars({3, -1, -1, -1});
  EXPECT_FALSE(self_dual_check(w));
  auto e2 = power_weights(w, 2, PowerMode::Ext);
  EXPECT_EQ(e2, scalars_with_mult({{2, 3}, {-2, 3}}));
  EXPECT_TRUE(self_dual_check(e2));
  EXPECT_TRUE(self_dual_check(WeightMultiset(2)));
}

TEST(Weights, Json) {
  auto w = WeightMultiset::of(2, {{1, -1}, {0, 0}, {0, 0}});
  auto j = weights_to_json(w);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["weights"][1]["m"], "2");
  EXPECT_EQ(weights_from_json(j), w);
  EXPECT_EQ(weights_from_json(nlohmann::json::parse(R"({"rank":1,"weights":[{"v":[2],"m":1},{"v":[0],"m":"1"}]})")),
            WeightMultiset::of_scalars({2, 0}));
  EXPECT_THROW(weights_from_json(nlohmann::json::parse(R"({"rank":2,"weights":[{"v":[2],"m":"1"}]})")),
               std::invalid_argument);
  EXPECT_THROW(weights_from_json(nlohmann::json::parse(R"({"weights":[]})")), std::invalid_argument);
  EXPECT_THROW(weights_from_json(nlohmann::json::parse(R"({"rank":1,"weights":[{"v":[2],"m":"-1"}]})")),
               std::invalid_argument);
}

TEST(WeightsProperty, SizeFormulas) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rank = 1 + trial % 3;
    const long dim = 1 + trial % 6;
    const long k = 1 + (trial / 6) % 4;
    auto w = random_multiset(rng, rank, dim);
    for (auto mode : {PowerMode::Tensor, PowerMode::Sym, PowerMode::Ext, PowerMode::Adjoint}) {
      if (mode == PowerMode::Ext && k > dim) continue;
      auto p = power_weights(w, k, mode);
      EXPECT_EQ(p.dimension(), power_dimension(dim, k, mode));
      EXPECT_EQ(p.rank(), rank);
    }
  }
  EXPECT_EQ(power_dimension(4, 3, PowerMode::Sym), 20);
  EXPECT_EQ(power_dimension(4, 3, PowerMode::Ext), 4);
  EXPECT_EQ(power_dimension(4, 3, PowerMode::Tensor), 64);
  EXPECT_EQ(power_dimension(4, 3, PowerMode::Adjoint), 16);
}

TEST(WeightsProperty, AdjointSumsToZero) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rank = 1 + trial % 3;
    auto p = power_weights(random_multiset(rng, rank, 1 + trial % 6), 1, PowerMode::Adjoint);
    Weight sum(rank, 0);
    for (const auto& [v, m] : p.entries()) {
      for (std::size_t c = 0; c < rank; ++c) sum[c] += v[c] * m.get_si();
    }
    EXPECT_EQ(sum, Weight(rank, 0));
    EXPECT_TRUE(self_dual_check(p));
  }
}

TEST(WeightsProperty, PowersMatchNaiveEnumeration) {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rank = 1 + trial % 3;
    const long dim = 1 + trial % 5;
    const int k = 1 + trial % 3;
    auto w = random_multiset(rng, rank, dim);
    const auto list = expand(w);
    EXPECT_EQ(oracle::to_counted(power_weights(w, k, PowerMode::Tensor)), oracle::naive_power(list, k, false));
    EXPECT_EQ(oracle::to_counted(power_weights(w, k, PowerMode::Sym)), oracle::naive_power(list, k, true));
  }
}

TEST(WeightsProperty, RoundTrip) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> dim_d(1, 6), k_d(1, 4);
  std::uniform_int_distribution<std::size_t> rank_d(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rank = rank_d(rng);
    const long dim = dim_d(rng);
    const long k = k_d(rng);
    auto w = random_multiset(rng, rank, dim);
    for (auto mode : {PowerMode::Sym, PowerMode::Tensor}) {
      ASSERT_EQ(recover_from_power(power_weights(w, k, mode), dim, k, mode), w)
          << w.to_string() << " k=" << k << " " << power_mode_name(mode);
    }
  }
}

TEST(WeightsProperty, RecoveryAgreesWithBruteForce) {
  std::mt19937 rng(4711);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rank = 1 + trial % 2;
    const long dim = 1 + trial % 4;
    const int k = 1 + (trial / 4) % 3;
    auto w = random_multiset(rng, rank, dim);
    for (bool sym : {true, false}) {
      const auto mode = sym ? PowerMode::Sym : PowerMode::Tensor;
      const auto p = power_weights(w, k, mode);
      auto found = oracle::brute_force_invert(oracle::to_counted(p), static_cast<int>(dim), k, sym);
      ASSERT_EQ(found.size(), 1u) << w.to_string();
      EXPECT_EQ(WeightMultiset::of(rank, found[0]), recover_from_power(p, dim, k, mode));
    }
  }
}

TEST(WeightsProperty, RecoveryIsOrderIndependent) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto w = random_multiset(rng, 2, 4);
    auto list = expand(power_weights(w, 2, PowerMode::Sym));
    std::shuffle(list.begin(), list.end(), rng);
    auto p1 = WeightMultiset::of(2, list);
    std::reverse(list.begin(), list.end());
    auto p2 = WeightMultiset::of(2, list);
    EXPECT_EQ(recover_from_power(p1, 4, 2, PowerMode::Sym), recover_from_power(p2, 4, 2, PowerMode::Sym));
  }
}

TEST(WeightsProperty, InvalidImagesAreRejected) {
  // perturbing one weight of a genuine image breaks it
  std::mt19937 rng(3);
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto w = random_multiset(rng, 1, 3);
    auto list = expand(power_weights(w, 2, PowerMode::Sym));
    list.back()[0] += 1;
    try {
      auto r = recover_from_power(WeightMultiset::of(1, list), 3, 2, PowerMode::Sym);
      ADD_FAILURE() << "accepted " << r.to_string();
    } catch (const RecoveryError&) {
      ++rejected;
    }
  }
  EXPECT_EQ(rejected, 100);
}

#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "mbt/error.hpp"
#include "mbt/metrics.hpp"

using namespace mbt;

namespace {

// F1 ddfat gains from an independent script over the hand-enumerated windows.
constexpr double kF1Entropy = 2.0713451397302376;
constexpr double kF1Gains[4] = {1.2516291673878226, 1.584962500721156, 1.8491229175080153, 1.6960736118322672};

std::vector<Symbol> random_vector(std::mt19937_64& rng, std::size_t n, std::uint32_t values) {
  std::uniform_int_distribution<std::uint32_t> v(0, values - 1);
  std::vector<Symbol> out(n);
  for (auto& s : out) s = Symbol{v(rng)};
  return out;
}

}  // namespace

TEST_CASE("entropy") {
  SymbolTable t;
  const Symbol a = t.intern("a"), X = t.intern("X"), Y = t.intern("Y");
  CaseBase same(1);
  same.add(std::vector<Symbol>{a}, X, 5);
  CHECK(class_entropy(same) == 0.0);
  CaseBase half(1);
  half.add(std::vector<Symbol>{a}, X, 3);
  half.add(std::vector<Symbol>{a}, Y, 3);
  CHECK(class_entropy(half) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(class_entropy(CaseBase(2)), StructuralError);
}

TEST_CASE("information gain edge cases") {
  SymbolTable t;
  const Symbol a = t.intern("a"), b = t.intern("b"), X = t.intern("X"), Y = t.intern("Y");
  CaseBase base(2);
  base.add(std::vector<Symbol>{a, a}, X, 2);
  base.add(std::vector<Symbol>{a, b}, Y, 2);
  CHECK(information_gain(base, 0) == 0.0);
  CHECK(information_gain(base, 1) == doctest::Approx(class_entropy(base)).epsilon(1e-12));
  CHECK_THROWS_AS(information_gain(base, 2), ParameterError);
}

TEST_CASE("F1 known-word gains") {
  const auto f1 = fixture::f1();
  CHECK(class_entropy(f1.known) == doctest::Approx(kF1Entropy).epsilon(1e-12));
  const auto w = information_gains(f1.known);
  REQUIRE(w.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(w.gains[i] == doctest::Approx(kF1Gains[i]).epsilon(1e-12));
  CHECK(std::max_element(w.gains.begin(), w.gains.end()) - w.gains.begin() == 2);

  // The hand-enumerated windows agree with the extracted base.
  const auto windows = oracle::ddfat_windows(f1.corpus, oracle::f1_ambiguous_tags());
  for (std::size_t i = 0; i < 4; ++i) CHECK(oracle::gain(windows, i) == doctest::Approx(w.gains[i]).epsilon(1e-12));
}

TEST_CASE("overlap distance") {
  SymbolTable t;
  auto v = [&](std::initializer_list<const char*> xs) {
    std::vector<Symbol> out;
    for (auto x : xs) out.push_back(t.intern(x));
    return out;
  };
  CHECK(distance_overlap(v({"a", "b", "c", "d"}), v({"a", "b", "c", "d"})) == 0);
  CHECK(distance_overlap(v({"a", "b", "c", "d"}), v({"e", "f", "g", "h"})) == 4);
  CHECK(distance_overlap(v({"np", "np", ",", "cd"}), v({"np", ",", "cd", "nns"})) == 3);
  CHECK_THROWS_AS(distance_overlap(v({"a"}), v({"a", "b"})), StructuralError);
}

TEST_CASE("weighted distance") {
  const auto f1 = fixture::f1();
  const auto w = information_gains(f1.known);
  const auto x = fixture::symbols_of(f1.symbols, {"DT", "NN", "NN-VBD", "DT"});
  const auto y = fixture::symbols_of(f1.symbols, {"NN", "NN", "VBZ", "DT"});
  CHECK(distance_weighted(x, x, w) == 0.0);
  CHECK(distance_weighted(x, y, w) == doctest::Approx(kF1Gains[0] + kF1Gains[2]).epsilon(1e-12));
  const auto z = fixture::symbols_of(f1.symbols, {"DT", "NN", "NN-VBD", "NN"});
  CHECK(distance_weighted(x, z, w) == w.gains[3]);
  CHECK_THROWS_AS(distance_weighted(x, x, FeatureWeights::uniform(3)), StructuralError);
}

TEST_CASE("unit weights reproduce the overlap distance (property)") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t n = 1 + i % 8;
    const auto x = random_vector(rng, n, 4), y = random_vector(rng, n, 4);
    CHECK(distance_weighted(x, y, FeatureWeights::uniform(n)) == static_cast<double>(distance_overlap(x, y)));
    CHECK(distance_overlap(x, y) == distance_overlap(y, x));
    CHECK((distance_overlap(x, y) == 0) == (x == y));
  }
}

TEST_CASE("overlap triangle inequality (property)") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 5000; ++i) {
    const auto x = random_vector(rng, 6, 3), y = random_vector(rng, 6, 3), z = random_vector(rng, 6, 3);
    CHECK(distance_overlap(x, z) <= distance_overlap(x, y) + distance_overlap(y, z));
  }
}

TEST_CASE("gain is invariant under relabeling and duplication (property)") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 60; ++round) {
    oracle::RandomSpec spec;
    spec.arity = 3 + round % 3;
    spec.cases = 50 + round * 7;
    const auto cases = oracle::random_cases(rng, spec);

    SymbolTable t;
    const auto base = oracle::to_base(cases, t);
    const auto g = information_gains(base);

    // Rename every value of feature 0.
    auto renamed = cases;
    for (auto& c : renamed) c.x[0] = "renamed:" + c.x[0] + ":x";
    SymbolTable t2;
    CHECK(information_gain(oracle::to_base(renamed, t2), 0) == doctest::Approx(g.gains[0]).epsilon(1e-12));

    // Each case three times.
    auto tripled = cases;
    for (int k = 0; k < 2; ++k) tripled.insert(tripled.end(), cases.begin(), cases.end());
    SymbolTable t3;
    const auto g3 = information_gains(oracle::to_base(tripled, t3));
    for (std::size_t i = 0; i < spec.arity; ++i) {
      CHECK(g3.gains[i] == doctest::Approx(g.gains[i]).epsilon(1e-12));
      CHECK(g.gains[i] >= 0.0);
      CHECK(g.gains[i] == doctest::Approx(oracle::gain(cases, i)).epsilon(1e-12));
    }
  }
}

TEST_CASE("gains TSV") {
  std::ostringstream out;
  write_gains_tsv(out, FeatureWeights{{0.5, 0.25}});
  CHECK(out.str() == "feature_index\tgain\n0\t0.5\n1\t0.25\n");
}

#include <random>

#include "doctest.h"
#include "mbt/casebase.hpp"
#include "mbt/error.hpp"

using namespace mbt;

TEST_CASE("symbol table") {
  SymbolTable t;
  const auto a = t.intern("a");
  CHECK(t.intern("a") == a);
  CHECK(t.intern("b").id == a.id + 1);
  CHECK(t.text(a) == "a");
  CHECK(t.find("zzz").is_none());
  CHECK_THROWS_AS(t.text(Symbol{99}), StructuralError);
}

TEST_CASE("counted patterns") {
  SymbolTable t;
  const Symbol a = t.intern("a"), b = t.intern("b"), X = t.intern("X"), Y = t.intern("Y");
  const std::vector<Symbol> ab{a, b};

  CaseBase twice(2);
  twice.add(ab, X);
  twice.add(ab, X);
  CHECK(twice.size() == 1);
  CHECK(twice.distribution(0).count(X) == 2);
  CHECK(twice.distribution(0).distinct() == 1);

  CaseBase mixed(2);
  mixed.add(ab, X);
  mixed.add(ab, Y);
  CHECK(mixed.size() == 1);
  CHECK(mixed.distribution(0).count(X) == 1);
  CHECK(mixed.distribution(0).count(Y) == 1);
  CHECK(mixed.find(ab) == 0);
  CHECK(mixed.find(std::vector<Symbol>{b, a}) == mixed.size());

  CHECK_THROWS_AS(mixed.add(std::vector<Symbol>{a}, X), StructuralError);
}

TEST_CASE("majority and the tie rule") {
  SymbolTable t;
  const Symbol Y = t.intern("Y"), X = t.intern("X");  // Y gets the smaller id
  ClassDistribution d;
  d.add(X, 3);
  d.add(Y, 1);
  CHECK(d.majority(t) == X);

  ClassDistribution tie;
  tie.add(Y, 2);
  tie.add(X, 2);
  CHECK(tie.majority(t) == X);

  ClassDistribution one;
  one.add(X);
  CHECK(one.majority(t) == X);

  CHECK_THROWS_AS(ClassDistribution{}.majority(t), StructuralError);
  CHECK(tie_rule_before(t, X, 2, Y, 2));
  CHECK(tie_rule_before(t, Y, 3, X, 2));
}

TEST_CASE("total_cases is conserved (property)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> v(0, 3);
  std::uniform_int_distribution<std::uint64_t> n(1, 5);
  SymbolTable t;
  for (int i = 0; i < 8; ++i) t.intern("s" + std::to_string(i));
  for (int round = 0; round < 50; ++round) {
    CaseBase base(3);
    std::uint64_t expected = 0;
    for (int k = 0; k < 200; ++k) {
      const std::vector<Symbol> f{Symbol{v(rng)}, Symbol{v(rng)}, Symbol{v(rng)}};
      const auto count = n(rng);
      base.add(f, Symbol{4 + v(rng)}, count);
      expected += count;
    }
    CHECK(base.total_cases() == expected);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < base.size(); ++i) sum += base.distribution(i).total();
    CHECK(sum == expected);
    CHECK(base.class_totals().total() == expected);
    CHECK(base.size() <= 64);
  }
}

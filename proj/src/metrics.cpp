#include "mbt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <unordered_map>

#include "mbt/error.hpp"

namespace mbt {

namespace {

double entropy_of(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  if (total == 0) return 0.0;
  double h = 0.0;
  const double n = static_cast<double>(total);
  for (auto c : counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

void require_arity(std::span<const Symbol> x, std::span<const Symbol> y) {
  if (x.size() != y.size()) throw StructuralError("distance between vectors of different arity");
}

}  // namespace

double class_entropy(const CaseBase& base) {
  if (base.total_cases() == 0) throw StructuralError("entropy of an empty case base");
  auto totals = base.class_totals();
  std::vector<std::uint64_t> counts;
  counts.reserve(totals.distinct());
  for (const auto& [cls, n] : totals.entries()) counts.push_back(n);
  return entropy_of(counts, totals.total());
}

double information_gain(const CaseBase& base, std::size_t feature_index) {
  if (feature_index >= base.arity()) throw ParameterError("feature index out of range");
  if (base.total_cases() == 0) throw StructuralError("information gain on an empty case base");

  // Per feature value: its class counts.
  std::unordered_map<std::uint32_t, std::unordered_map<std::uint32_t, std::uint64_t>> by_value;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto& classes = by_value[base.pattern(i)[feature_index].id];
    for (const auto& [cls, n] : base.distribution(i).entries()) classes[cls.id] += n;
  }

  // Accumulate in ascending value order so the sum is reproducible.
  std::vector<std::uint32_t> values;
  values.reserve(by_value.size());
  for (const auto& kv : by_value) values.push_back(kv.first);
  std::sort(values.begin(), values.end());

  const double n = static_cast<double>(base.total_cases());
  double conditional = 0.0;
  std::vector<std::uint64_t> counts;
  for (auto v : values) {
    const auto& classes = by_value[v];
    counts.clear();
    std::uint64_t subtotal = 0;
    for (const auto& [cls, c] : classes) {
      counts.push_back(c);
      subtotal += c;
    }
    std::sort(counts.begin(), counts.end());
    conditional += static_cast<double>(subtotal) / n * entropy_of(counts, subtotal);
  }
  return std::max(0.0, class_entropy(base) - conditional);
}

FeatureWeights information_gains(const CaseBase& base) {
  FeatureWeights w;
  w.gains.reserve(base.arity());
  for (std::size_t i = 0; i < base.arity(); ++i) w.gains.push_back(information_gain(base, i));
  return w;
}

std::size_t distance_overlap(std::span<const Symbol> x, std::span<const Symbol> y) {
  require_arity(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
  return d;
}

double distance_weighted(std::span<const Symbol> x, std::span<const Symbol> y, const FeatureWeights& w) {
  require_arity(x, y);
  if (w.size() != x.size()) throw StructuralError("weight vector length does not match arity");
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) d += w.gains[i];
  }
  return d;
}

void write_gains_tsv(std::ostream& out, const FeatureWeights& w) {
  out << "feature_index\tgain\n";
  auto old = out.precision(17);
  for (std::size_t i = 0; i < w.size(); ++i) out << i << '\t' << w.gains[i] << '\n';
  out.precision(old);
}

}  // namespace mbt

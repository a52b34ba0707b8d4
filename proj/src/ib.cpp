#include "mbt/ib.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mbt/error.hpp"

namespace mbt {

namespace {

void check_query(const CaseBase& base, std::span<const Symbol> query) {
  if (base.empty()) throw StructuralError("nearest-neighbour search on an empty case base");
  if (query.size() != base.arity()) throw StructuralError("query arity does not match case base arity");
}

}  // namespace

ClassDistribution NearestSet::pooled(const CaseBase& base) const {
  ClassDistribution out;
  for (auto i : members) out.merge(base.distribution(i));
  return out;
}

NearestSet nearest_overlap(const CaseBase& base, std::span<const Symbol> query) {
  check_query(base, query);
  const std::size_t arity = base.arity();
  const Symbol* row = base.flat().data();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  NearestSet out;
  for (std::size_t p = 0; p < base.size(); ++p, row += arity) {
    std::size_t d = 0;
    for (std::size_t f = 0; f < arity && d <= best; ++f) d += (row[f] != query[f]);
    if (d < best) {
      best = d;
      out.members.clear();
    }
    if (d == best) out.members.push_back(p);
  }
  out.distance = static_cast<double>(best);
  return out;
}

NearestSet nearest_weighted(const CaseBase& base, const FeatureWeights& weights, std::span<const Symbol> query) {
  check_query(base, query);
  if (weights.size() != base.arity()) throw StructuralError("weight vector length does not match arity");
  const std::size_t arity = base.arity();
  const double* w = weights.gains.data();
  const double eps = 1e-12 * std::max(1.0, std::accumulate(weights.gains.begin(), weights.gains.end(), 0.0));

  // Ties on weighted distance are broken by the raw mismatch count, so an
  // exact match stays unique even when some feature has zero gain.
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_mismatches = std::numeric_limits<std::size_t>::max();
  NearestSet out;
  const Symbol* row = base.flat().data();
  for (std::size_t p = 0; p < base.size(); ++p, row += arity) {
    double d = 0.0;
    std::size_t mismatches = 0;
    for (std::size_t f = 0; f < arity; ++f) {
      if (row[f] != query[f]) {
        d += w[f];
        ++mismatches;
        if (d > best + eps) break;
      }
    }
    if (d > best + eps) continue;
    if (d < best - eps || mismatches < best_mismatches) {
      best = d;
      best_mismatches = mismatches;
      out.members.clear();
      out.members.push_back(p);
    } else if (mismatches == best_mismatches) {
      out.members.push_back(p);
    }
  }
  out.distance = best;
  return out;
}

Symbol classify_ib1(const CaseBase& base, const SymbolTable& symbols, std::span<const Symbol> query) {
  return nearest_overlap(base, query).pooled(base).majority(symbols);
}

Symbol classify_ib1ig(const CaseBase& base, const FeatureWeights& weights, const SymbolTable& symbols,
                      std::span<const Symbol> query) {
  return nearest_weighted(base, weights, query).pooled(base).majority(symbols);
}

}  // namespace mbt

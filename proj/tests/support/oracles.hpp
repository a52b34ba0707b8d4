#pragma once

// Reference implementations over plain strings for the unit and acceptance
// tests. They share no code with the library beyond the public types used
// to hand data across.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mbt/casebase.hpp"
#include "mbt/corpus.hpp"

namespace oracle {

using Row = std::vector<std::string>;

struct StrCase {
  Row x;
  std::string y;
};

inline constexpr const char* kF1 =
    "the/DT cat/NN saw/VBD the/DT saw/NN ./.\n"
    "the/DT dog/NN saw/VBD the/DT cat/NN ./.\n"
    "a/DT saw/NN cuts/VBZ the/DT wood/NN ./.\n";

/// Highest count, then smallest text.
inline std::string majority(const std::map<std::string, std::uint64_t>& counts) {
  std::string best;
  std::uint64_t best_n = 0;
  for (const auto& [cls, n] : counts)
    if (n > best_n) best = cls, best_n = n;  // map order makes the first maximum the smallest text
  return best;
}

inline double entropy(const std::map<std::string, std::uint64_t>& counts) {
  double total = 0.0;
  for (const auto& [c, n] : counts) total += static_cast<double>(n);
  double h = 0.0;
  for (const auto& [c, n] : counts) {
    if (n == 0) continue;
    const double p = static_cast<double>(n) / total;
    h -= p * std::log2(p);
  }
  return h;
}

inline double entropy(const std::vector<StrCase>& cases) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& c : cases) ++counts[c.y];
  return entropy(counts);
}

inline double gain(const std::vector<StrCase>& cases, std::size_t i) {
  std::map<std::string, std::vector<StrCase>> parts;
  for (const auto& c : cases) parts[c.x[i]].push_back(c);
  double cond = 0.0;
  for (const auto& [v, part] : parts)
    cond += static_cast<double>(part.size()) / static_cast<double>(cases.size()) * entropy(part);
  return entropy(cases) - cond;
}

/// Nearest-neighbour search over the expanded (non-deduplicated) cases.
inline std::string nearest(const std::vector<StrCase>& cases, const Row& q, const std::vector<double>& w) {
  double best = INFINITY;
  std::size_t best_mismatch = SIZE_MAX;
  std::map<std::string, std::uint64_t> pool;
  for (const auto& c : cases) {
    double d = 0.0;
    std::size_t mismatch = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (c.x[i] != q[i]) d += w[i], ++mismatch;
    const double eps = 1e-9;
    if (d < best - eps || (d <= best + eps && mismatch < best_mismatch)) {
      best = d;
      best_mismatch = mismatch;
      pool.clear();
    }
    if (std::abs(d - best) <= eps && mismatch == best_mismatch) ++pool[c.y];
  }
  return majority(pool);
}

/// Straightforward recursive IGTree over string cases.
struct TreeNode {
  std::string cls;
  std::map<std::string, std::unique_ptr<TreeNode>> kids;
  bool leaf() const { return kids.empty(); }
};

inline std::unique_ptr<TreeNode> build_tree(const std::vector<StrCase>& cases, const std::vector<std::size_t>& order,
                                            std::size_t level = 0) {
  auto node = std::make_unique<TreeNode>();
  std::map<std::string, std::uint64_t> counts;
  for (const auto& c : cases) ++counts[c.y];
  node->cls = majority(counts);
  if (counts.size() == 1 || level == order.size()) return node;
  std::map<std::string, std::vector<StrCase>> parts;
  for (const auto& c : cases) parts[c.x[order[level]]].push_back(c);
  for (const auto& [v, part] : parts) node->kids[v] = build_tree(part, order, level + 1);
  return node;
}

inline void prune_tree(TreeNode& n) {
  for (auto& [v, kid] : n.kids) prune_tree(*kid);
  std::erase_if(n.kids, [&](const auto& kv) { return kv.second->leaf() && kv.second->cls == n.cls; });
}

inline std::string classify_tree(const TreeNode& root, const Row& q, const std::vector<std::size_t>& order) {
  const TreeNode* n = &root;
  for (std::size_t level = 0; !n->leaf(); ++level) {
    auto it = n->kids.find(q[order[level]]);
    if (it == n->kids.end()) break;
    n = it->second.get();
  }
  return n->cls;
}

inline void count_tree(const TreeNode& n, std::size_t& nodes, std::size_t& leaves) {
  ++nodes;
  if (n.leaf()) ++leaves;
  for (const auto& [v, kid] : n.kids) count_tree(*kid, nodes, leaves);
}

/// Random classification data with learnable structure: the class is a
/// function of two or three features plus label noise.
struct RandomSpec {
  std::size_t arity = 4;
  std::size_t cases = 1000;
  std::size_t values = 6;
  std::size_t classes = 4;
  double noise = 0.1;
};

inline std::vector<StrCase> random_cases(std::mt19937_64& rng, const RandomSpec& spec) {
  std::uniform_int_distribution<std::size_t> value(0, spec.values - 1), cls(0, spec.classes - 1),
      feat(0, spec.arity - 1);
  std::bernoulli_distribution noisy(spec.noise);
  const std::size_t a = feat(rng), b = feat(rng);
  // Skewed value distributions make some features far more informative.
  std::vector<std::discrete_distribution<std::size_t>> skew;
  for (std::size_t i = 0; i < spec.arity; ++i) {
    std::vector<double> w(spec.values);
    for (std::size_t v = 0; v < spec.values; ++v) w[v] = 1.0 / static_cast<double>(1 + v * (i % 3));
    skew.emplace_back(w.begin(), w.end());
  }
  std::vector<StrCase> out;
  for (std::size_t n = 0; n < spec.cases; ++n) {
    StrCase c;
    std::vector<std::size_t> raw(spec.arity);
    for (std::size_t i = 0; i < spec.arity; ++i) {
      raw[i] = skew[i](rng);
      c.x.push_back("v" + std::to_string(i) + "_" + std::to_string(raw[i]));
    }
    const std::size_t k = noisy(rng) ? cls(rng) : (raw[a] * 7 + raw[b] * 3) % spec.classes;
    c.y = "C" + std::to_string(k);
    out.push_back(std::move(c));
  }
  return out;
}

/// Random query over the same value space plus unseen values.
inline Row random_query(std::mt19937_64& rng, const RandomSpec& spec) {
  std::uniform_int_distribution<std::size_t> value(0, spec.values);  // == values is unseen
  Row q;
  for (std::size_t i = 0; i < spec.arity; ++i) q.push_back("v" + std::to_string(i) + "_" + std::to_string(value(rng)));
  return q;
}

/// Interns string cases into a case base.
inline mbt::CaseBase to_base(const std::vector<StrCase>& cases, mbt::SymbolTable& symbols) {
  mbt::CaseBase base(cases.front().x.size());
  std::vector<mbt::Symbol> f;
  for (const auto& c : cases) {
    f.clear();
    for (const auto& v : c.x) f.push_back(symbols.intern(v));
    base.add(f, symbols.intern(c.y));
  }
  return base;
}

/// Query symbols; values never interned map to Symbol::none().
inline std::vector<mbt::Symbol> to_query(const Row& q, const mbt::SymbolTable& symbols) {
  std::vector<mbt::Symbol> out;
  for (const auto& v : q) out.push_back(symbols.find(v));
  return out;
}

inline std::vector<StrCase> to_strings(const std::vector<mbt::Case>& cases, const mbt::SymbolTable& symbols) {
  std::vector<StrCase> out;
  for (const auto& c : cases) {
    StrCase s;
    for (auto f : c.features) s.x.emplace_back(symbols.text(f));
    s.y = symbols.text(c.target);
    out.push_back(std::move(s));
  }
  return out;
}

/// Hand enumeration of ddfat windows with gold left context, written out
/// for a corpus where every word is in the lexicon and no word is a number.
inline std::vector<StrCase> ddfat_windows(const mbt::Corpus& corpus, const std::map<std::string, std::string>& amb) {
  std::vector<StrCase> out;
  for (const auto& s : corpus.sentences()) {
    const auto& t = s.tokens;
    for (std::size_t i = 0; i < t.size(); ++i) {
      StrCase c;
      c.x.push_back(i >= 2 ? t[i - 2].tag : "=");
      c.x.push_back(i >= 1 ? t[i - 1].tag : "=");
      c.x.push_back(amb.at(t[i].word));
      c.x.push_back(i + 1 < t.size() ? amb.at(t[i + 1].word) : "=");
      c.y = t[i].tag;
      out.push_back(std::move(c));
    }
  }
  return out;
}

inline const std::map<std::string, std::string>& f1_ambiguous_tags() {
  static const std::map<std::string, std::string> m = {
      {"the", "DT"}, {"a", "DT"},   {"cat", "NN"},   {"dog", "NN"}, {"wood", "NN"},
      {"saw", "NN-VBD"}, {"cuts", "VBZ"}, {".", "."}};
  return m;
}

}  // namespace oracle

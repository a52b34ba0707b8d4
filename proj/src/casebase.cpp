#include "mbt/casebase.hpp"

#include <algorithm>

#include "mbt/error.hpp"

namespace mbt {

Symbol SymbolTable::intern(std::string_view text) {
  if (auto it = ids_.find(text); it != ids_.end()) return Symbol{it->second};
  if (texts_.size() >= Symbol::kNoneId) throw StructuralError("symbol table full");
  auto id = static_cast<std::uint32_t>(texts_.size());
  texts_.emplace_back(text);
  ids_.emplace(texts_.back(), id);
  return Symbol{id};
}

Symbol SymbolTable::find(std::string_view text) const {
  if (auto it = ids_.find(text); it != ids_.end()) return Symbol{it->second};
  return Symbol::none();
}

std::string_view SymbolTable::text(Symbol s) const {
  if (s.id >= texts_.size()) throw StructuralError("symbol id out of range");
  return texts_[s.id];
}

bool tie_rule_before(const SymbolTable& symbols, Symbol a, std::uint64_t count_a, Symbol b,
                     std::uint64_t count_b) {
  if (count_a != count_b) return count_a > count_b;
  if (a == b) return false;
  return symbols.text(a) < symbols.text(b);
}

void ClassDistribution::add(Symbol cls, std::uint64_t count) {
  if (count == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), cls,
                             [](const Entry& e, Symbol s) { return e.first < s; });
  if (it != entries_.end() && it->first == cls)
    it->second += count;
  else
    entries_.insert(it, {cls, count});
  total_ += count;
}

void ClassDistribution::merge(const ClassDistribution& other) {
  for (const auto& [cls, n] : other.entries_) add(cls, n);
}

std::uint64_t ClassDistribution::count(Symbol cls) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), cls,
                             [](const Entry& e, Symbol s) { return e.first < s; });
  return (it != entries_.end() && it->first == cls) ? it->second : 0;
}

Symbol ClassDistribution::majority(const SymbolTable& symbols) const {
  if (entries_.empty()) throw StructuralError("majority of an empty distribution");
  const Entry* best = &entries_.front();
  for (const auto& e : entries_) {
    if (tie_rule_before(symbols, e.first, e.second, best->first, best->second)) best = &e;
  }
  return best->first;
}

CaseBase::CaseBase(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw StructuralError("case base arity must be positive");
}

std::uint64_t CaseBase::hash(std::span<const Symbol> features) const noexcept {
  // FNV-1a over the symbol ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto s : features) {
    h ^= s.id;
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t CaseBase::find(std::span<const Symbol> features) const {
  if (features.size() != arity_) return size();
  auto [lo, hi] = index_.equal_range(hash(features));
  for (auto it = lo; it != hi; ++it) {
    auto stored = pattern(it->second);
    if (std::equal(stored.begin(), stored.end(), features.begin())) return it->second;
  }
  return size();
}

void CaseBase::add(std::span<const Symbol> features, Symbol target, std::uint64_t count) {
  if (features.size() != arity_)
    throw StructuralError("case arity " + std::to_string(features.size()) + " does not match case base arity " +
                          std::to_string(arity_));
  if (count == 0) return;
  std::size_t idx = find(features);
  if (idx == size()) {
    idx = size();
    flat_.insert(flat_.end(), features.begin(), features.end());
    dists_.emplace_back();
    index_.emplace(hash(features), static_cast<std::uint32_t>(idx));
  }
  dists_[idx].add(target, count);
  total_cases_ += count;
}

ClassDistribution CaseBase::class_totals() const {
  ClassDistribution out;
  for (const auto& d : dists_) out.merge(d);
  return out;
}

void CaseBase::reserve(std::size_t patterns) {
  flat_.reserve(patterns * arity_);
  dists_.reserve(patterns);
  index_.reserve(patterns);
}

}  // namespace mbt

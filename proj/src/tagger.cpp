#include "mbt/tagger.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

#include "mbt/binary_io.hpp"
#include "mbt/error.hpp"

namespace mbt {

namespace {

constexpr std::size_t kMaxArity = 8;

void write_weights(BinaryWriter& out, const FeatureWeights& w) {
  out.u32(static_cast<std::uint32_t>(w.size()));
  for (double g : w.gains) out.f64(g);
}

FeatureWeights read_weights(BinaryReader& in) {
  FeatureWeights w;
  const auto n = in.u32();
  if (n > kMaxArity) throw ModelFormatError("weight vector too long");
  for (std::uint32_t i = 0; i < n; ++i) w.gains.push_back(in.f64());
  return w;
}

void check_tree(const IGTree& tree, const FeatureWeights& w, std::size_t arity, const SymbolTable& symbols,
                const char* which) {
  if (tree.arity() != arity || w.size() != arity)
    throw ModelFormatError(std::string(which) + " tree has the wrong arity");
  if (tree.feature_order() != gain_order(w))
    throw ModelFormatError(std::string(which) + " tree order disagrees with its weights");
  for (std::size_t n = 0; n < tree.node_count(); ++n) {
    if (tree.node_default(n).id >= symbols.size()) throw ModelFormatError("tree refers to an unknown symbol");
    for (auto v : tree.arc_values(n))
      if (v.id >= symbols.size()) throw ModelFormatError("tree refers to an unknown symbol");
  }
}

}  // namespace

struct TaggerModel::Prepared {
  std::span<const std::string> words;
  std::vector<Symbol> ambiguous;
  std::vector<Route> routes;
};

TaggerModel TaggerModel::train(const Corpus& corpus, const TaggerConfig& config) {
  if (corpus.empty()) throw ParameterError("cannot train on an empty corpus");
  TaggerModel m;
  m.boundary_ = m.symbols_.intern(kBoundary);
  m.unknown_ambiguous_ = m.symbols_.intern(kUnknownAmbiguous);
  m.threshold_ = config.threshold;
  m.numbers_to_unknown_ = config.numbers_to_unknown;
  m.lexicon_ = build_lexicon(corpus, config.threshold, m.symbols_);

  m.closed_class_ = config.closed_class ? *config.closed_class : default_closed_class(corpus.tagset());
  std::sort(m.closed_class_.begin(), m.closed_class_.end());
  m.closed_class_.erase(std::unique(m.closed_class_.begin(), m.closed_class_.end()), m.closed_class_.end());

  ExtractionOptions options{m.numbers_to_unknown_, m.closed_class_};
  auto known = extract_known_cases(corpus, m.lexicon_, m.symbols_, options);
  auto unknown = extract_unknown_cases(corpus, m.lexicon_, m.symbols_, options);
  // Degenerate corpora (only numbers, or only closed-class tags) still need
  // both trees; fall back to unfiltered cases.
  if (known.empty()) {
    ExtractionOptions all{false, {}};
    known = extract_known_cases(corpus, m.lexicon_, m.symbols_, all);
  }
  if (unknown.empty()) {
    ExtractionOptions all{m.numbers_to_unknown_, {}};
    unknown = extract_unknown_cases(corpus, m.lexicon_, m.symbols_, all);
  }

  m.known_weights_ = information_gains(known);
  m.unknown_weights_ = information_gains(unknown);
  m.known_tree_ = IGTree::build(known, m.known_weights_, m.symbols_).pruned();
  m.unknown_tree_ = IGTree::build(unknown, m.unknown_weights_, m.symbols_).pruned();
  return m;
}

Route TaggerModel::route(std::string_view word) const {
  if (!lexicon_.find(word)) return Route::Unknown;
  if (numbers_to_unknown_ && is_number(word)) return Route::Unknown;
  return Route::Known;
}

TaggerModel::Prepared TaggerModel::prepare(std::span<const std::string> words) const {
  Prepared p;
  p.words = words;
  p.ambiguous.reserve(words.size());
  p.routes.reserve(words.size());
  for (const auto& w : words) {
    const auto* entry = lexicon_.find(w);
    p.ambiguous.push_back(entry ? entry->ambiguous_tag : unknown_ambiguous_);
    p.routes.push_back(route(w));
  }
  return p;
}

void TaggerModel::features_at(const Prepared& p, std::span<const Symbol> assigned, std::size_t i,
                              Symbol* out) const {
  const Window w{p.words, p.ambiguous, assigned, boundary_};
  const auto& tmpl = p.routes[i] == Route::Known ? known_template() : unknown_template();
  fill_features(tmpl, w, i, [&](std::string_view l) { return symbols_.find(l); }, out);
}

std::vector<TaggedWord> TaggerModel::annotate(std::span<const std::string> words,
                                              std::span<const std::string> gold_left) const {
  if (words.empty()) throw ParameterError("cannot tag an empty sentence");
  if (!gold_left.empty() && gold_left.size() != words.size())
    throw ParameterError("gold tag count does not match word count");
  const auto p = prepare(words);
  std::vector<Symbol> assigned(words.size());
  std::vector<TaggedWord> out;
  out.reserve(words.size());
  std::array<Symbol, kMaxArity> query{};
  for (std::size_t i = 0; i < words.size(); ++i) {
    features_at(p, assigned, i, query.data());
    const auto& tree = p.routes[i] == Route::Known ? known_tree_ : unknown_tree_;
    const Symbol tag = tree.classify(std::span<const Symbol>(query.data(), tree.arity()));
    out.push_back({tag, p.routes[i]});
    assigned[i] = gold_left.empty() ? tag : symbols_.find(gold_left[i]);
  }
  return out;
}

std::vector<Symbol> TaggerModel::tag_sentence(std::span<const std::string> words) const {
  auto tagged = annotate(words);
  std::vector<Symbol> out;
  out.reserve(tagged.size());
  for (const auto& t : tagged) out.push_back(t.tag);
  return out;
}

std::vector<std::string> TaggerModel::tag_words(std::span<const std::string> words) const {
  std::vector<std::string> out;
  for (auto s : tag_sentence(words)) out.emplace_back(symbols_.text(s));
  return out;
}

Explanation TaggerModel::explain(std::span<const std::string> words, std::size_t position) const {
  if (position >= words.size()) throw ParameterError("explain position out of range");
  const auto tagged = annotate(words);
  std::vector<Symbol> assigned;
  for (const auto& t : tagged) assigned.push_back(t.tag);

  const auto p = prepare(words);
  std::array<Symbol, kMaxArity> query{};
  features_at(p, assigned, position, query.data());
  const bool known = p.routes[position] == Route::Known;
  const auto& tree = known ? known_tree_ : unknown_tree_;
  const auto& tmpl = known ? known_template() : unknown_template();
  const auto trace = tree.trace(std::span<const Symbol>(query.data(), tree.arity()));

  Explanation e;
  e.word = words[position];
  e.route = p.routes[position];
  e.ended_at_leaf = trace.ended_at_leaf;
  e.tag = symbols_.text(trace.result);
  for (const auto& s : trace.steps) {
    e.steps.push_back({tmpl.slots[s.feature].name,
                       s.value.is_none() ? std::string("<unseen>") : std::string(symbols_.text(s.value)), s.matched,
                       std::string(symbols_.text(s.node_default))});
  }
  return e;
}

std::string TaggerModel::serialize() const {
  BinaryWriter out;
  out.raw(kModelMagic);
  out.u16(kModelVersion);

  BinaryWriter syms;
  syms.u32(static_cast<std::uint32_t>(symbols_.size()));
  for (std::uint32_t i = 0; i < symbols_.size(); ++i) syms.str(symbols_.text(Symbol{i}));
  out.section("SYMS", syms);

  BinaryWriter lex;
  lexicon_.write(lex);
  out.section("LEXI", lex);

  BinaryWriter wk, wu;
  write_weights(wk, known_weights_);
  write_weights(wu, unknown_weights_);
  out.section("WGTK", wk);
  out.section("WGTU", wu);

  BinaryWriter tk, tu;
  known_tree_.write(tk);
  unknown_tree_.write(tu);
  out.section("TREK", tk);
  out.section("TREU", tu);

  BinaryWriter conf;
  conf.f64(threshold_);
  conf.u8(numbers_to_unknown_ ? 1 : 0);
  conf.u32(static_cast<std::uint32_t>(closed_class_.size()));
  for (const auto& t : closed_class_) conf.str(t);
  conf.str(kBoundary);
  conf.str(kUnknownAmbiguous);
  out.section("CONF", conf);
  return std::move(out).take();
}

TaggerModel TaggerModel::deserialize(std::string_view bytes) {
  BinaryReader in(bytes);
  if (bytes.size() < kModelMagic.size() || in.raw(kModelMagic.size()) != kModelMagic)
    throw ModelFormatError("not a model file (bad magic)");
  const auto version = in.u16();
  if (version != kModelVersion)
    throw ModelFormatError("unsupported model version " + std::to_string(version) + " (expected " +
                           std::to_string(kModelVersion) + ")");

  TaggerModel m;
  {
    auto s = in.section("SYMS");
    const auto n = s.u32();
    for (std::uint32_t i = 0; i < n; ++i) {
      auto text = s.str();
      if (m.symbols_.intern(text).id != i) throw ModelFormatError("duplicate symbol '" + text + "'");
    }
    s.expect_done("symbol section");
  }
  {
    auto s = in.section("LEXI");
    m.lexicon_ = Lexicon::read(s, m.symbols_);
    s.expect_done("lexicon section");
  }
  {
    auto k = in.section("WGTK");
    m.known_weights_ = read_weights(k);
    k.expect_done("weight section");
    auto u = in.section("WGTU");
    m.unknown_weights_ = read_weights(u);
    u.expect_done("weight section");
  }
  {
    auto k = in.section("TREK");
    m.known_tree_ = IGTree::read(k);
    auto u = in.section("TREU");
    m.unknown_tree_ = IGTree::read(u);
  }
  {
    auto c = in.section("CONF");
    m.threshold_ = c.f64();
    m.numbers_to_unknown_ = c.u8() != 0;
    const auto n = c.u32();
    for (std::uint32_t i = 0; i < n; ++i) m.closed_class_.push_back(c.str());
    if (c.str() != kBoundary || c.str() != kUnknownAmbiguous)
      throw ModelFormatError("model uses unsupported reserved symbols");
    c.expect_done("config section");
  }
  in.expect_done("model file");

  m.boundary_ = m.symbols_.find(kBoundary);
  m.unknown_ambiguous_ = m.symbols_.find(kUnknownAmbiguous);
  if (m.boundary_.is_none() || m.unknown_ambiguous_.is_none())
    throw ModelFormatError("model lacks reserved symbols");
  check_tree(m.known_tree_, m.known_weights_, known_template().arity(), m.symbols_, "known-word");
  check_tree(m.unknown_tree_, m.unknown_weights_, unknown_template().arity(), m.symbols_, "unknown-word");
  return m;
}

void TaggerModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write model '" + path + "'");
  const auto bytes = serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing model '" + path + "'");
}

TaggerModel TaggerModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

}  // namespace mbt

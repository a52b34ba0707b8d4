#include "synth_corpus.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mbt::synth {

namespace {

using Rng = std::mt19937_64;
using Weighted = std::vector<std::pair<std::string, double>>;

// First-order tag transitions; "<s>" starts a sentence and "." ends it.
// Weights per row need not sum to one.
const std::map<std::string, Weighted>& transitions() {
  static const std::map<std::string, Weighted> t = {
      {"<s>", {{"DT", .25}, {"NNP", .15}, {"PRP", .15}, {"IN", .10}, {"JJ", .04}, {"NNS", .08}, {"RB", .05},
               {"CD", .03}, {"EX", .03}, {"PRP$", .05}, {"NN", .04}, {"CC", .03}, {"PDT", .01}, {"``", .02}, {"WRB", .01}, {"UH", .005}}},
      {"DT", {{"NN", .45}, {"JJ", .22}, {"NNS", .15}, {"NNP", .05}, {"CD", .03}, {"JJS", .03}, {"JJR", .02},
              {"VBG", .02}, {"RB", .03}, {"RBS", .01}}},
      {"PDT", {{"DT", 1.0}}},
      {"PRP$", {{"NN", .5}, {"JJ", .2}, {"NNS", .25}, {"NNP", .05}}},
      {"JJ", {{"NN", .45}, {"NNS", .30}, {"JJ", .06}, {",", .04}, {"CC", .04}, {"IN", .06}, {"TO", .03}, {".", .02}}},
      {"JJR", {{"IN", .4}, {"NN", .25}, {"NNS", .2}, {".", .1}, {"TO", .05}}},
      {"JJS", {{"NN", .6}, {"NNS", .3}, {"JJ", .1}}},
      {"NN", {{"IN", .25}, {".", .12}, {",", .10}, {"VBZ", .10}, {"VBD", .10}, {"NN", .10}, {"CC", .05}, {"MD", .05},
              {"POS", .04}, {"VBN", .03}, {"TO", .03}, {"WDT", .03}, {"RB", .02}, {"VBG", .02}, {"WP", .01}, {"''", .02}}},
      {"NNS", {{"IN", .22}, {".", .15}, {",", .10}, {"VBP", .15}, {"VBD", .12}, {"MD", .06}, {"CC", .05}, {"WDT", .04},
               {"VBN", .03}, {"TO", .03}, {"RB", .03}, {"POS", .02}, {"WRB", .01}}},
      {"NNP", {{"NNP", .30}, {",", .12}, {"VBD", .12}, {"VBZ", .10}, {"POS", .08}, {".", .08}, {"IN", .08}, {"CC", .04},
               {"MD", .04}, {"NN", .04}, {"NNPS", .02}}},
      {"NNPS", {{"VBP", .3}, {"VBD", .3}, {",", .2}, {".", .2}}},
      {"VB", {{"DT", .30}, {"IN", .12}, {"PRP", .06}, {"JJ", .06}, {"NNS", .10}, {"RB", .06}, {".", .06}, {"TO", .05},
              {"VBN", .06}, {"PRP$", .05}, {"RP", .05}, {"NN", .03}}},
      {"VBP", {{"DT", .25}, {"VBN", .12}, {"RB", .10}, {"VBG", .08}, {"IN", .10}, {"JJ", .08}, {"NNS", .08}, {"TO", .05},
               {"PRP", .04}, {"RP", .04}, {".", .06}}},
      {"VBD", {{"DT", .25}, {"IN", .14}, {"VBN", .10}, {"RB", .08}, {"PRP", .05}, {"JJ", .06}, {"NNS", .08}, {"TO", .06},
               {".", .06}, {"RP", .05}, {"PRP$", .04}, {"CD", .03}, {"$", .01}}},
      {"VBZ", {{"DT", .25}, {"VBN", .14}, {"VBG", .08}, {"RB", .10}, {"JJ", .10}, {"IN", .10}, {"NNS", .05}, {"TO", .05},
               {".", .05}, {"PRP$", .04}, {"RP", .04}}},
      {"VBG", {{"DT", .30}, {"IN", .18}, {"NNS", .15}, {"NN", .10}, {"PRP$", .07}, {".", .08}, {"RP", .05}, {"JJ", .07}}},
      {"VBN", {{"IN", .35}, {".", .12}, {"DT", .10}, {"TO", .12}, {"RB", .08}, {",", .06}, {"RP", .05}, {"NNS", .06},
               {"JJ", .06}}},
      {"RB", {{"VB", .08}, {"VBD", .12}, {"JJ", .20}, {"VBN", .10}, {".", .10}, {",", .08}, {"IN", .10}, {"RB", .06},
              {"VBP", .06}, {"VBZ", .05}, {"CD", .05}}},
      {"RBR", {{"JJ", .3}, {"IN", .3}, {".", .2}, {"RB", .2}}},
      {"RP", {{"DT", .40}, {"IN", .15}, {".", .20}, {"NNS", .10}, {"PRP$", .10}, {",", .05}}},
      {"IN", {{"DT", .38}, {"NNP", .12}, {"NN", .08}, {"NNS", .10}, {"PRP", .05}, {"CD", .08}, {"JJ", .06}, {"PRP$", .07},
              {"VBG", .04}, {"RB", .02}, {"$", .02}, {"FW", .005}}},
      {"PRP", {{"VBD", .35}, {"VBZ", .15}, {"VBP", .18}, {"MD", .18}, {"RB", .08}, {",", .03}, {".", .03}}},
      {"MD", {{"VB", .85}, {"RB", .15}}},
      {"CC", {{"DT", .25}, {"NN", .10}, {"NNS", .12}, {"JJ", .10}, {"VBD", .10}, {"PRP", .10}, {"NNP", .08}, {"VB", .05},
              {"RB", .05}, {"IN", .05}}},
      {"TO", {{"VB", .75}, {"DT", .15}, {"CD", .05}, {"NNP", .05}}},
      {"CD", {{"NNS", .45}, {"NN", .10}, {".", .10}, {",", .10}, {"IN", .12}, {"CD", .05}, {":", .03}, {"JJ", .05}}},
      {"WDT", {{"VBZ", .35}, {"VBD", .35}, {"VBP", .15}, {"MD", .15}}},
      {"POS", {{"NN", .55}, {"NNS", .25}, {"JJ", .15}, {"NNP", .05}}},
      {"EX", {{"VBZ", .6}, {"VBD", .3}, {"MD", .1}}},
      {",", {{"DT", .18}, {"PRP", .10}, {"CC", .15}, {"NNP", .08}, {"IN", .12}, {"RB", .08}, {"VBD", .08}, {"WDT", .06},
             {"NN", .05}, {"JJ", .05}, {"VBG", .05}, {"WP", .02}, {"WRB", .01}, {"''", .02}, {"``", .01}}},
      {":", {{"DT", .4}, {"NN", .2}, {"NNP", .2}, {"CD", .2}}},
      {"WP", {{"VBD", .4}, {"VBZ", .3}, {"MD", .2}, {"VBP", .1}}},
      {"WRB", {{"PRP", .4}, {"DT", .3}, {"NNP", .2}, {"JJ", .1}}},
      {"RBS", {{"JJ", .8}, {"RB", .2}}},
      {"$", {{"CD", 1.0}}},
      {"``", {{"DT", .3}, {"PRP", .2}, {"NNP", .2}, {"IN", .1}, {"NN", .1}, {"JJ", .1}}},
      {"''", {{"VBD", .4}, {",", .2}, {".", .4}}},
      {"UH", {{",", .7}, {".", .3}}},
      {"FW", {{"FW", .3}, {"NN", .2}, {"IN", .2}, {",", .15}, {".", .15}}},
  };
  return t;
}

// Function words, several of them shared between tags.
const std::map<std::string, Weighted>& closed_words() {
  static const std::map<std::string, Weighted> w = {
      {"DT", {{"the", .45}, {"a", .22}, {"an", .04}, {"this", .06}, {"that", .03}, {"these", .03}, {"some", .04},
              {"all", .03}, {"no", .03}, {"any", .03}, {"each", .02}, {"those", .02}}},
      {"PDT", {{"all", .6}, {"both", .3}, {"half", .1}}},
      {"PRP$", {{"his", .25}, {"its", .3}, {"their", .25}, {"her", .1}, {"our", .05}, {"my", .05}}},
      {"PRP", {{"he", .2}, {"it", .25}, {"they", .2}, {"she", .1}, {"we", .1}, {"i", .08}, {"you", .05}, {"her", .02}}},
      {"IN", {{"of", .22}, {"in", .18}, {"for", .09}, {"on", .06}, {"that", .06}, {"with", .07}, {"as", .06}, {"at", .05},
              {"by", .05}, {"from", .05}, {"about", .03}, {"than", .02}, {"after", .02}, {"into", .02}, {"over", .02},
              {"up", .01}}},
      {"RP", {{"up", .35}, {"out", .3}, {"off", .15}, {"down", .1}, {"over", .05}, {"about", .05}}},
      {"RBR", {{"more", .7}, {"less", .3}}},
      {"MD", {{"will", .3}, {"would", .2}, {"can", .15}, {"could", .1}, {"may", .1}, {"should", .1}, {"might", .05}}},
      {"CC", {{"and", .6}, {"but", .25}, {"or", .12}, {"nor", .03}}},
      {"TO", {{"to", 1.0}}},
      {"WDT", {{"which", .5}, {"that", .4}, {"what", .1}}},
      {"WP", {{"who", .6}, {"what", .4}}},
      {"WRB", {{"when", .4}, {"where", .2}, {"how", .25}, {"why", .15}}},
      {"RBS", {{"most", 1.0}}},
      {"$", {{"$", 1.0}}},
      {"``", {{"``", 1.0}}},
      {"''", {{"''", 1.0}}},
      {"UH", {{"oh", .5}, {"well", .3}, {"yes", .2}}},
      {"POS", {{"'s", 1.0}}},
      {"EX", {{"there", 1.0}}},
      {",", {{",", 1.0}}},
      {".", {{".", .9}, {"?", .05}, {"!", .05}}},
      {":", {{":", .5}, {";", .3}, {"--", .2}}},
  };
  return w;
}

const Weighted& closed_adverbs() {
  static const Weighted w = {{"not", .25}, {"also", .12}, {"very", .1}, {"only", .1}, {"now", .08}, {"up", .03},
                             {"as", .05}, {"about", .05}, {"so", .08}, {"still", .07}, {"more", .05}, {"out", .02}, {"well", .03}};
  return w;
}

const std::array<std::string, 14> kOnsets = {"b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "st"};
const std::array<std::string, 6> kVowels = {"a", "e", "i", "o", "u", "ea"};
const std::array<std::string, 8> kCodas = {"", "", "n", "r", "t", "m", "ck", "nd"};
const std::array<std::string, 6> kAdjSuffix = {"al", "ous", "ive", "ic", "ful", ""};

class Picker {
 public:
  Picker() = default;
  explicit Picker(const Weighted& items) : items_(&items) {
    std::vector<double> w;
    for (const auto& [s, p] : items) w.push_back(p);
    dist_ = std::discrete_distribution<std::size_t>(w.begin(), w.end());
  }
  const std::string& operator()(Rng& rng) { return (*items_)[dist_(rng)].first; }

 private:
  const Weighted* items_ = nullptr;
  std::discrete_distribution<std::size_t> dist_;
};

/// Zipf-distributed pool of invented lemmas.
class Lemmas {
 public:
  Lemmas(std::size_t count, double exponent, Rng& rng, std::set<std::string>& taken, int min_syllables) {
    std::uniform_int_distribution<int> syl(min_syllables, 3);
    std::uniform_int_distribution<std::size_t> on(0, kOnsets.size() - 1), vo(0, kVowels.size() - 1),
        co(0, kCodas.size() - 1);
    while (words_.size() < count) {
      std::string w;
      for (int s = syl(rng); s > 0; --s) w += kOnsets[on(rng)] + kVowels[vo(rng)] + kCodas[co(rng)];
      if (taken.insert(w).second) words_.push_back(w);
    }
    std::vector<double> weights;
    for (std::size_t r = 1; r <= count; ++r) weights.push_back(1.0 / std::pow(static_cast<double>(r), exponent));
    dist_ = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
  }

  std::size_t draw_index(Rng& rng) { return dist_(rng); }
  const std::string& draw(Rng& rng) { return words_[dist_(rng)]; }
  std::vector<std::string>& words() { return words_; }

 private:
  std::vector<std::string> words_;
  std::discrete_distribution<std::size_t> dist_;
};

std::string capitalize(std::string w) {
  if (!w.empty()) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
  return w;
}

std::string number(Rng& rng) {
  const int k = std::uniform_int_distribution<int>(0, 9)(rng);
  if (k < 5) return std::to_string(std::uniform_int_distribution<int>(1, 99)(rng));
  if (k < 7) return std::to_string(std::uniform_int_distribution<int>(1900, 2000)(rng));
  if (k < 9) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%d,%03d", std::uniform_int_distribution<int>(1, 999)(rng),
                  std::uniform_int_distribution<int>(0, 999)(rng));
    return buf;
  }
  return std::to_string(std::uniform_int_distribution<int>(0, 99)(rng)) + "." +
         std::to_string(std::uniform_int_distribution<int>(1, 9)(rng));
}

}  // namespace

Corpus zipf_corpus(const ZipfCorpusOptions& o) {
  Rng rng(o.seed);
  std::set<std::string> taken;
  for (const auto& [tag, words] : closed_words())
    for (const auto& [w, p] : words) taken.insert(w);
  for (const auto& [w, p] : closed_adverbs()) taken.insert(w);

  Lemmas nouns(o.noun_lemmas, o.zipf_exponent, rng, taken, 1);
  Lemmas verbs(o.verb_lemmas, o.zipf_exponent, rng, taken, 1);
  Lemmas adjectives(o.adjective_lemmas, o.zipf_exponent, rng, taken, 2);
  Lemmas names(o.names, o.zipf_exponent, rng, taken, 2);

  // Shared forms: some verbs are also nouns, some adjectives also nouns.
  std::bernoulli_distribution verb_is_noun(o.verb_noun_overlap);
  for (std::size_t i = 0; i < verbs.words().size() && i < nouns.words().size(); ++i)
    if (verb_is_noun(rng)) verbs.words()[i] = nouns.words()[nouns.words().size() / 2 > i ? 2 * i : i];
  std::bernoulli_distribution adjective_is_noun(o.verb_noun_overlap / 3.0);
  for (std::size_t i = 0; i < adjectives.words().size() && 3 * i + 1 < nouns.words().size(); ++i)
    if (adjective_is_noun(rng)) adjectives.words()[i] = nouns.words()[3 * i + 1];
  // Irregular verbs take "-en" participles.
  std::vector<char> irregular(verbs.words().size());
  std::bernoulli_distribution irregular_draw(0.15);
  for (auto& f : irregular) f = irregular_draw(rng);

  // Second-order dependency: the tag two back rescales each first-order
  // transition by a fixed factor in [1/3, 3].
  std::map<std::string, std::size_t> tag_ids;
  for (const auto& [from, outs] : transitions()) tag_ids.emplace(from, tag_ids.size());
  tag_ids.emplace(".", tag_ids.size());
  std::uniform_real_distribution<double> log_factor(-std::log(3.0), std::log(3.0));
  std::vector<double> factor(tag_ids.size() * tag_ids.size());
  for (auto& f : factor) f = std::exp(log_factor(rng));
  std::map<std::pair<std::string, std::string>, std::discrete_distribution<std::size_t>> next;
  for (const auto& [prev2, id2] : tag_ids) {
    for (const auto& [prev1, outs] : transitions()) {
      std::vector<double> w;
      for (const auto& [to, p] : outs) w.push_back(p * factor[id2 * tag_ids.size() + tag_ids.at(to)]);
      next.emplace(std::make_pair(prev2, prev1), std::discrete_distribution<std::size_t>(w.begin(), w.end()));
    }
  }

  std::map<std::string, Picker> closed;
  for (const auto& [tag, words] : closed_words()) closed.emplace(tag, Picker(words));
  Picker adverb(closed_adverbs());
  std::bernoulli_distribution coin(0.5), rare(0.05), seldom(0.03), sometimes(0.3);

  auto adjective = [&](Rng& r) {
    const auto& lemma = adjectives.draw(r);
    return lemma + kAdjSuffix[std::hash<std::string>{}(lemma) % kAdjSuffix.size()];
  };
  // Conversion: an open-class slot occasionally borrows a lemma from
  // another word class.
  std::bernoulli_distribution convert(o.conversion);
  auto noun = [&] { return convert(rng) ? (coin(rng) ? adjective(rng) : verbs.draw(rng)) : nouns.draw(rng); };
  auto verb = [&] { return convert(rng) ? nouns.draw(rng) : verbs.draw(rng); };
  auto emit = [&](const std::string& tag) -> std::string {
    if (tag == "VBZ" && rare(rng)) return "'s";
    if (auto it = closed.find(tag); it != closed.end()) return it->second(rng);
    if (tag == "NN") return seldom(rng) ? verbs.draw(rng) + "ing" : noun();
    if (tag == "NNS") return noun() + "s";
    if (tag == "NNP") return capitalize(names.draw(rng));
    if (tag == "NNPS") return capitalize(names.draw(rng)) + "s";
    if (tag == "FW") return names.draw(rng);
    if (tag == "VB" || tag == "VBP") return verb();
    if (tag == "VBZ") return verb() + "s";
    if (tag == "VBD") return verb() + "ed";
    if (tag == "VBN") {
      if (convert(rng)) return nouns.draw(rng) + "ed";
      const auto i = verbs.draw_index(rng);
      return verbs.words()[i] + (irregular[i] ? "en" : "ed");
    }
    if (tag == "VBG") return verb() + "ing";
    if (tag == "JJ") {
      if (rare(rng)) return verbs.draw(rng) + "ed";
      return convert(rng) ? nouns.draw(rng) : adjective(rng);
    }
    if (tag == "JJR") return sometimes(rng) ? std::string("more") : adjectives.draw(rng) + "er";
    if (tag == "JJS") return sometimes(rng) ? std::string("most") : adjectives.draw(rng) + "est";
    if (tag == "RB") return coin(rng) ? adjective(rng) + "ly" : adverb(rng);
    if (tag == "CD") return number(rng);
    return tag;
  };

  Corpus corpus;
  while (corpus.token_count() < o.tokens) {
    Sentence s;
    std::string prev2 = "<s>", prev1 = "<s>";
    while (true) {
      const auto& outs = transitions().at(prev1);
      std::string to = s.tokens.size() >= 40 ? "." : outs[next.at({prev2, prev1})(rng)].first;
      s.tokens.push_back({emit(to), to});
      if (to == ".") break;
      prev2 = prev1;
      prev1 = to;
    }
    corpus.add(std::move(s));
  }
  return corpus;
}

}  // namespace mbt::synth

#include "mbt/eval.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <thread>

#include "mbt/cases.hpp"
#include "mbt/error.hpp"
#include "mbt/ib.hpp"
#include "mbt/igtree.hpp"
#include "mbt/lexicon.hpp"
#include "mbt/metrics.hpp"

namespace mbt {

namespace {

using Clock = std::chrono::steady_clock;

volatile std::uint64_t g_sink = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

/// Runs task(i) for i in [0, n) on up to `jobs` threads.
template <class Task>
void parallel_for(std::size_t n, unsigned jobs, Task&& task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n && !failed;) {
        try {
          task(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::pair<double, double> mean_stddev(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

double EvalReport::accuracy_total() const noexcept { return ratio(correct(), tokens()); }
double EvalReport::accuracy_known() const noexcept { return ratio(known_correct, known_tokens); }
double EvalReport::accuracy_unknown() const noexcept { return ratio(unknown_correct, unknown_tokens); }
double EvalReport::unknown_fraction() const noexcept { return ratio(unknown_tokens, tokens()); }
double EvalReport::words_per_second() const noexcept {
  return seconds > 0.0 ? static_cast<double>(tokens()) / seconds : 0.0;
}

EvalReport evaluate(const TaggerModel& model, const Corpus& test, const EvalOptions& options) {
  if (test.empty()) throw ParameterError("cannot evaluate on an empty test corpus");
  EvalReport r;
  const auto t0 = Clock::now();
  for (const auto& s : test.sentences()) {
    const auto words = s.words();
    const auto gold = s.tags();
    const auto tagged = options.gold_left_context ? model.annotate(words, gold) : model.annotate(words);
    for (std::size_t i = 0; i < tagged.size(); ++i) {
      const bool ok = model.symbols().find(gold[i]) == tagged[i].tag;
      if (tagged[i].route == Route::Known) {
        ++r.known_tokens;
        r.known_correct += ok;
      } else {
        ++r.unknown_tokens;
        r.unknown_correct += ok;
      }
    }
  }
  r.seconds = seconds_since(t0);
  r.model_bytes = model.serialize().size();
  return r;
}

void write_report(std::ostream& out, const EvalReport& r) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::fixed << std::setprecision(1);
  out << "\tAccuracy\tPercentage\n";
  out << "Known\t" << 100.0 * r.accuracy_known() << '\t' << 100.0 * (1.0 - r.unknown_fraction()) << '\n';
  out << "Unknown\t" << 100.0 * r.accuracy_unknown() << '\t' << 100.0 * r.unknown_fraction() << '\n';
  out << "Total\t" << 100.0 * r.accuracy_total() << '\t' << 100.0 << '\n';
  out.flags(flags);
  out.precision(prec);
}

CvResult cross_validate(const Corpus& corpus, const CvOptions& options) {
  auto folds = cv_folds(corpus, options.folds, options.seed);
  CvResult result;
  result.folds.resize(folds.size());
  parallel_for(folds.size(), options.jobs, [&](std::size_t i) {
    const auto model = TaggerModel::train(folds[i].train, options.config);
    result.folds[i] = evaluate(model, folds[i].test, options.eval);
  });
  std::vector<double> acc;
  for (const auto& f : result.folds) acc.push_back(f.accuracy_total());
  std::tie(result.mean, result.stddev) = mean_stddev(acc);
  return result;
}

std::vector<LearningCurvePoint> learning_curve(const Corpus& corpus, const std::vector<std::size_t>& sizes,
                                               const CvOptions& options) {
  if (sizes.empty()) throw ParameterError("learning curve needs at least one size");
  for (auto s : sizes) {
    if (s == 0 || s > corpus.token_count())
      throw ParameterError("learning-curve size " + std::to_string(s) + " outside (0, corpus size]");
  }
  std::vector<LearningCurvePoint> out;
  for (auto s : sizes) {
    const auto prefix = corpus.prefix_by_tokens(s);
    const auto cv = cross_validate(prefix, options);
    out.push_back({prefix.token_count(), cv.mean, cv.stddev});
  }
  return out;
}

void write_curve_tsv(std::ostream& out, const std::vector<LearningCurvePoint>& points) {
  const auto prec = out.precision(6);
  out << "size\tmean\tstddev\n";
  for (const auto& p : points) out << p.train_size << '\t' << p.mean_accuracy << '\t' << p.stddev << '\n';
  out.precision(prec);
}

Algorithm parse_algorithm(std::string_view id) {
  if (id == "ib1") return Algorithm::IB1;
  if (id == "ib1ig") return Algorithm::IB1IG;
  if (id == "igtree") return Algorithm::IGTree;
  throw ParameterError("unknown algorithm '" + std::string(id) + "'");
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::IB1:
      return "ib1";
    case Algorithm::IB1IG:
      return "ib1ig";
    case Algorithm::IGTree:
      return "igtree";
  }
  return "?";
}

std::vector<BenchRow> compare_algorithms(const Corpus& train, const Corpus& test,
                                         const std::vector<Algorithm>& algorithms, const TaggerConfig& config) {
  if (algorithms.empty()) throw ParameterError("no algorithms to compare");
  if (train.empty() || test.empty()) throw ParameterError("comparison needs non-empty train and test corpora");

  SymbolTable symbols;
  symbols.intern(kBoundary);
  symbols.intern(kUnknownAmbiguous);
  auto t0 = Clock::now();
  const auto lexicon = build_lexicon(train, config.threshold, symbols);
  ExtractionOptions options{config.numbers_to_unknown,
                            config.closed_class ? *config.closed_class : default_closed_class(train.tagset())};
  const auto base = extract_known_cases(train, lexicon, symbols, options);
  const double extract_s = seconds_since(t0);
  if (base.empty()) throw ParameterError("training corpus yields no known-word cases");

  t0 = Clock::now();
  const auto weights = information_gains(base);
  const double gains_s = seconds_since(t0);
  t0 = Clock::now();
  const auto tree = IGTree::build(base, weights, symbols).pruned();
  const double tree_s = seconds_since(t0);

  std::vector<Case> queries;
  for (const auto& s : test.sentences()) {
    auto cs = known_cases(s, lexicon, symbols, options);
    queries.insert(queries.end(), std::make_move_iterator(cs.begin()), std::make_move_iterator(cs.end()));
  }
  if (queries.empty()) throw ParameterError("test corpus has no known-word cases");

  const std::uint64_t expanded = base.total_cases() * (base.arity() + 1) * sizeof(std::uint32_t);
  std::vector<BenchRow> rows;
  for (auto algo : algorithms) {
    auto classify = [&](const Case& q) -> Symbol {
      switch (algo) {
        case Algorithm::IB1:
          return classify_ib1(base, symbols, q.features);
        case Algorithm::IB1IG:
          return classify_ib1ig(base, weights, symbols, q.features);
        case Algorithm::IGTree:
          return tree.classify(q.features);
      }
      return Symbol::none();
    };
    // Warm-up on a short prefix, discarded.
    const std::size_t warm = std::min<std::size_t>(queries.size(), 200);
    std::uint64_t sink = 0;
    for (std::size_t i = 0; i < warm; ++i) sink += classify(queries[i]).id;
    g_sink = sink;

    BenchRow row;
    row.algorithm = algo;
    row.test_cases = queries.size();
    t0 = Clock::now();
    for (const auto& q : queries) row.correct += (classify(q) == q.target);
    const double query_s = seconds_since(t0);
    row.accuracy = ratio(row.correct, row.test_cases);
    row.words_per_second = query_s > 0.0 ? static_cast<double>(queries.size()) / query_s : 0.0;
    switch (algo) {
      case Algorithm::IB1:
        row.train_seconds = extract_s;
        row.memory_bytes = expanded;
        break;
      case Algorithm::IB1IG:
        row.train_seconds = extract_s + gains_s;
        row.memory_bytes = expanded;
        break;
      case Algorithm::IGTree:
        row.train_seconds = extract_s + gains_s + tree_s;
        row.memory_bytes = tree.stats().serialized_bytes;
        break;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<BenchRow> bench(const Corpus& corpus, const std::vector<Algorithm>& algorithms, std::uint64_t seed,
                            const TaggerConfig& config) {
  auto [train, test] = split(corpus, 0.1, seed);
  return compare_algorithms(train, test, algorithms, config);
}

void write_bench_tsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  const auto prec = out.precision(6);
  out << "algo\taccuracy\ttrain_s\twords_per_s\tmem_bytes\n";
  for (const auto& r : rows) {
    out << algorithm_name(r.algorithm) << '\t' << r.accuracy << '\t' << r.train_seconds << '\t'
        << r.words_per_second << '\t' << r.memory_bytes << '\n';
  }
  out.precision(prec);
}

}  // namespace mbt

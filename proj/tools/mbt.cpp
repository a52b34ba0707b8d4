// mbt: generate, run and evaluate memory-based part-of-speech taggers.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 model format error,
// 4 I/O error.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mbt/corpus.hpp"
#include "mbt/error.hpp"
#include "mbt/eval.hpp"
#include "mbt/metrics.hpp"
#include "mbt/tagger.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 2, kModelFormat = 3, kIo = 4 };

struct Options {
  std::string corpus;
  std::string model;
  std::string train;
  std::string input;
  std::string output;
  std::string closed_class;
  std::string gains;
  std::string format = "slash";
  std::string algorithm = "igtree";
  std::string algos = "ib1,ib1ig,igtree";
  std::string sizes;
  double threshold = 0.10;
  std::uint64_t seed = 0;
  std::size_t folds = 0;
  unsigned jobs = 1;
  bool stats = false;
  bool explain = false;
  bool gold_left_context = false;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw mbt::ParameterError("not a count: '" + s + "'");
  }
  if (pos != s.size()) throw mbt::ParameterError("not a count: '" + s + "'");
  return static_cast<std::size_t>(v);
}

/// "10000,20000,40000" or "start:stop:step" (inclusive).
std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> out;
  if (spec.find(':') != std::string::npos) {
    auto parts = split_list(spec, ':');
    if (parts.size() != 3) throw mbt::ParameterError("size range must be start:stop:step");
    const auto start = parse_count(parts[0]), stop = parse_count(parts[1]), step = parse_count(parts[2]);
    if (step == 0 || start == 0 || start > stop) throw mbt::ParameterError("bad size range '" + spec + "'");
    for (auto s = start; s <= stop; s += step) out.push_back(s);
  } else {
    for (const auto& item : split_list(spec, ',')) out.push_back(parse_count(item));
  }
  return out;
}

mbt::TaggerConfig make_config(const Options& o) {
  mbt::TaggerConfig config;
  config.threshold = o.threshold;
  if (!o.closed_class.empty()) {
    std::ifstream in(o.closed_class);
    if (!in) throw mbt::IoError("cannot open closed-class list '" + o.closed_class + "'");
    std::vector<std::string> tags;
    for (std::string tag; in >> tag;) tags.push_back(tag);
    config.closed_class = std::move(tags);
  }
  return config;
}

mbt::Corpus load_corpus(const std::string& path, const Options& o) {
  return mbt::read_corpus_file(path, mbt::parse_corpus_format(o.format));
}

/// Runs `body` with `out` bound to the --output file, or stdout.
template <class Body>
void with_output(const std::string& path, Body&& body) {
  if (path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw mbt::IoError("cannot write '" + path + "'");
  body(out);
  if (!out) throw mbt::IoError("failed writing '" + path + "'");
}

void print_tree_summary(std::ostream& out, const char* name, const mbt::IGTree& tree) {
  const auto s = tree.stats();
  out << name << " tree\t" << s.nodes << " nodes, " << s.leaves << " leaves, depth " << s.depth() << ", "
      << s.serialized_bytes << " bytes (" << std::fixed << std::setprecision(1) << 100.0 * s.compression_ratio
      << "% of " << s.expanded_bytes << " expanded bytes, " << tree.trained_cases() << " cases)\n";
  out.unsetf(std::ios::fixed);
}

int cmd_train(const Options& o) {
  const auto corpus = load_corpus(o.corpus, o);
  const auto model = mbt::TaggerModel::train(corpus, make_config(o));
  model.save(o.model);
  const auto& lex = model.lexicon();
  std::cout << "sentences\t" << corpus.size() << "\n";
  std::cout << "tokens\t" << corpus.token_count() << "\n";
  std::cout << "word types\t" << lex.type_count() << ", " << lex.ambiguous_type_count() << " ("
            << std::llround(100.0 * lex.ambiguous_type_fraction()) << "%) of which are ambiguous\n";
  std::cout << "ambiguous tokens\t" << std::llround(100.0 * lex.ambiguous_token_fraction()) << "%\n";
  std::cout << "tags\t" << corpus.tagset().size() << " expanded to " << lex.ambiguous_tagset().size()
            << " (possibly ambiguous) tags\n";
  print_tree_summary(std::cout, "known-word", model.known_tree());
  print_tree_summary(std::cout, "unknown-word", model.unknown_tree());
  std::cout << "model\t" << o.model << "\n";
  return kOk;
}

int cmd_tag(const Options& o) {
  const auto model = mbt::TaggerModel::load(o.model);
  std::vector<std::vector<std::string>> sentences;
  if (o.input.empty() || o.input == "-") {
    sentences = mbt::read_raw_sentences(std::cin);
  } else {
    std::ifstream in(o.input);
    if (!in) throw mbt::IoError("cannot open input '" + o.input + "'");
    sentences = mbt::read_raw_sentences(in);
  }

  std::size_t words = 0;
  const auto t0 = std::chrono::steady_clock::now();
  with_output(o.output, [&](std::ostream& out) {
    for (const auto& words_in_line : sentences) {
      if (words_in_line.empty()) {
        out << '\n';
        continue;
      }
      const auto tags = model.tag_words(words_in_line);
      for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i) out << ' ';
        out << words_in_line[i] << '/' << tags[i];
      }
      out << '\n';
      words += tags.size();
      if (o.explain) {
        for (std::size_t i = 0; i < words_in_line.size(); ++i) {
          const auto e = model.explain(words_in_line, i);
          std::cerr << e.word << '\t' << (e.route == mbt::Route::Known ? "known" : "unknown") << '\t';
          for (const auto& step : e.steps) {
            std::cerr << step.slot << '=' << (step.matched ? step.value : "MISS(" + step.value + ")") << '['
                      << step.node_default << "] ";
          }
          std::cerr << (e.ended_at_leaf ? "leaf" : "default") << " -> " << e.tag << '\n';
        }
      }
    }
  });
  if (o.stats) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "tagged " << words << " words in " << s << " s (" << (s > 0 ? words / s : 0.0)
              << " words/s)\n";
  }
  return kOk;
}

int cmd_eval(const Options& o) {
  const auto test = load_corpus(o.corpus, o);
  const auto config = make_config(o);
  const auto algorithm = mbt::parse_algorithm(o.algorithm);

  if (o.folds > 0) {
    if (algorithm != mbt::Algorithm::IGTree) throw mbt::ParameterError("--folds supports only igtree");
    mbt::CvOptions cv;
    cv.folds = o.folds;
    cv.seed = o.seed;
    cv.config = config;
    cv.eval.gold_left_context = o.gold_left_context;
    cv.jobs = o.jobs;
    const auto r = mbt::cross_validate(test, cv);
    with_output(o.output, [&](std::ostream& out) {
      out << "fold\taccuracy\tknown\tunknown\tunknown_fraction\n";
      for (std::size_t i = 0; i < r.folds.size(); ++i) {
        const auto& f = r.folds[i];
        out << i << '\t' << f.accuracy_total() << '\t' << f.accuracy_known() << '\t' << f.accuracy_unknown()
            << '\t' << f.unknown_fraction() << '\n';
      }
      out << "mean\t" << r.mean << "\nstddev\t" << r.stddev << '\n';
    });
    return kOk;
  }

  if (algorithm != mbt::Algorithm::IGTree) {
    if (o.train.empty()) throw mbt::ParameterError("--algorithm " + o.algorithm + " needs --train");
    const auto train = load_corpus(o.train, o);
    const auto rows = mbt::compare_algorithms(train, test, {algorithm}, config);
    with_output(o.output, [&](std::ostream& out) { mbt::write_bench_tsv(out, rows); });
    return kOk;
  }

  if (o.model.empty() == o.train.empty()) throw mbt::ParameterError("eval needs exactly one of --model or --train");
  const auto model = o.model.empty() ? mbt::TaggerModel::train(load_corpus(o.train, o), config)
                                     : mbt::TaggerModel::load(o.model);
  mbt::EvalOptions eo;
  eo.gold_left_context = o.gold_left_context;
  const auto report = mbt::evaluate(model, test, eo);
  with_output(o.output, [&](std::ostream& out) {
    mbt::write_report(out, report);
    out << "tokens\t" << report.tokens() << "\nwords_per_s\t" << report.words_per_second() << '\n';
  });
  if (!o.gains.empty()) {
    with_output(o.gains, [&](std::ostream& out) { mbt::write_gains_tsv(out, model.known_weights()); });
  }
  return kOk;
}

int cmd_curve(const Options& o) {
  const auto corpus = load_corpus(o.corpus, o);
  mbt::CvOptions cv;
  cv.folds = o.folds > 0 ? o.folds : 10;
  cv.seed = o.seed;
  cv.config = make_config(o);
  cv.eval.gold_left_context = o.gold_left_context;
  cv.jobs = o.jobs;
  const auto points = mbt::learning_curve(corpus, parse_sizes(o.sizes), cv);
  with_output(o.output, [&](std::ostream& out) { mbt::write_curve_tsv(out, points); });
  return kOk;
}

int cmd_bench(const Options& o) {
  const auto corpus = load_corpus(o.corpus, o);
  std::vector<mbt::Algorithm> algos;
  for (const auto& id : split_list(o.algos, ',')) algos.push_back(mbt::parse_algorithm(id));
  const auto rows = mbt::bench(corpus, algos, o.seed, make_config(o));
  with_output(o.output, [&](std::ostream& out) { mbt::write_bench_tsv(out, rows); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Memory-based part-of-speech tagger-generator"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
    cmd->add_option("--format", o.format, "Corpus format")->check(CLI::IsMember({"slash"}))->capture_default_str();
  };
  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--threshold", o.threshold, "Minimum tag share kept in the lexicon")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--closed-class", o.closed_class, "File listing closed-class tags")->check(CLI::ExistingFile);
  };

  auto* train = app.add_subcommand("train", "Generate a tagger from a tagged corpus");
  train->add_option("corpus", o.corpus, "Tagged training corpus")->required()->check(CLI::ExistingFile);
  train->add_option("--model", o.model, "Model file to write")->required();
  add_common(train);
  add_config(train);

  auto* tag = app.add_subcommand("tag", "Tag raw sentences, one per line");
  tag->add_option("input", o.input, "Raw text (default: stdin)");
  tag->add_option("--model", o.model, "Model file")->required()->check(CLI::ExistingFile);
  tag->add_option("--output", o.output, "Output file (default: stdout)");
  tag->add_flag("--stats", o.stats, "Report tagging throughput on stderr");
  tag->add_flag("--explain", o.explain, "Print the tree path of every word on stderr");

  auto* eval = app.add_subcommand("eval", "Measure accuracy on a tagged test corpus");
  eval->add_option("corpus", o.corpus, "Tagged test corpus (or the corpus to cross-validate)")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--model", o.model, "Model file")->check(CLI::ExistingFile);
  eval->add_option("--train", o.train, "Train on this corpus instead of loading a model")->check(CLI::ExistingFile);
  eval->add_option("--algorithm", o.algorithm, "igtree, ib1 or ib1ig")
      ->check(CLI::IsMember({"igtree", "ib1", "ib1ig"}))
      ->capture_default_str();
  eval->add_option("--folds", o.folds, "Cross-validate the corpus with this many folds")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  eval->add_option("--gains", o.gains, "Write known-word feature gains as TSV");
  eval->add_option("--output", o.output, "Output file (default: stdout)");
  eval->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  eval->add_flag("--gold-left-context", o.gold_left_context, "Use gold tags as left context");
  add_common(eval);
  add_config(eval);

  auto* curve = app.add_subcommand("curve", "Cross-validated learning curve");
  curve->add_option("corpus", o.corpus, "Tagged corpus")->required()->check(CLI::ExistingFile);
  curve->add_option("--sizes", o.sizes, "Token counts: a,b,c or start:stop:step")->required();
  curve->add_option("--folds", o.folds, "Folds per point (default 10)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  curve->add_option("--output", o.output, "TSV file (default: stdout)");
  curve->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  curve->add_flag("--gold-left-context", o.gold_left_context, "Use gold tags as left context");
  add_common(curve);
  add_config(curve);

  auto* bench = app.add_subcommand("bench", "Compare ib1, ib1ig and igtree on known words");
  bench->add_option("corpus", o.corpus, "Tagged corpus, split 90/10")->required()->check(CLI::ExistingFile);
  bench->add_option("--algos", o.algos, "Comma-separated algorithms")->capture_default_str();
  bench->add_option("--output", o.output, "TSV file (default: stdout)");
  bench->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(bench);
  add_config(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*train) return cmd_train(o);
    if (*tag) return cmd_tag(o);
    if (*eval) return cmd_eval(o);
    if (*curve) return cmd_curve(o);
    if (*bench) return cmd_bench(o);
  } catch (const mbt::ModelFormatError& e) {
    std::cerr << "mbt: model format error: " << e.what() << '\n';
    return kModelFormat;
  } catch (const mbt::IoError& e) {
    std::cerr << "mbt: " << e.what() << '\n';
    return kIo;
  } catch (const mbt::Error& e) {
    std::cerr << "mbt: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

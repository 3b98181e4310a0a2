#include "lextopic/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <numeric>
#include <ostream>

#include "CLI11.hpp"
#include "lextopic/analyze.h"
#include "lextopic/corpus.h"
#include "lextopic/error.h"
#include "lextopic/lda.h"
#include "lextopic/preprocess.h"
#include "lextopic/vectorize.h"

namespace lextopic::cli {
namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cli", "cannot write " + path.string());
  return out;
}

fs::path ensure_out_dir(const RunConfig& config) {
  const fs::path dir(config.out);
  fs::create_directories(dir);
  return dir;
}

Corpus load_input_corpus(const RunConfig& config) {
  if (config.corpus.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "cli", "no corpus given (--corpus)");
  }
  if (!fs::exists(config.corpus)) {
    throw Error(ErrorCode::kIo, "cli", "corpus not found: " + config.corpus);
  }
  return load_corpus(config.corpus, parse_corpus_format(config.format));
}

// Everything from the corpus file up to the matrix the sampler consumes.
struct Prepared {
  Corpus corpus;
  PreprocessedCorpus docs;
  Vocabulary vocab;
  DocTermMatrix counts;
  DocTermMatrix sampler_input;
};

Prepared prepare(const RunConfig& config, std::ostream& log) {
  Prepared p;
  p.corpus = load_input_corpus(config);
  Corpus modeled = config.filter_type == "all"
                       ? p.corpus
                       : filter_by_type(p.corpus, parse_law_type(config.filter_type));
  log << "records: " << p.corpus.size() << ", modeled (" << config.filter_type
      << "): " << modeled.size() << '\n';

  const PreprocessConfig preprocess = config.preprocess_config();
  p.docs = preprocess_corpus(modeled, preprocess);
  for (const std::string& id : p.docs.dropped_ids) {
    log << "warning: preprocess: EmptyDocument(" << id << ") dropped\n";
  }
  if (p.docs.documents.empty()) {
    throw Error(ErrorCode::kEmptyMatrix, "cli", "no documents left after preprocessing");
  }

  p.vocab = build_vocabulary(p.docs.documents, config.vectorize.min_df,
                             config.vectorize.max_df_ratio);
  p.counts = count_matrix(p.docs.documents, p.vocab);
  if (parse_input_mode(config.lda.mode) == InputMode::kTfidfPseudo) {
    p.sampler_input = to_pseudo_counts(tfidf(p.counts, parse_norm(config.vectorize.norm)),
                                       config.vectorize.pseudo_scale);
  } else {
    p.sampler_input = p.counts;
  }
  log << "documents: " << p.docs.documents.size() << ", vocabulary: " << p.vocab.size()
      << ", tokens: " << p.sampler_input.total() << '\n';
  return p;
}

std::map<std::string, std::string> pipeline_metadata(const RunConfig& c) {
  return {
      {"filter_type", c.filter_type},
      {"stopwords", c.preprocess.stopwords},
      {"lemma_rules", c.preprocess.lemma_rules},
      {"min_token_length", std::to_string(c.preprocess.min_token_length)},
      {"min_df", std::to_string(c.vectorize.min_df)},
      {"max_df_ratio", format_real(c.vectorize.max_df_ratio)},
      {"norm", c.vectorize.norm},
      {"pseudo_scale", format_real(c.vectorize.pseudo_scale)},
  };
}

void write_config_echo(const RunConfig& config, const fs::path& dir) {
  auto out = open_output(dir / "config.json");
  out << config.to_json().dump(2) << '\n';
}

// Binds a flag to a RunConfig field; only flags actually given override
// the config file.
class FlagSet {
 public:
  template <typename T>
  void add(CLI::App* app, const std::string& name, const std::string& help,
           std::function<void(RunConfig&, const T&)> apply) {
    auto value = std::make_shared<T>();
    CLI::Option* option = app->add_option(name, *value, help);
    appliers_.push_back([option, value, apply](RunConfig& c) {
      if (option->count() > 0) apply(c, *value);
    });
  }

  void apply(RunConfig& config) const {
    for (const auto& f : appliers_) f(config);
  }

 private:
  std::vector<std::function<void(RunConfig&)>> appliers_;
};

void add_pipeline_flags(CLI::App* app, FlagSet& flags) {
  flags.add<std::string>(app, "--corpus", "Corpus file",
                         [](RunConfig& c, const std::string& v) { c.corpus = v; });
  flags.add<std::string>(app, "--format", "Corpus format: jsonl or csv",
                         [](RunConfig& c, const std::string& v) { c.format = v; });
  flags.add<std::string>(app, "--filter-type", "Law type to model, or 'all'",
                         [](RunConfig& c, const std::string& v) { c.filter_type = v; });
  flags.add<std::string>(app, "--stopwords", "Stopword list file",
                         [](RunConfig& c, const std::string& v) { c.preprocess.stopwords = v; });
  flags.add<std::string>(app, "--lemma-rules", "Lemma rules file",
                         [](RunConfig& c, const std::string& v) { c.preprocess.lemma_rules = v; });
  flags.add<int>(app, "--min-token-length", "Shortest token kept",
                 [](RunConfig& c, const int& v) { c.preprocess.min_token_length = v; });
  flags.add<int>(app, "--min-df", "Minimum document frequency",
                 [](RunConfig& c, const int& v) { c.vectorize.min_df = v; });
  flags.add<double>(app, "--max-df-ratio", "Maximum document frequency ratio",
                    [](RunConfig& c, const double& v) { c.vectorize.max_df_ratio = v; });
  flags.add<std::string>(app, "--norm", "TF-IDF row norm: l2 or none",
                         [](RunConfig& c, const std::string& v) { c.vectorize.norm = v; });
  flags.add<double>(app, "--pseudo-scale", "Scale for tfidf-pseudo counts",
                    [](RunConfig& c, const double& v) { c.vectorize.pseudo_scale = v; });
  flags.add<int>(app, "--topics", "Number of topics",
                 [](RunConfig& c, const int& v) { c.lda.topics = v; });
  flags.add<double>(app, "--alpha", "Document-topic prior (default 50/K)",
                    [](RunConfig& c, const double& v) { c.lda.alpha = v; });
  flags.add<double>(app, "--beta", "Topic-word prior",
                    [](RunConfig& c, const double& v) { c.lda.beta = v; });
  flags.add<int>(app, "--sweeps", "Gibbs sweeps",
                 [](RunConfig& c, const int& v) { c.lda.sweeps = v; });
  flags.add<int>(app, "--burn-in", "Sweeps discarded before averaging",
                 [](RunConfig& c, const int& v) { c.lda.burn_in = v; });
  flags.add<std::uint64_t>(app, "--seed", "Random seed",
                           [](RunConfig& c, const std::uint64_t& v) { c.lda.seed = v; });
  flags.add<std::string>(app, "--mode", "Sampler input: counts or tfidf-pseudo",
                         [](RunConfig& c, const std::string& v) { c.lda.mode = v; });
  flags.add<int>(app, "--chains", "Independent chains",
                 [](RunConfig& c, const int& v) { c.lda.chains = v; });
  flags.add<int>(app, "--top-m", "Top words per topic for coherence",
                 [](RunConfig& c, const int& v) { c.analyze.top_m = v; });
  flags.add<int>(app, "--top-words", "Words per topic in reports",
                 [](RunConfig& c, const int& v) { c.analyze.top_words = v; });
  flags.add<std::string>(app, "--normalization", "Trend normalization: per_topic or per_year",
                         [](RunConfig& c, const std::string& v) { c.analyze.normalization = v; });
  flags.add<std::string>(app, "--labels", "Topic label map file",
                         [](RunConfig& c, const std::string& v) { c.analyze.labels = v; });
  flags.add<std::string>(app, "--out", "Output directory",
                         [](RunConfig& c, const std::string& v) { c.out = v; });
}

RunConfig resolve_config(const std::string& config_path, const FlagSet& flags) {
  std::string path = config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("LEXTOPIC_CONFIG"); env != nullptr) path = env;
  }
  RunConfig config = path.empty() ? RunConfig{} : load_run_config(path);
  flags.apply(config);
  return config;
}

}  // namespace

void cmd_ingest(const RunConfig& config, std::ostream& log) {
  const Corpus corpus = load_input_corpus(config);
  const fs::path dir = ensure_out_dir(config);

  const TrendTable stats = type_counts_by_year(corpus);
  {
    auto out = open_output(dir / "stats.csv");
    out << "law_type";
    for (int year : stats.col_labels()) out << ',' << year;
    out << ",total\n";
    for (std::size_t r = 0; r < stats.rows(); ++r) {
      out << stats.row_labels()[r];
      for (std::size_t c = 0; c < stats.cols(); ++c) out << ',' << stats.count(r, c);
      out << ',' << stats.row_total(r) << '\n';
    }
  }
  {
    auto out = open_output(dir / "ratios.csv");
    out << "id,law_type,length_ratio\n";
    for (const LawRecord& r : corpus) {
      try {
        const double ratio = length_ratio(r);
        out << r.id << ',' << law_type_name(r.law_type) << ',' << format_real(ratio) << '\n';
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptyContent) throw;
        log << "warning: " << e.what() << " skipped in ratios.csv\n";
      }
    }
  }
  save_corpus(corpus, dir / "corpus.jsonl", CorpusFormat::kJsonl);

  log << "records: " << stats.total() << '\n';
  for (std::size_t r = 0; r < stats.rows(); ++r) {
    log << "  " << stats.row_labels()[r] << ": " << stats.row_total(r) << '\n';
  }
}

void cmd_fit(const RunConfig& config, std::ostream& log) {
  const LdaConfig lda = config.lda_config();
  const Prepared p = prepare(config, log);
  const fs::path dir = ensure_out_dir(config);
  write_config_echo(config, dir);

  std::vector<LdaModel> models = fit_chains(p.sampler_input, p.vocab, lda, config.lda.chains);
  for (std::size_t c = 0; c < models.size(); ++c) {
    LdaModel& model = models[c];
    model.metadata = pipeline_metadata(config);
    const std::string name =
        c == 0 ? "model.json" : "model_chain" + std::to_string(c) + ".json";
    save_model(model, dir / name);
    log << name << ": final log-likelihood " << format_real(model.log_likelihood.back())
        << ", perplexity " << format_real(perplexity(model, p.sampler_input)) << '\n';
  }
  {
    auto out = open_output(dir / "loglik.csv");
    out << "sweep,log_likelihood\n";
    const auto& trace = models.front().log_likelihood;
    for (std::size_t s = 0; s < trace.size(); ++s) {
      out << s + 1 << ',' << format_real(trace[s]) << '\n';
    }
  }
  {
    auto out = open_output(dir / "vocabulary.csv");
    write_vocabulary_csv(p.vocab, out);
  }
  {
    auto out = open_output(dir / "counts.csv");
    write_count_triplets(p.counts, p.vocab, out);
  }
  if (lda.input_mode == InputMode::kTfidfPseudo) {
    auto weights = open_output(dir / "tfidf.csv");
    write_tfidf_triplets(tfidf(p.counts, parse_norm(config.vectorize.norm)), p.vocab, weights);
    auto pseudo = open_output(dir / "pseudo_counts.csv");
    write_count_triplets(p.sampler_input, p.vocab, pseudo);
  }
}

void cmd_analyze(const RunConfig& config, const std::string& model_path, std::ostream& log) {
  const fs::path dir = ensure_out_dir(config);
  const LdaModel model = load_model(model_path.empty() ? dir / "model.json" : fs::path(model_path));
  const Prepared p = prepare(config, log);
  if (p.vocab.hash() != model.vocab.hash()) {
    throw Error(ErrorCode::kVocabularyMismatch, "analyze",
                "model vocabulary " + model.vocab.hash() + ", corpus vocabulary " +
                    p.vocab.hash());
  }

  const LabelMap labels =
      config.analyze.labels.empty() ? LabelMap{} : load_label_map(config.analyze.labels);
  const auto words = static_cast<std::size_t>(std::max(config.analyze.top_words, 1));
  const TrendNormalization normalization =
      parse_trend_normalization(config.analyze.normalization);
  {
    auto out = open_output(dir / "topics.json");
    write_topics_json(label_topics(model, labels, words), out);
  }
  {
    auto out = open_output(dir / "shares.csv");
    write_shares_csv(topic_shares(model, p.corpus), out);
  }
  {
    auto out = open_output(dir / "trends.csv");
    write_trends_csv(yearly_topic_percentages(model, p.corpus, normalization), normalization,
                     out);
  }
  for (std::size_t k = 0; k < model.num_topics; ++k) {
    auto out = open_output(dir / ("wordcloud_" + std::to_string(k) + ".csv"));
    write_wordcloud_csv(wordcloud_weights(model, k, words), out);
  }
  log << "analyzed " << model.num_docs << " documents over " << model.num_topics
      << " topics\n";
}

void cmd_sweep(const RunConfig& config, std::ostream& log) {
  std::vector<int> ks = config.k_list;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.empty()) throw Error(ErrorCode::kInvalidConfig, "cli", "empty K list");
  for (int k : ks) config.lda_config(k);  // validate before the expensive part

  const Prepared p = prepare(config, log);
  const fs::path dir = ensure_out_dir(config);
  write_config_echo(config, dir);
  auto out = open_output(dir / "sweep.csv");
  out << "K,mean_coherence,perplexity\n";
  for (int k : ks) {
    const LdaModel model = fit(p.sampler_input, p.vocab, config.lda_config(k));
    const std::vector<double> scores = coherence_umass(model, p.sampler_input, config.analyze.top_m);
    const double mean =
        std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
    const double perp = perplexity(model, p.sampler_input);
    out << k << ',' << format_real(mean) << ',' << format_real(perp) << '\n';
    log << "K=" << k << " coherence " << format_real(mean) << " perplexity "
        << format_real(perp) << '\n';
  }
}

void cmd_synth(const SynthConfig& config, const std::string& path, const std::string& format,
               std::ostream& log) {
  const SyntheticCorpus synthetic = generate_synthetic_corpus(config);
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  save_corpus(synthetic.corpus, target, parse_corpus_format(format));
  log << "wrote " << synthetic.corpus.size() << " records to " << path << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topic modeling toolkit for legal record corpora", "lextopic"};
  app.require_subcommand(1);

  struct Command {
    CLI::App* app;
    FlagSet flags;
    std::string config_path;
  };
  std::vector<std::unique_ptr<Command>> commands;
  const auto add_command = [&](const std::string& name, const std::string& help) {
    auto command = std::make_unique<Command>();
    command->app = app.add_subcommand(name, help);
    command->app->add_option("--config", command->config_path,
                             "JSON run config (default: $LEXTOPIC_CONFIG)");
    add_pipeline_flags(command->app, command->flags);
    commands.push_back(std::move(command));
    return commands.back().get();
  };
  Command* ingest = add_command("ingest", "Count records by type and year");
  Command* fit_cmd = add_command("fit", "Preprocess, vectorize and fit LDA");
  Command* analyze = add_command("analyze", "Topic shares, trends and word lists");
  Command* sweep = add_command("sweep", "Coherence and perplexity over a K grid");
  std::string model_path;
  analyze->app->add_option("--model", model_path, "Model file (default: <out>/model.json)");
  std::string k_list;
  sweep->app->add_option("--k-list", k_list, "Comma-separated topic counts");

  SynthConfig synth;
  std::string synth_out;
  std::string synth_format = "jsonl";
  CLI::App* synth_cmd = app.add_subcommand("synth", "Write a synthetic LDA corpus");
  synth_cmd->add_option("--docs", synth.num_docs, "Documents");
  synth_cmd->add_option("--topics", synth.num_topics, "True topic count");
  synth_cmd->add_option("--vocab", synth.vocab_size, "Vocabulary size");
  synth_cmd->add_option("--doc-length", synth.doc_length, "Tokens per document");
  synth_cmd->add_option("--alpha", synth.alpha, "Document-topic concentration");
  synth_cmd->add_option("--beta", synth.beta, "Topic-word concentration");
  synth_cmd->add_option("--seed", synth.seed, "Random seed");
  synth_cmd->add_option("--format", synth_format, "jsonl or csv");
  synth_cmd->add_option("--out", synth_out, "Output corpus file")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const auto config_for = [](const Command* c) {
      return resolve_config(c->config_path, c->flags);
    };
    if (ingest->app->parsed()) {
      cmd_ingest(config_for(ingest), out);
    } else if (fit_cmd->app->parsed()) {
      cmd_fit(config_for(fit_cmd), out);
    } else if (analyze->app->parsed()) {
      cmd_analyze(config_for(analyze), model_path, out);
    } else if (sweep->app->parsed()) {
      RunConfig config = config_for(sweep);
      if (!k_list.empty()) {
        config.k_list.clear();
        std::size_t start = 0;
        while (start <= k_list.size()) {
          const std::size_t comma = std::min(k_list.find(',', start), k_list.size());
          const std::string item = k_list.substr(start, comma - start);
          try {
            config.k_list.push_back(std::stoi(item));
          } catch (const std::exception&) {
            throw Error(ErrorCode::kInvalidConfig, "cli", "bad --k-list entry '" + item + "'");
          }
          start = comma + 1;
        }
      }
      cmd_sweep(config, out);
    } else if (synth_cmd->parsed()) {
      cmd_synth(synth, synth_out, synth_format, out);
    }
  } catch (const Error& e) {
    err << "lextopic: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "lextopic: cli: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace lextopic::cli

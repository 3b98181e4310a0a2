#include "lextopic/run_config.h"

#include <fstream>
#include <set>

#include "lextopic/error.h"

namespace lextopic {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::kInvalidConfig, "cli", what);
}

void check_keys(const json& object, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!object.is_object()) bad_config(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) bad_config("unknown key " + where + "." + key);
  }
}

template <typename T>
void read(const json& object, const char* key, T& target) {
  if (const auto it = object.find(key); it != object.end() && !it->is_null()) {
    try {
      target = it->get<T>();
    } catch (const json::exception&) {
      bad_config(std::string("wrong type for ") + key);
    }
  }
}

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  check_keys(j, "config",
             {"corpus", "format", "filter_type", "preprocess", "vectorize", "lda",
              "analyze", "k_list", "out"});
  read(j, "corpus", c.corpus);
  read(j, "format", c.format);
  read(j, "filter_type", c.filter_type);
  read(j, "k_list", c.k_list);
  read(j, "out", c.out);
  if (const auto it = j.find("preprocess"); it != j.end()) {
    check_keys(*it, "preprocess", {"stopwords", "lemma_rules", "min_token_length"});
    read(*it, "stopwords", c.preprocess.stopwords);
    read(*it, "lemma_rules", c.preprocess.lemma_rules);
    read(*it, "min_token_length", c.preprocess.min_token_length);
  }
  if (const auto it = j.find("vectorize"); it != j.end()) {
    check_keys(*it, "vectorize", {"min_df", "max_df_ratio", "norm", "pseudo_scale"});
    read(*it, "min_df", c.vectorize.min_df);
    read(*it, "max_df_ratio", c.vectorize.max_df_ratio);
    read(*it, "norm", c.vectorize.norm);
    read(*it, "pseudo_scale", c.vectorize.pseudo_scale);
  }
  if (const auto it = j.find("lda"); it != j.end()) {
    check_keys(*it, "lda",
               {"topics", "alpha", "beta", "sweeps", "burn_in", "seed", "mode", "chains"});
    read(*it, "topics", c.lda.topics);
    if (const auto a = it->find("alpha"); a != it->end() && !a->is_null()) {
      double alpha = 0.0;
      read(*it, "alpha", alpha);
      c.lda.alpha = alpha;
    }
    read(*it, "beta", c.lda.beta);
    read(*it, "sweeps", c.lda.sweeps);
    read(*it, "burn_in", c.lda.burn_in);
    read(*it, "seed", c.lda.seed);
    read(*it, "mode", c.lda.mode);
    read(*it, "chains", c.lda.chains);
  }
  if (const auto it = j.find("analyze"); it != j.end()) {
    check_keys(*it, "analyze", {"top_m", "top_words", "normalization", "labels"});
    read(*it, "top_m", c.analyze.top_m);
    read(*it, "top_words", c.analyze.top_words);
    read(*it, "normalization", c.analyze.normalization);
    read(*it, "labels", c.analyze.labels);
  }
  return c;
}

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["corpus"] = corpus;
  j["format"] = format;
  j["filter_type"] = filter_type;
  j["preprocess"] = {{"stopwords", preprocess.stopwords},
                     {"lemma_rules", preprocess.lemma_rules},
                     {"min_token_length", preprocess.min_token_length}};
  j["vectorize"] = {{"min_df", vectorize.min_df},
                    {"max_df_ratio", vectorize.max_df_ratio},
                    {"norm", vectorize.norm},
                    {"pseudo_scale", vectorize.pseudo_scale}};
  j["lda"] = {{"topics", lda.topics},
              {"alpha", lda.alpha ? ordered_json(*lda.alpha) : ordered_json(nullptr)},
              {"beta", lda.beta},
              {"sweeps", lda.sweeps},
              {"burn_in", lda.burn_in},
              {"seed", lda.seed},
              {"mode", lda.mode},
              {"chains", lda.chains}};
  j["analyze"] = {{"top_m", analyze.top_m},
                  {"top_words", analyze.top_words},
                  {"normalization", analyze.normalization},
                  {"labels", analyze.labels}};
  j["k_list"] = k_list;
  j["out"] = out;
  return j;
}

LdaConfig RunConfig::lda_config() const { return lda_config(lda.topics); }

LdaConfig RunConfig::lda_config(int topics) const {
  LdaConfig config = LdaConfig::with_topics(topics);
  if (lda.alpha) config.alpha = *lda.alpha;
  config.beta = lda.beta;
  config.sweeps = lda.sweeps;
  config.burn_in = lda.burn_in;
  config.seed = lda.seed;
  config.input_mode = parse_input_mode(lda.mode);
  config.validate();
  return config;
}

PreprocessConfig RunConfig::preprocess_config() const {
  PreprocessConfig config;
  if (preprocess.min_token_length < 1) bad_config("min_token_length must be >= 1");
  config.min_token_length = static_cast<std::size_t>(preprocess.min_token_length);
  if (!preprocess.stopwords.empty()) config.load_stopwords(preprocess.stopwords);
  if (!preprocess.lemma_rules.empty()) config.load_lemma_rules(preprocess.lemma_rules);
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cli", "cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    bad_config(path.string() + ": " + e.what());
  }
  return RunConfig::from_json(j);
}

}  // namespace lextopic

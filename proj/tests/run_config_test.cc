#include "lextopic/run_config.h"

#include <gtest/gtest.h>

#include <fstream>

#include "json.hpp"
#include "test_support.h"

namespace lextopic {
namespace {

TEST(RunConfig, DefaultsGiveTenTopics) {
  const RunConfig c;
  const LdaConfig lda = c.lda_config();
  EXPECT_EQ(lda.num_topics, 10);
  EXPECT_DOUBLE_EQ(lda.alpha, 5.0);
  EXPECT_EQ(c.filter_type, "Regulation");
  EXPECT_DOUBLE_EQ(c.lda_config(4).alpha, 12.5);
  const auto j = c.to_json();
  EXPECT_EQ(j["lda"]["topics"], 10);
  EXPECT_TRUE(j["lda"]["alpha"].is_null());
}

TEST(RunConfig, JsonRoundTrip) {
  const auto j = nlohmann::json::parse(R"({
    "corpus": "c.jsonl", "filter_type": "all",
    "vectorize": {"min_df": 1, "norm": "none"},
    "lda": {"topics": 3, "alpha": 0.5, "seed": 7, "mode": "tfidf-pseudo"},
    "analyze": {"normalization": "per_year"},
    "k_list": [2, 3]
  })");
  const RunConfig c = RunConfig::from_json(j);
  EXPECT_EQ(c.corpus, "c.jsonl");
  EXPECT_EQ(c.vectorize.min_df, 1);
  EXPECT_DOUBLE_EQ(c.vectorize.max_df_ratio, 0.95);
  EXPECT_EQ(c.lda.topics, 3);
  EXPECT_EQ(c.lda.alpha, 0.5);
  EXPECT_EQ(c.lda_config().input_mode, InputMode::kTfidfPseudo);
  EXPECT_EQ(c.k_list, (std::vector<int>{2, 3}));
  const RunConfig back = RunConfig::from_json(nlohmann::json::parse(c.to_json().dump()));
  EXPECT_EQ(back.to_json().dump(), c.to_json().dump());
}

TEST(RunConfig, RejectsUnknownKeysAndBadValues) {
  EXPECT_LEXTOPIC_ERROR(RunConfig::from_json(nlohmann::json::parse(R"({"topics": 3})")),
                        ErrorCode::kInvalidConfig);
  EXPECT_LEXTOPIC_ERROR(
      RunConfig::from_json(nlohmann::json::parse(R"({"lda": {"topic": 3}})")),
      ErrorCode::kInvalidConfig);
  EXPECT_LEXTOPIC_ERROR(
      RunConfig::from_json(nlohmann::json::parse(R"({"lda": {"topics": "ten"}})")),
      ErrorCode::kInvalidConfig);
  RunConfig c;
  c.lda.burn_in = 2000;
  EXPECT_LEXTOPIC_ERROR(c.lda_config(), ErrorCode::kInvalidConfig);
  c = RunConfig{};
  c.lda.mode = "tfidf";
  EXPECT_LEXTOPIC_ERROR(c.lda_config(), ErrorCode::kInvalidConfig);
}

TEST(RunConfig, LoadsResourceFiles) {
  RunConfig c;
  c.preprocess.stopwords = testing::resource_path("stopwords_fa.txt").string();
  c.preprocess.lemma_rules = testing::resource_path("lemma_rules_fa.txt").string();
  const PreprocessConfig p = c.preprocess_config();
  EXPECT_TRUE(p.stopwords.count("از"));
  EXPECT_FALSE(p.lemma_rules.rules().empty());
  c.preprocess.stopwords = "/nonexistent/stopwords.txt";
  EXPECT_LEXTOPIC_ERROR(c.preprocess_config(), ErrorCode::kIo);
  EXPECT_LEXTOPIC_ERROR(load_run_config("/nonexistent/run.json"), ErrorCode::kIo);
}

}  // namespace
}  // namespace lextopic

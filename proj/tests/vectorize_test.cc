#include "lextopic/vectorize.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lextopic/preprocess.h"
#include "test_support.h"

namespace lextopic {
namespace {

std::vector<Document> docs_of(const std::vector<std::vector<std::string>>& token_lists) {
  std::vector<Document> docs;
  for (std::size_t i = 0; i < token_lists.size(); ++i) {
    docs.push_back({"doc" + std::to_string(i), token_lists[i], 2021});
  }
  return docs;
}

const std::vector<Document> kTwoDocs = docs_of({{"a", "b"}, {"a", "c"}});

TEST(BuildVocabulary, OrderAndFilters) {
  const Vocabulary all = build_vocabulary(kTwoDocs, 1, 1.0);
  EXPECT_EQ(all.terms(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(all.df(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(all.index("c"), 2);
  EXPECT_EQ(all.index("zz"), -1);

  EXPECT_EQ(build_vocabulary(kTwoDocs, 2, 1.0).terms(), (std::vector<std::string>{"a"}));
  EXPECT_EQ(build_vocabulary(kTwoDocs, 1, 0.5).terms(), (std::vector<std::string>{"b", "c"}));
  EXPECT_LEXTOPIC_ERROR(build_vocabulary(kTwoDocs, 3, 1.0), ErrorCode::kEmptyVocabulary);
}

TEST(BuildVocabulary, DeterministicAndHashSensitive) {
  const auto docs = docs_of({{"z", "y", "x"}, {"x", "y"}, {"x", "w"}});
  const Vocabulary a = build_vocabulary(docs, 1, 1.0);
  const Vocabulary b = build_vocabulary(docs, 1, 1.0);
  EXPECT_EQ(a.terms(), b.terms());
  EXPECT_EQ(a.terms(), (std::vector<std::string>{"x", "y", "w", "z"}));
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  EXPECT_NE(a.hash(), build_vocabulary(docs, 2, 1.0).hash());
}

TEST(CountMatrix, Examples) {
  const auto docs = docs_of({{"a", "a", "b"}, {"q", "r"}, {"b", "c"}});
  const Vocabulary v = build_vocabulary(docs_of({{"a", "b"}, {"a", "c"}}), 1, 1.0);
  const DocTermMatrix m = count_matrix(docs, v);
  ASSERT_EQ(m.num_docs(), 3u);
  EXPECT_EQ(m.rows[0], (std::vector<TermCount>{{0, 2}, {1, 1}}));
  EXPECT_TRUE(m.rows[1].empty());
  EXPECT_EQ(m.row_total(0), 3);
  EXPECT_EQ(m.total(), 5);
  EXPECT_EQ(m.doc_ids[2], "doc2");
  EXPECT_EQ(m.document_frequency(), (std::vector<int>{1, 2, 1}));
}

TEST(CountMatrix, RowSumsEqualInVocabularyTokens) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> word(0, 19);
  std::vector<std::vector<std::string>> lists(25);
  for (auto& l : lists) {
    for (int i = 0; i < 30; ++i) l.push_back("t" + std::to_string(word(rng)));
  }
  const auto docs = docs_of(lists);
  const Vocabulary v = build_vocabulary(docs, 3, 0.9);
  const DocTermMatrix m = count_matrix(docs, v);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    std::int64_t expected = 0;
    for (const auto& t : docs[d].tokens) expected += v.index(t) >= 0;
    EXPECT_EQ(m.row_total(d), expected);
    for (const TermCount& tc : m.rows[d]) EXPECT_GT(tc.count, 0);
  }
}

TEST(Idf, SmoothedFormula) {
  const Vocabulary v = build_vocabulary(kTwoDocs, 1, 1.0);
  const auto w = idf(count_matrix(kTwoDocs, v));
  EXPECT_DOUBLE_EQ(w[0], 1.0);
  EXPECT_NEAR(w[1], 1.405465108108164, 1e-12);
  EXPECT_NEAR(w[2], 1.405465108108164, 1e-12);
}

TEST(Idf, NonIncreasingInDf) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> word(0, 14);
  std::vector<std::vector<int>> docs(12);
  for (auto& d : docs) {
    for (int i = 0; i < 6; ++i) d.push_back(word(rng));
  }
  const DocTermMatrix m = testing::matrix_from_terms(docs, 15);
  const auto df = m.document_frequency();
  const auto w = idf(m);
  for (std::size_t a = 0; a < 15; ++a) {
    for (std::size_t b = 0; b < 15; ++b) {
      if (df[a] > 0 && df[b] > 0 && df[a] < df[b]) EXPECT_GE(w[a], w[b]);
    }
    if (df[a] > 0) EXPECT_GT(w[a], 0.0);
  }
}

TEST(Tfidf, TwoDocumentOracle) {
  const DocTermMatrix m = count_matrix(kTwoDocs, build_vocabulary(kTwoDocs, 1, 1.0));
  const TfidfMatrix raw = tfidf(m, Norm::kNone);
  ASSERT_EQ(raw.rows[0].size(), 2u);
  EXPECT_DOUBLE_EQ(raw.rows[0][0].weight, 1.0);
  EXPECT_NEAR(raw.rows[0][1].weight, 1.405465, 1e-6);

  const TfidfMatrix l2 = tfidf(m, Norm::kL2);
  EXPECT_NEAR(l2.rows[0][0].weight, 0.57974, 1e-5);
  EXPECT_NEAR(l2.rows[0][1].weight, 0.81480, 1e-5);
  EXPECT_EQ(l2.rows[1][1].term, 2);

  const DocTermMatrix pseudo = to_pseudo_counts(l2, 10);
  EXPECT_EQ(pseudo.rows[0], (std::vector<TermCount>{{0, 6}, {1, 8}}));
  EXPECT_EQ(pseudo.rows[1], (std::vector<TermCount>{{0, 6}, {2, 8}}));
}

TEST(Tfidf, SingleDocumentHasUnitIdf) {
  const auto docs = docs_of({{"x", "y", "y"}});
  const TfidfMatrix t = tfidf(count_matrix(docs, build_vocabulary(docs, 1, 1.0)), Norm::kNone);
  EXPECT_DOUBLE_EQ(t.rows[0][0].weight, 1.0);
  EXPECT_DOUBLE_EQ(t.rows[0][1].weight, 2.0);
}

TEST(Tfidf, L2RowsAreUnitAndPatternIsPreserved) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> word(0, 24);
  std::vector<std::vector<int>> docs(15);
  for (auto& d : docs) {
    for (int i = 0; i < 12; ++i) d.push_back(word(rng));
  }
  docs.push_back({});
  const DocTermMatrix m = testing::matrix_from_terms(docs, 25);
  const TfidfMatrix t = tfidf(m, Norm::kL2);
  for (std::size_t d = 0; d < m.num_docs(); ++d) {
    ASSERT_EQ(t.rows[d].size(), m.rows[d].size());
    double sq = 0;
    for (std::size_t i = 0; i < t.rows[d].size(); ++i) {
      EXPECT_EQ(t.rows[d][i].term, m.rows[d][i].term);
      EXPECT_GT(t.rows[d][i].weight, 0.0);
      sq += t.rows[d][i].weight * t.rows[d][i].weight;
    }
    if (!m.rows[d].empty()) EXPECT_NEAR(std::sqrt(sq), 1.0, 1e-9);
  }
}

TEST(Tfidf, DuplicatingTokensScalesRawAndFixesL2) {
  const DocTermMatrix base = testing::matrix_from_terms({{0, 1, 1, 2}, {1, 3}, {0, 3, 3}}, 4);
  for (int k : {2, 3, 7}) {
    DocTermMatrix scaled = base;
    for (auto& row : scaled.rows) {
      for (auto& tc : row) tc.count *= k;
    }
    const TfidfMatrix a = tfidf(base, Norm::kNone), b = tfidf(scaled, Norm::kNone);
    const TfidfMatrix an = tfidf(base, Norm::kL2), bn = tfidf(scaled, Norm::kL2);
    for (std::size_t d = 0; d < base.num_docs(); ++d) {
      for (std::size_t i = 0; i < base.rows[d].size(); ++i) {
        EXPECT_NEAR(b.rows[d][i].weight, k * a.rows[d][i].weight, 1e-12);
        EXPECT_NEAR(bn.rows[d][i].weight, an.rows[d][i].weight, 1e-12);
      }
    }
  }
}

TEST(Tfidf, UbiquitousTermsHaveUnitIdf) {
  const DocTermMatrix m = testing::matrix_from_terms({{0, 1}, {1, 0, 0}, {0, 1, 1}}, 2);
  for (double w : idf(m)) EXPECT_DOUBLE_EQ(w, 1.0);
}

TEST(PseudoCounts, RoundingAndErrors) {
  TfidfMatrix t;
  t.num_terms = 2;
  t.doc_ids = {"d"};
  t.rows = {{{0, 0.58}, {1, 0.04}}};
  const DocTermMatrix p = to_pseudo_counts(t, 10);
  EXPECT_EQ(p.rows[0], (std::vector<TermCount>{{0, 6}}));
  t.rows = {{{0, 0.04}, {1, 0.049}}};
  EXPECT_LEXTOPIC_ERROR(to_pseudo_counts(t, 1), ErrorCode::kAllZero);
  EXPECT_LEXTOPIC_ERROR(to_pseudo_counts(t, 0), ErrorCode::kInvalidConfig);
}

TEST(Export, TripletsAndVocabulary) {
  const Vocabulary v = build_vocabulary(kTwoDocs, 1, 1.0);
  const DocTermMatrix m = count_matrix(kTwoDocs, v);
  std::ostringstream counts, vocab, weights;
  write_count_triplets(m, v, counts);
  write_vocabulary_csv(v, vocab);
  write_tfidf_triplets(tfidf(m, Norm::kNone), v, weights);
  EXPECT_EQ(counts.str(), "doc_id,term,value\ndoc0,a,1\ndoc0,b,1\ndoc1,a,1\ndoc1,c,1\n");
  EXPECT_EQ(vocab.str(), "term,df\na,2\nb,1\nc,1\n");
  EXPECT_EQ(weights.str().substr(0, 34), "doc_id,term,value\ndoc0,a,1\ndoc0,b,");
  EXPECT_EQ(parse_norm("l2"), Norm::kL2);
  EXPECT_EQ(parse_norm("none"), Norm::kNone);
  EXPECT_LEXTOPIC_ERROR(parse_norm("l1"), ErrorCode::kInvalidConfig);
}

}  // namespace
}  // namespace lextopic

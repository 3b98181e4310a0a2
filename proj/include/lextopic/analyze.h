#ifndef LEXTOPIC_ANALYZE_H_
#define LEXTOPIC_ANALYZE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lextopic/corpus.h"
#include "lextopic/lda.h"
#include "lextopic/trend_table.h"

namespace lextopic {

// per_topic: each topic's row sums to 100 across years.
// per_year: each year's column sums to 100 across topics.
enum class TrendNormalization { kPerTopic, kPerYear };

TrendNormalization parse_trend_normalization(std::string_view text);
std::string_view trend_normalization_name(TrendNormalization n);

// Argmax, lowest index on ties.
std::size_t dominant_topic(std::span<const double> theta_row);

// One column; row k holds the number of documents whose dominant topic is
// k and its percentage of all modeled documents. Every model document id
// must be in the corpus, otherwise Error(AlignmentMismatch).
TrendTable topic_shares(const LdaModel& model, const Corpus& corpus);

// Topic x Gregorian year counts of dominant topics. Throws
// Error(AlignmentMismatch) or Error(MissingYear, record id).
TrendTable yearly_topic_percentages(const LdaModel& model, const Corpus& corpus,
                                    TrendNormalization normalization);

struct WeightedTerm {
  std::string term;
  double weight;
};

// Highest-probability terms, probability descending then term ascending.
// n is clamped to the vocabulary size.
std::vector<WeightedTerm> top_words(const LdaModel& model, std::size_t topic,
                                    std::size_t n);

struct TopicSummary {
  std::size_t topic_id;
  std::string label;
  std::vector<WeightedTerm> top_words;
};

using LabelMap = std::map<std::size_t, std::string>;

// Either a JSON object {"0": "Economic"} or lines "0<TAB>Economic" with '#'
// comments.
LabelMap read_label_map(std::istream& in);
LabelMap load_label_map(const std::filesystem::path& path);

// Unlabelled topics get "topic-<k>". Throws Error(UnknownTopicId).
std::vector<TopicSummary> label_topics(const LdaModel& model, const LabelMap& labels,
                                       std::size_t words_per_topic);

// top_words scaled so the first weight is exactly 1.
std::vector<WeightedTerm> wordcloud_weights(const LdaModel& model, std::size_t topic,
                                            std::size_t n);

void write_topics_json(const std::vector<TopicSummary>& topics, std::ostream& out);
// topic,count,percent
void write_shares_csv(const TrendTable& shares, std::ostream& out);
// topic,year,count,percent,normalization
void write_trends_csv(const TrendTable& trends, TrendNormalization normalization,
                      std::ostream& out);
// term,weight
void write_wordcloud_csv(const std::vector<WeightedTerm>& weights, std::ostream& out);

}  // namespace lextopic

#endif  // LEXTOPIC_ANALYZE_H_

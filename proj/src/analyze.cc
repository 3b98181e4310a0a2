#include "lextopic/analyze.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lextopic/error.h"
#include "lextopic/utf8.h"

namespace lextopic {
namespace {

constexpr std::string_view kModule = "analyze";

std::vector<std::string> topic_labels(std::size_t topics) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < topics; ++k) labels.push_back(std::to_string(k));
  return labels;
}

const LawRecord& aligned_record(const Corpus& corpus, const std::string& id) {
  const LawRecord* record = corpus.find(id);
  if (record == nullptr) {
    throw Error(ErrorCode::kAlignmentMismatch, std::string(kModule),
                "model document " + id + " is not in the corpus");
  }
  return *record;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

TrendNormalization parse_trend_normalization(std::string_view text) {
  if (text == "per_topic") return TrendNormalization::kPerTopic;
  if (text == "per_year") return TrendNormalization::kPerYear;
  throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
              "unknown normalization " + std::string(text));
}

std::string_view trend_normalization_name(TrendNormalization n) {
  return n == TrendNormalization::kPerTopic ? "per_topic" : "per_year";
}

std::size_t dominant_topic(std::span<const double> theta_row) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < theta_row.size(); ++k) {
    if (theta_row[k] > theta_row[best]) best = k;
  }
  return best;
}

TrendTable topic_shares(const LdaModel& model, const Corpus& corpus) {
  TrendTable table(topic_labels(model.num_topics), {0});
  for (std::size_t d = 0; d < model.num_docs; ++d) {
    aligned_record(corpus, model.doc_ids[d]);
    table.add(dominant_topic(model.theta_row(d)), 0);
  }
  table.normalize(NormalizationAxis::kColumn);
  return table;
}

TrendTable yearly_topic_percentages(const LdaModel& model, const Corpus& corpus,
                                    TrendNormalization normalization) {
  std::vector<int> doc_years(model.num_docs);
  for (std::size_t d = 0; d < model.num_docs; ++d) {
    const LawRecord& record = aligned_record(corpus, model.doc_ids[d]);
    if (!record.date.has_year()) {
      throw Error(ErrorCode::kMissingYear, std::string(kModule), record.id);
    }
    doc_years[d] = record.date.gregorian_year;
  }
  std::vector<int> years = doc_years;
  std::sort(years.begin(), years.end());
  years.erase(std::unique(years.begin(), years.end()), years.end());

  TrendTable table(topic_labels(model.num_topics), years);
  for (std::size_t d = 0; d < model.num_docs; ++d) {
    const auto col = std::lower_bound(years.begin(), years.end(), doc_years[d]) - years.begin();
    table.add(dominant_topic(model.theta_row(d)), col);
  }
  table.normalize(normalization == TrendNormalization::kPerTopic ? NormalizationAxis::kRow
                                                                 : NormalizationAxis::kColumn);
  return table;
}

std::vector<WeightedTerm> top_words(const LdaModel& model, std::size_t topic,
                                    std::size_t n) {
  const auto phi = model.phi_row(topic);
  std::vector<WeightedTerm> out;
  for (int term : top_terms(model, topic, n)) {
    out.push_back({model.vocab.term(term), phi[term]});
  }
  return out;
}

LabelMap read_label_map(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  LabelMap labels;
  const auto parse_id = [](const std::string& key) -> std::size_t {
    std::size_t used = 0;
    long long id = -1;
    try {
      id = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || id < 0) {
      throw Error(ErrorCode::kUnknownTopicId, std::string(kModule), key);
    }
    return static_cast<std::size_t>(id);
  };

  const std::string_view trimmed = utf8::trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
                  std::string("label map: ") + e.what());
    }
    for (const auto& [key, value] : j.items()) labels[parse_id(key)] = value.get<std::string>();
    return labels;
  }

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view view = utf8::trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
                  "label map line without tab: " + line);
    }
    labels[parse_id(std::string(utf8::trim(line.substr(0, tab))))] =
        std::string(utf8::trim(std::string_view(line).substr(tab + 1)));
  }
  return labels;
}

LabelMap load_label_map(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, std::string(kModule), "cannot open " + path.string());
  return read_label_map(in);
}

std::vector<TopicSummary> label_topics(const LdaModel& model, const LabelMap& labels,
                                       std::size_t words_per_topic) {
  for (const auto& [id, label] : labels) {
    if (id >= model.num_topics) {
      throw Error(ErrorCode::kUnknownTopicId, std::string(kModule), std::to_string(id));
    }
  }
  std::vector<TopicSummary> out;
  for (std::size_t k = 0; k < model.num_topics; ++k) {
    const auto it = labels.find(k);
    out.push_back({k, it != labels.end() ? it->second : "topic-" + std::to_string(k),
                   top_words(model, k, words_per_topic)});
  }
  return out;
}

std::vector<WeightedTerm> wordcloud_weights(const LdaModel& model, std::size_t topic,
                                            std::size_t n) {
  std::vector<WeightedTerm> words = top_words(model, topic, n);
  if (words.empty()) return words;
  const double peak = words.front().weight;
  for (WeightedTerm& w : words) w.weight = w.weight / peak;
  return words;
}

void write_topics_json(const std::vector<TopicSummary>& topics, std::ostream& out) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const TopicSummary& t : topics) {
    nlohmann::ordered_json words = nlohmann::ordered_json::array();
    for (const WeightedTerm& w : t.top_words) {
      words.push_back({{"term", w.term}, {"probability", w.weight}});
    }
    j.push_back({{"topic_id", t.topic_id}, {"label", t.label}, {"top_words", words}});
  }
  out << j.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) << '\n';
}

void write_shares_csv(const TrendTable& shares, std::ostream& out) {
  out << "topic,count,percent\n";
  for (std::size_t r = 0; r < shares.rows(); ++r) {
    out << shares.row_labels()[r] << ',' << shares.count(r, 0) << ','
        << format_real(shares.percent(r, 0)) << '\n';
  }
}

void write_trends_csv(const TrendTable& trends, TrendNormalization normalization,
                      std::ostream& out) {
  out << "topic,year,count,percent,normalization\n";
  for (std::size_t r = 0; r < trends.rows(); ++r) {
    for (std::size_t c = 0; c < trends.cols(); ++c) {
      out << trends.row_labels()[r] << ',' << trends.col_labels()[c] << ','
          << trends.count(r, c) << ',' << format_real(trends.percent(r, c)) << ','
          << trend_normalization_name(normalization) << '\n';
    }
  }
}

void write_wordcloud_csv(const std::vector<WeightedTerm>& weights, std::ostream& out) {
  out << "term,weight\n";
  for (const WeightedTerm& w : weights) {
    out << csv_field(w.term) << ',' << format_real(w.weight) << '\n';
  }
}

}  // namespace lextopic

#include "lextopic/vectorize.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "lextopic/error.h"

namespace lextopic {
namespace {

constexpr std::string_view kModule = "vectorize";

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

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<int> df)
    : terms_(std::move(terms)), df_(std::move(df)) {
  if (df_.size() != terms_.size()) {
    throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
                "vocabulary df length differs from term count");
  }
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!index_.emplace(terms_[i], static_cast<int>(i)).second) {
      throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
                  "duplicate vocabulary term " + terms_[i]);
    }
  }
}

int Vocabulary::index(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  return it == index_.end() ? -1 : it->second;
}

std::string Vocabulary::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  const auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (const std::string& t : terms_) {
    for (char c : t) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Vocabulary build_vocabulary(const std::vector<Document>& docs, int min_df,
                            double max_df_ratio) {
  if (docs.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary, std::string(kModule), "no documents");
  }
  if (!(max_df_ratio > 0.0 && max_df_ratio <= 1.0) || min_df < 1) {
    throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
                "need min_df >= 1 and max_df_ratio in (0, 1]");
  }
  std::unordered_map<std::string, int> df;
  for (const Document& doc : docs) {
    std::unordered_set<std::string_view> seen(doc.tokens.begin(), doc.tokens.end());
    for (std::string_view t : seen) ++df[std::string(t)];
  }
  // Tolerance keeps ratio * D from losing an exact integer to rounding.
  const double ceiling = max_df_ratio * static_cast<double>(docs.size()) + 1e-9;

  std::vector<std::pair<std::string, int>> kept;
  for (auto& [term, count] : df) {
    if (count >= min_df && static_cast<double>(count) <= ceiling) kept.emplace_back(term, count);
  }
  if (kept.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary, std::string(kModule),
                "no term within document-frequency bounds");
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<std::string> terms;
  std::vector<int> counts;
  for (auto& [term, count] : kept) {
    terms.push_back(std::move(term));
    counts.push_back(count);
  }
  return Vocabulary(std::move(terms), std::move(counts));
}

std::int64_t DocTermMatrix::row_total(std::size_t doc) const {
  std::int64_t sum = 0;
  for (const TermCount& tc : rows[doc]) sum += tc.count;
  return sum;
}

std::int64_t DocTermMatrix::total() const {
  std::int64_t sum = 0;
  for (std::size_t d = 0; d < rows.size(); ++d) sum += row_total(d);
  return sum;
}

std::vector<int> DocTermMatrix::document_frequency() const {
  std::vector<int> df(num_terms, 0);
  for (const auto& row : rows) {
    for (const TermCount& tc : row) ++df[tc.term];
  }
  return df;
}

DocTermMatrix count_matrix(const std::vector<Document>& docs, const Vocabulary& vocab) {
  DocTermMatrix m;
  m.num_terms = vocab.size();
  m.doc_ids.reserve(docs.size());
  m.rows.reserve(docs.size());
  for (const Document& doc : docs) {
    std::vector<int> terms;
    for (const std::string& t : doc.tokens) {
      if (const int i = vocab.index(t); i >= 0) terms.push_back(i);
    }
    std::sort(terms.begin(), terms.end());
    std::vector<TermCount> row;
    for (int t : terms) {
      if (!row.empty() && row.back().term == t) {
        ++row.back().count;
      } else {
        row.push_back({t, 1});
      }
    }
    m.doc_ids.push_back(doc.record_id);
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::vector<double> idf(const DocTermMatrix& matrix) {
  const double docs = static_cast<double>(matrix.num_docs());
  const std::vector<int> df = matrix.document_frequency();
  std::vector<double> out(matrix.num_terms);
  for (std::size_t t = 0; t < out.size(); ++t) {
    out[t] = std::log((1.0 + docs) / (1.0 + df[t])) + 1.0;
  }
  return out;
}

TfidfMatrix tfidf(const DocTermMatrix& matrix, Norm norm) {
  const std::vector<double> weights = idf(matrix);
  TfidfMatrix out;
  out.num_terms = matrix.num_terms;
  out.doc_ids = matrix.doc_ids;
  out.norm = norm;
  out.rows.reserve(matrix.num_docs());
  for (const auto& row : matrix.rows) {
    std::vector<TermWeight> weighted;
    weighted.reserve(row.size());
    double squares = 0.0;
    for (const TermCount& tc : row) {
      const double w = tc.count * weights[tc.term];
      weighted.push_back({tc.term, w});
      squares += w * w;
    }
    if (norm == Norm::kL2 && squares > 0.0) {
      const double length = std::sqrt(squares);
      for (TermWeight& tw : weighted) tw.weight /= length;
    }
    out.rows.push_back(std::move(weighted));
  }
  return out;
}

DocTermMatrix to_pseudo_counts(const TfidfMatrix& tfidf, double scale) {
  if (!(scale > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, std::string(kModule), "scale must be > 0");
  }
  DocTermMatrix out;
  out.num_terms = tfidf.num_terms;
  out.doc_ids = tfidf.doc_ids;
  out.rows.reserve(tfidf.rows.size());
  bool any = false;
  for (const auto& row : tfidf.rows) {
    std::vector<TermCount> counts;
    for (const TermWeight& tw : row) {
      const long rounded = std::lround(scale * tw.weight);
      if (rounded > 0) {
        counts.push_back({tw.term, static_cast<int>(rounded)});
        any = true;
      }
    }
    out.rows.push_back(std::move(counts));
  }
  if (!any) {
    throw Error(ErrorCode::kAllZero, std::string(kModule),
                "every pseudo-count rounded to zero at scale " + format_real(scale));
  }
  return out;
}

Norm parse_norm(std::string_view text) {
  if (text == "none") return Norm::kNone;
  if (text == "l2") return Norm::kL2;
  throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
              "unknown norm " + std::string(text));
}

std::string_view norm_name(Norm norm) { return norm == Norm::kL2 ? "l2" : "none"; }

std::string format_real(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

void write_count_triplets(const DocTermMatrix& matrix, const Vocabulary& vocab,
                          std::ostream& out) {
  out << "doc_id,term,value\n";
  for (std::size_t d = 0; d < matrix.num_docs(); ++d) {
    for (const TermCount& tc : matrix.rows[d]) {
      out << csv_field(matrix.doc_ids[d]) << ',' << csv_field(vocab.term(tc.term)) << ','
          << tc.count << '\n';
    }
  }
}

void write_tfidf_triplets(const TfidfMatrix& matrix, const Vocabulary& vocab,
                          std::ostream& out) {
  out << "doc_id,term,value\n";
  for (std::size_t d = 0; d < matrix.rows.size(); ++d) {
    for (const TermWeight& tw : matrix.rows[d]) {
      out << csv_field(matrix.doc_ids[d]) << ',' << csv_field(vocab.term(tw.term)) << ','
          << format_real(tw.weight) << '\n';
    }
  }
}

void write_vocabulary_csv(const Vocabulary& vocab, std::ostream& out) {
  out << "term,df\n";
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out << csv_field(vocab.term(i)) << ',' << vocab.df()[i] << '\n';
  }
}

}  // namespace lextopic

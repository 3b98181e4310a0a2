#ifndef LEXTOPIC_VECTORIZE_H_
#define LEXTOPIC_VECTORIZE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lextopic/preprocess.h"

namespace lextopic {

class Vocabulary {
 public:
  Vocabulary() = default;
  // `terms` must be distinct; df aligned with terms.
  Vocabulary(std::vector<std::string> terms, std::vector<int> df);

  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<int>& df() const { return df_; }
  const std::string& term(std::size_t i) const { return terms_[i]; }

  // -1 when absent.
  int index(std::string_view term) const;

  // FNV-1a over the newline-joined terms, as 16 hex digits.
  std::string hash() const;

 private:
  std::vector<std::string> terms_;
  std::vector<int> df_;
  std::unordered_map<std::string, int> index_;
};

// Keeps terms with min_df <= df <= max_df_ratio * D, ordered by descending
// df then lexicographically. Throws Error(EmptyVocabulary).
Vocabulary build_vocabulary(const std::vector<Document>& docs, int min_df,
                            double max_df_ratio);

struct TermCount {
  int term;
  int count;
  bool operator==(const TermCount&) const = default;
};

struct TermWeight {
  int term;
  double weight;
};

// Sparse counts. Rows hold positive counts sorted by term index.
struct DocTermMatrix {
  std::size_t num_terms = 0;
  std::vector<std::string> doc_ids;
  std::vector<std::vector<TermCount>> rows;

  std::size_t num_docs() const { return rows.size(); }
  std::int64_t row_total(std::size_t doc) const;
  std::int64_t total() const;
  // Documents containing each term.
  std::vector<int> document_frequency() const;
};

enum class Norm { kNone, kL2 };

struct TfidfMatrix {
  std::size_t num_terms = 0;
  std::vector<std::string> doc_ids;
  std::vector<std::vector<TermWeight>> rows;
  Norm norm = Norm::kNone;
};

// Out-of-vocabulary tokens are dropped.
DocTermMatrix count_matrix(const std::vector<Document>& docs, const Vocabulary& vocab);

// ln((1 + D) / (1 + df)) + 1 per term, df taken from the matrix.
std::vector<double> idf(const DocTermMatrix& matrix);

TfidfMatrix tfidf(const DocTermMatrix& matrix, Norm norm);

// round(scale * weight) with zeros dropped. Throws Error(AllZero) when
// nothing survives and Error(InvalidConfig) for a nonpositive scale.
DocTermMatrix to_pseudo_counts(const TfidfMatrix& tfidf, double scale);

Norm parse_norm(std::string_view text);
std::string_view norm_name(Norm norm);

// Triplet exports, "doc_id,term,value" in row order then term index order,
// and "term,df" in vocabulary order.
void write_count_triplets(const DocTermMatrix& matrix, const Vocabulary& vocab,
                          std::ostream& out);
void write_tfidf_triplets(const TfidfMatrix& matrix, const Vocabulary& vocab,
                          std::ostream& out);
void write_vocabulary_csv(const Vocabulary& vocab, std::ostream& out);

// Shortest round-trip decimal form.
std::string format_real(double value);

}  // namespace lextopic

#endif  // LEXTOPIC_VECTORIZE_H_

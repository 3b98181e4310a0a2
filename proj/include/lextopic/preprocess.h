#ifndef LEXTOPIC_PREPROCESS_H_
#define LEXTOPIC_PREPROCESS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lextopic/corpus.h"

namespace lextopic {

// Exception lexicon plus ordered suffix rules. A token is looked up in the
// lexicon first; otherwise the longest matching suffix (earliest rule on a
// tie) is replaced, repeating until no rule applies. Rules must strictly
// shorten the token and must leave a stem of at least `min_stem_length`
// code points, so every token has a unique non-empty fixed point.
class LemmaRules {
 public:
  void add_rule(std::string suffix, std::string replacement);
  void add_exception(std::string word, std::string lemma);

  std::string lemmatize(std::string_view token) const;

  const std::vector<std::pair<std::string, std::string>>& rules() const {
    return rules_;
  }
  const std::unordered_map<std::string, std::string>& exceptions() const {
    return exceptions_;
  }
  std::size_t min_stem_length = 2;

 private:
  std::vector<std::pair<std::string, std::string>> rules_;
  std::unordered_map<std::string, std::string> exceptions_;
  std::unordered_set<std::string> lemmas_;
};

struct PreprocessConfig {
  // Defaults: Persian/Arabic letter unification, Arabic-Indic digits to
  // ASCII, tatweel and short vowel marks removed; ASCII and Persian
  // punctuation; min_token_length 2; no stopwords; no lemma rules.
  PreprocessConfig();

  std::unordered_map<char32_t, std::u32string> normalize_chars;
  std::unordered_set<char32_t> punctuation;
  std::unordered_set<std::string> stopwords;
  LemmaRules lemma_rules;
  std::size_t min_token_length = 2;

  // Stopwords and rule strings are normalized on the way in.
  void add_stopword(std::string_view word);
  // One token per line; '#' starts a comment line.
  void load_stopwords(std::istream& in);
  void load_stopwords(const std::filesystem::path& path);
  // Lines "suffix<TAB>replacement" or "word<TAB>=<TAB>lemma"; '#' comments.
  void load_lemma_rules(std::istream& in);
  void load_lemma_rules(const std::filesystem::path& path);
};

struct Document {
  std::string record_id;
  std::vector<std::string> tokens;
  int gregorian_year = 0;
};

// Character map, ASCII lowercasing, whitespace collapse and trim. Idempotent.
std::string normalize(std::string_view text, const PreprocessConfig& config);
std::string remove_punctuation(std::string_view text, const PreprocessConfig& config);
std::vector<std::string> tokenize(std::string_view text, std::size_t min_token_length);
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stopwords);
std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                   const LemmaRules& rules);

// normalize -> remove_punctuation -> tokenize -> remove_stopwords ->
// lemmatize. Lemmas that fall under the length floor or land on a stopword
// are dropped, so the output is a fixed point of the pipeline.
std::vector<std::string> preprocess_text(std::string_view text,
                                         const PreprocessConfig& config);

// Models title + " " + content. Throws Error(EmptyDocument, record id).
Document preprocess_document(const LawRecord& record, const PreprocessConfig& config);

struct PreprocessedCorpus {
  std::vector<Document> documents;
  std::vector<std::string> dropped_ids;  // records that came out empty
};

// Drops empty documents instead of failing.
PreprocessedCorpus preprocess_corpus(const Corpus& corpus, const PreprocessConfig& config);

struct ValidationReport {
  std::vector<std::string> null_fields;             // record ids
  std::vector<std::string> empty_after_preprocess;  // record ids
  bool model_ready() const {
    return null_fields.empty() && empty_after_preprocess.empty();
  }
};

// A record lands in null_fields when id, title, content, category or date
// is blank.
ValidationReport validate_nonempty(const Corpus& corpus, const PreprocessConfig& config);

}  // namespace lextopic

#endif  // LEXTOPIC_PREPROCESS_H_

#include "lextopic/preprocess.h"

#include <fstream>
#include <istream>

#include "lextopic/error.h"
#include "lextopic/utf8.h"

namespace lextopic {
namespace {

constexpr std::string_view kModule = "preprocess";

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidConfig, std::string(kModule), what);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Lines with trailing CR and comment lines removed. Blank lines are kept as
// empty strings so callers can skip them.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const std::string_view trimmed = utf8::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    fn(line, number);
  }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, std::string(kModule), "cannot open " + path.string());
  return in;
}

}  // namespace

void LemmaRules::add_rule(std::string suffix, std::string replacement) {
  if (suffix.empty()) invalid("lemma rule with empty suffix");
  if (utf8::length(replacement) >= utf8::length(suffix)) {
    invalid("lemma rule must shorten the token: " + suffix + " -> " + replacement);
  }
  rules_.emplace_back(std::move(suffix), std::move(replacement));
}

void LemmaRules::add_exception(std::string word, std::string lemma) {
  if (word.empty() || lemma.empty()) invalid("lemma exception with empty side");
  if (word != lemma && (lemmas_.count(word) || exceptions_.count(lemma))) {
    invalid("lemma exception chains through another entry: " + word + " -> " + lemma);
  }
  lemmas_.insert(lemma);
  exceptions_[std::move(word)] = std::move(lemma);
}

std::string LemmaRules::lemmatize(std::string_view token) const {
  std::string current(token);
  while (true) {
    if (const auto it = exceptions_.find(current); it != exceptions_.end()) {
      return it->second;
    }
    if (lemmas_.count(current)) return current;
    const std::size_t length = utf8::length(current);
    const std::pair<std::string, std::string>* best = nullptr;
    std::size_t best_length = 0;
    for (const auto& rule : rules_) {
      if (!ends_with(current, rule.first)) continue;
      const std::size_t suffix_length = utf8::length(rule.first);
      if (length < suffix_length + min_stem_length) continue;
      if (suffix_length > best_length) {
        best = &rule;
        best_length = suffix_length;
      }
    }
    if (best == nullptr) return current;
    current.resize(current.size() - best->first.size());
    current += best->second;
  }
}

PreprocessConfig::PreprocessConfig() {
  normalize_chars[0x064A] = U"ی";  // Arabic Yeh -> Farsi Yeh
  normalize_chars[0x0649] = U"ی";  // Alef Maksura -> Farsi Yeh
  normalize_chars[0x0643] = U"ک";  // Arabic Kaf -> Keheh
  for (char32_t d = 0; d < 10; ++d) {
    normalize_chars[0x06F0 + d] = std::u32string(1, U'0' + d);
    normalize_chars[0x0660 + d] = std::u32string(1, U'0' + d);
  }
  normalize_chars[0x0640] = U"";  // tatweel
  for (char32_t mark = 0x064B; mark <= 0x0652; ++mark) normalize_chars[mark] = U"";

  for (char c : std::string_view("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")) {
    punctuation.insert(static_cast<char32_t>(c));
  }
  for (char32_t cp : std::u32string_view(
           U"،؛؟«»٪٫٬۔"
           U"…–—‘’“”•·")) {
    punctuation.insert(cp);
  }
}

void PreprocessConfig::add_stopword(std::string_view word) {
  std::string normalized = normalize(word, *this);
  if (!normalized.empty()) stopwords.insert(std::move(normalized));
}

void PreprocessConfig::load_stopwords(std::istream& in) {
  for_each_data_line(in, [&](const std::string& line, std::size_t) {
    add_stopword(line);
  });
}

void PreprocessConfig::load_stopwords(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  load_stopwords(in);
}

void PreprocessConfig::load_lemma_rules(std::istream& in) {
  for_each_data_line(in, [&](const std::string& line, std::size_t number) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    for (std::string& f : fields) f = normalize(f, *this);
    for (const std::string& f : fields) {
      for (char32_t cp : utf8::decode(f)) {
        if (punctuation.count(cp) && f != "=") {
          invalid("lemma rules line " + std::to_string(number) + " contains punctuation");
        }
      }
    }
    if (fields.size() == 3 && fields[1] == "=") {
      lemma_rules.add_exception(fields[0], fields[2]);
    } else if (fields.size() <= 2) {
      lemma_rules.add_rule(fields[0], fields.size() == 2 ? fields[1] : std::string());
    } else {
      invalid("lemma rules line " + std::to_string(number) + " is malformed");
    }
  });
}

void PreprocessConfig::load_lemma_rules(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  load_lemma_rules(in);
}

std::string normalize(std::string_view text, const PreprocessConfig& config) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  const auto emit = [&](char32_t cp) {
    if (utf8::is_space(cp)) {
      pending_space = !out.empty();
      return;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    if (cp >= U'A' && cp <= U'Z') cp += U'a' - U'A';
    utf8::append(out, cp);
  };
  for (char32_t cp : utf8::decode(text)) {
    if (const auto it = config.normalize_chars.find(cp); it != config.normalize_chars.end()) {
      for (char32_t mapped : it->second) emit(mapped);
    } else {
      emit(cp);
    }
  }
  return out;
}

std::string remove_punctuation(std::string_view text, const PreprocessConfig& config) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::decode(text)) {
    utf8::append(out, config.punctuation.count(cp) ? U' ' : cp);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text, std::size_t min_token_length) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t current_length = 0;
  const auto flush = [&] {
    if (current_length > 0 && current_length >= min_token_length) {
      tokens.push_back(std::move(current));
    }
    current.clear();
    current_length = 0;
  };
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_space(cp)) {
      flush();
    } else {
      utf8::append(current, cp);
      ++current_length;
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (!stopwords.count(t)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                   const LemmaRules& rules) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(rules.lemmatize(t));
  return out;
}

std::vector<std::string> preprocess_text(std::string_view text,
                                         const PreprocessConfig& config) {
  const std::string cleaned = remove_punctuation(normalize(text, config), config);
  std::vector<std::string> tokens = lemmatize(
      remove_stopwords(tokenize(cleaned, config.min_token_length), config.stopwords),
      config.lemma_rules);
  std::erase_if(tokens, [&](const std::string& t) {
    return utf8::length(t) < config.min_token_length || config.stopwords.count(t) > 0;
  });
  return tokens;
}

Document preprocess_document(const LawRecord& record, const PreprocessConfig& config) {
  Document doc;
  doc.record_id = record.id;
  doc.gregorian_year = record.date.gregorian_year;
  doc.tokens = preprocess_text(record.title + " " + record.content, config);
  if (doc.tokens.empty()) {
    throw Error(ErrorCode::kEmptyDocument, std::string(kModule), record.id);
  }
  return doc;
}

PreprocessedCorpus preprocess_corpus(const Corpus& corpus, const PreprocessConfig& config) {
  PreprocessedCorpus out;
  out.documents.reserve(corpus.size());
  for (const LawRecord& record : corpus) {
    try {
      out.documents.push_back(preprocess_document(record, config));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyDocument) throw;
      out.dropped_ids.push_back(record.id);
    }
  }
  return out;
}

ValidationReport validate_nonempty(const Corpus& corpus, const PreprocessConfig& config) {
  ValidationReport report;
  for (const LawRecord& r : corpus) {
    const bool blank = r.id.empty() || utf8::trim(r.title).empty() ||
                       utf8::trim(r.content).empty() || utf8::trim(r.category).empty() ||
                       utf8::trim(r.date.raw).empty();
    if (blank) report.null_fields.push_back(r.id);
    if (preprocess_text(r.title + " " + r.content, config).empty()) {
      report.empty_after_preprocess.push_back(r.id);
    }
  }
  return report;
}

}  // namespace lextopic

#include <fstream>
#include <functional>
#include <unordered_set>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lextopic/corpus.h"
#include "lextopic/error.h"
#include "lextopic/utf8.h"

namespace lextopic {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kModule = "corpus";

std::string row_context(std::size_t row, std::string_view detail) {
  return "row " + std::to_string(row) + ": " + std::string(detail);
}

// Rethrows an Error raised while reading one row with the row number added.
[[noreturn]] void rethrow_with_row(const Error& e, std::size_t row) {
  throw Error(e.code(), e.module(), row_context(row, e.detail()));
}

// Field lookup with the Table 1 header names accepted as aliases.
struct FieldNames {
  std::string_view canonical;
  std::string_view alias;
};

constexpr FieldNames kLawTypeField{"law_type", "type"};
constexpr FieldNames kCategoryField{"category", "categories"};

const json* find_field(const json& row, FieldNames names) {
  if (auto it = row.find(names.canonical); it != row.end()) return &*it;
  if (!names.alias.empty()) {
    if (auto it = row.find(names.alias); it != row.end()) return &*it;
  }
  return nullptr;
}

std::string string_field(const json& row, FieldNames names, bool required) {
  const json* value = find_field(row, names);
  if (value == nullptr || value->is_null()) {
    if (required) {
      throw Error(ErrorCode::kMissingField, std::string(kModule),
                  std::string(names.canonical));
    }
    return {};
  }
  if (!value->is_string()) {
    throw Error(ErrorCode::kMissingField, std::string(kModule),
                std::string(names.canonical) + " is not a string");
  }
  return value->get<std::string>();
}

std::vector<std::string> list_field(const json& row, FieldNames names) {
  const json* value = find_field(row, names);
  if (value == nullptr || value->is_null()) return {};
  if (value->is_string()) return {value->get<std::string>()};
  if (!value->is_array()) {
    throw Error(ErrorCode::kMissingField, std::string(kModule),
                std::string(names.canonical) + " is not a list");
  }
  std::vector<std::string> out;
  for (const json& item : *value) out.push_back(item.get<std::string>());
  return out;
}

LawRecord record_from_fields(
    const std::function<std::string(FieldNames, bool)>& get_string,
    const std::function<std::vector<std::string>(FieldNames)>& get_list) {
  LawRecord r;
  r.id = get_string({"id", ""}, true);
  if (r.id.empty()) throw Error(ErrorCode::kMissingField, std::string(kModule), "id");
  r.title = get_string({"title", ""}, true);
  r.content = get_string({"content", ""}, true);
  r.lead = get_string({"lead", ""}, false);
  r.tags = get_list({"tags", ""});
  r.classes = get_list({"classes", ""});
  r.law_type = parse_law_type(get_string(kLawTypeField, true));
  r.category = get_string(kCategoryField, true);
  r.date = parse_record_date(get_string({"date", ""}, true));
  return r;
}

// Validates per-row invariants and uniqueness while rows stream in, so the
// error carries the row number.
class RecordCollector {
 public:
  void add(LawRecord record, std::size_t row) {
    if (utf8::trim(record.title).empty()) {
      throw Error(ErrorCode::kMissingField, std::string(kModule),
                  row_context(row, "title"));
    }
    if (!ids_.insert(record.id).second) {
      throw Error(ErrorCode::kDuplicateId, std::string(kModule),
                  record.id + " (row " + std::to_string(row) + ")");
    }
    records_.push_back(std::move(record));
  }

  Corpus finish(std::string source) {
    return Corpus(std::move(records_), std::move(source));
  }

 private:
  std::vector<LawRecord> records_;
  std::unordered_set<std::string> ids_;
};

// RFC 4180 reader: quoted fields may contain commas, quotes ("") and newlines.
bool read_csv_row(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

std::string csv_escape(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> split_list(const std::string& cell) {
  std::vector<std::string> out;
  if (cell.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = cell.find('|', start);
    out.push_back(cell.substr(start, bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back('|');
    out += items[i];
  }
  return out;
}

}  // namespace

CorpusFormat parse_corpus_format(std::string_view text) {
  if (text == "jsonl") return CorpusFormat::kJsonl;
  if (text == "csv") return CorpusFormat::kCsv;
  throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
              "unknown corpus format " + std::string(text));
}

Corpus read_jsonl(std::istream& in, std::string source_description) {
  RecordCollector collector;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json parsed;
    try {
      parsed = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMissingField, std::string(kModule),
                  row_context(row, std::string("invalid JSON: ") + e.what()));
    }
    if (!parsed.is_object()) {
      throw Error(ErrorCode::kMissingField, std::string(kModule),
                  row_context(row, "not a JSON object"));
    }
    LawRecord record;
    try {
      record = record_from_fields(
          [&](FieldNames n, bool req) { return string_field(parsed, n, req); },
          [&](FieldNames n) { return list_field(parsed, n); });
    } catch (const Error& e) {
      rethrow_with_row(e, row);
    }
    collector.add(std::move(record), row);
  }
  return collector.finish(std::move(source_description));
}

Corpus read_csv(std::istream& in, std::string source_description) {
  std::vector<std::string> header;
  if (!read_csv_row(in, header)) return Corpus({}, std::move(source_description));
  if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    header[0].erase(0, 3);  // UTF-8 BOM
  }
  RecordCollector collector;
  std::vector<std::string> cells;
  std::size_t row = 0;
  while (read_csv_row(in, cells)) {
    ++row;
    if (cells.size() == 1 && cells[0].empty()) continue;
    const auto column = [&](FieldNames n) -> const std::string* {
      for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
        if (header[i] == n.canonical || (!n.alias.empty() && header[i] == n.alias)) {
          return &cells[i];
        }
      }
      return nullptr;
    };
    LawRecord record;
    try {
      record = record_from_fields(
          [&](FieldNames n, bool req) -> std::string {
            const std::string* cell = column(n);
            if (cell == nullptr) {
              if (req) {
                throw Error(ErrorCode::kMissingField, std::string(kModule),
                            std::string(n.canonical));
              }
              return {};
            }
            return *cell;
          },
          [&](FieldNames n) {
            const std::string* cell = column(n);
            return cell == nullptr ? std::vector<std::string>{} : split_list(*cell);
          });
    } catch (const Error& e) {
      rethrow_with_row(e, row);
    }
    collector.add(std::move(record), row);
  }
  return collector.finish(std::move(source_description));
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, std::string(kModule), "cannot open " + path.string());
  return format == CorpusFormat::kJsonl ? read_jsonl(in, path.string())
                                        : read_csv(in, path.string());
}

std::string to_jsonl_line(const LawRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["content"] = r.content;
  j["lead"] = r.lead;
  j["tags"] = r.tags;
  j["classes"] = r.classes;
  j["law_type"] = law_type_name(r.law_type);
  j["category"] = r.category;
  j["date"] = r.date.raw;
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const LawRecord& r : corpus) out << to_jsonl_line(r) << '\n';
}

void write_csv(const Corpus& corpus, std::ostream& out) {
  out << "id,title,content,lead,tags,classes,law_type,category,date\n";
  for (const LawRecord& r : corpus) {
    out << csv_escape(r.id) << ',' << csv_escape(r.title) << ','
        << csv_escape(r.content) << ',' << csv_escape(r.lead) << ','
        << csv_escape(join_list(r.tags)) << ',' << csv_escape(join_list(r.classes))
        << ',' << law_type_name(r.law_type) << ',' << csv_escape(r.category) << ','
        << csv_escape(r.date.raw) << '\n';
  }
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, std::string(kModule), "cannot write " + path.string());
  if (format == CorpusFormat::kJsonl) {
    write_jsonl(corpus, out);
  } else {
    write_csv(corpus, out);
  }
}

}  // namespace lextopic

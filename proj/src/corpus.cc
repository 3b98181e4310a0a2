#include "lextopic/corpus.h"

#include <algorithm>
#include <cctype>

#include "lextopic/error.h"
#include "lextopic/utf8.h"

namespace lextopic {
namespace {

std::string fold(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '-' || c == '\t') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

std::string_view law_type_name(LawType type) {
  switch (type) {
    case LawType::kNews: return "News";
    case LawType::kDraft: return "Draft";
    case LawType::kVote: return "Vote";
    case LawType::kPlan: return "Plan";
    case LawType::kLaw: return "Law";
    case LawType::kBill: return "Bill";
    case LawType::kParliamentDeliberation: return "ParliamentDeliberation";
    case LawType::kRegulation: return "Regulation";
    case LawType::kOpinion: return "Opinion";
  }
  return "";
}

LawType parse_law_type(std::string_view text) {
  const std::string key = fold(utf8::trim(text));
  for (LawType type : kAllLawTypes) {
    const std::string name = fold(law_type_name(type));
    // Plural display forms: "Regulations", "Parliament deliberations".
    if (key == name || (type != LawType::kNews && key == name + "s")) return type;
  }
  throw Error(ErrorCode::kUnknownLawType, "corpus", std::string(text));
}

Corpus::Corpus(std::vector<LawRecord> records, std::string source_description)
    : records_(std::move(records)),
      source_description_(std::move(source_description)) {
  by_id_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const LawRecord& r = records_[i];
    if (r.id.empty()) {
      throw Error(ErrorCode::kMissingField, "corpus",
                  "record " + std::to_string(i + 1) + ": id");
    }
    if (utf8::trim(r.title).empty()) {
      throw Error(ErrorCode::kMissingField, "corpus", r.id + ": title");
    }
    if (!by_id_.emplace(r.id, i).second) {
      throw Error(ErrorCode::kDuplicateId, "corpus", r.id);
    }
  }
}

const LawRecord* Corpus::find(std::string_view id) const {
  const auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &records_[it->second];
}

Corpus filter_by_type(const Corpus& corpus, LawType type) {
  std::vector<LawRecord> kept;
  for (const LawRecord& r : corpus) {
    if (r.law_type == type) kept.push_back(r);
  }
  return Corpus(std::move(kept), corpus.source_description());
}

TrendTable type_counts_by_year(const Corpus& corpus) {
  std::vector<LawType> types;
  std::vector<int> years;
  for (const LawRecord& r : corpus) {
    if (std::find(types.begin(), types.end(), r.law_type) == types.end()) {
      types.push_back(r.law_type);
    }
    if (std::find(years.begin(), years.end(), r.date.gregorian_year) == years.end()) {
      years.push_back(r.date.gregorian_year);
    }
  }
  std::sort(types.begin(), types.end());
  std::sort(years.begin(), years.end());

  std::vector<std::string> labels;
  for (LawType t : types) labels.emplace_back(law_type_name(t));
  TrendTable table(std::move(labels), years);
  for (const LawRecord& r : corpus) {
    const auto row = std::find(types.begin(), types.end(), r.law_type) - types.begin();
    const auto col =
        std::find(years.begin(), years.end(), r.date.gregorian_year) - years.begin();
    table.add(row, col);
  }
  table.normalize(NormalizationAxis::kTotal);
  return table;
}

double length_ratio(const LawRecord& record) {
  const std::size_t content = utf8::length(utf8::trim(record.content));
  if (content == 0) throw Error(ErrorCode::kEmptyContent, "corpus", record.id);
  const std::size_t title = utf8::length(utf8::trim(record.title));
  return static_cast<double>(title) / static_cast<double>(content);
}

}  // namespace lextopic

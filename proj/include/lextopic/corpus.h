#ifndef LEXTOPIC_CORPUS_H_
#define LEXTOPIC_CORPUS_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lextopic/calendar.h"
#include "lextopic/trend_table.h"

namespace lextopic {

// Record types.
enum class LawType {
  kNews,
  kDraft,
  kVote,
  kPlan,
  kLaw,
  kBill,
  kParliamentDeliberation,
  kRegulation,
  kOpinion,
};

inline constexpr std::array<LawType, 9> kAllLawTypes = {
    LawType::kNews, LawType::kDraft, LawType::kVote,
    LawType::kPlan, LawType::kLaw, LawType::kBill,
    LawType::kParliamentDeliberation, LawType::kRegulation, LawType::kOpinion,
};

std::string_view law_type_name(LawType type);

// Accepts the canonical names ("ParliamentDeliberation") as well as the
// display forms seen on the site ("Parliament deliberations"), case
// insensitively. Throws Error(UnknownLawType).
LawType parse_law_type(std::string_view text);

struct RecordDate {
  std::string raw;
  int jalali_year = 0;
  int jalali_month = 0;
  int jalali_day = 0;
  int gregorian_year = 0;

  bool has_year() const { return gregorian_year != 0; }
  calendar::JalaliDate jalali() const {
    return {jalali_year, jalali_month, jalali_day};
  }
  bool operator==(const RecordDate&) const = default;
};

// Parses a published date. Recognized shapes:
//   "Saturday, July 10, 1402"  Gregorian month name over a Jalali day/year;
//                              the name stands for the Jalali month that
//                              mostly overlaps it (July -> Tir).
//   "10 Tir 1402", "۱۰ تیر ۱۴۰۲"  Jalali month names.
//   "1402/04/10", "1402-04-10"    year/month/day.
//   "04/10/1402"                  month/day/year.
// Persian and Arabic-Indic digits are accepted. Weekday names are ignored.
// Throws Error(MalformedDate).
RecordDate parse_record_date(std::string_view raw);

// Builds a date whose raw text is the canonical "YYYY/MM/DD" form.
RecordDate make_record_date(const calendar::JalaliDate& date);

struct LawRecord {
  std::string id;
  std::string title;
  std::string content;
  std::string lead;
  std::vector<std::string> tags;
  std::vector<std::string> classes;
  LawType law_type = LawType::kRegulation;
  std::string category;
  RecordDate date;

  bool operator==(const LawRecord&) const = default;
};

// Ordered, id-unique collection of records. Immutable once built.
class Corpus {
 public:
  Corpus() = default;
  // Throws Error(DuplicateId) or Error(MissingField) on an invalid record.
  explicit Corpus(std::vector<LawRecord> records,
                  std::string source_description = {});

  const std::vector<LawRecord>& records() const { return records_; }
  const std::string& source_description() const { return source_description_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }
  const LawRecord& operator[](std::size_t i) const { return records_[i]; }

  // nullptr when absent.
  const LawRecord* find(std::string_view id) const;

 private:
  std::vector<LawRecord> records_;
  std::string source_description_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

enum class CorpusFormat { kJsonl, kCsv };

CorpusFormat parse_corpus_format(std::string_view text);

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);
Corpus read_jsonl(std::istream& in, std::string source_description = {});
Corpus read_csv(std::istream& in, std::string source_description = {});

// Canonical serializations. Field order: id, title, content, lead, tags,
// classes, law_type, category, date. CSV joins list fields with '|'.
std::string to_jsonl_line(const LawRecord& record);
void write_jsonl(const Corpus& corpus, std::ostream& out);
void write_csv(const Corpus& corpus, std::ostream& out);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format);

Corpus filter_by_type(const Corpus& corpus, LawType type);

// Rows are the law types present (enum order), columns the Gregorian years
// present (ascending). Percentages are shares of the grand total.
TrendTable type_counts_by_year(const Corpus& corpus);

// |title| / |content| in code points after trimming both.
// Throws Error(EmptyContent).
double length_ratio(const LawRecord& record);

}  // namespace lextopic

#endif  // LEXTOPIC_CORPUS_H_

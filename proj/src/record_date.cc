#include <algorithm>
#include <array>
#include <cstdio>
#include <cctype>
#include <string>
#include <vector>

#include "lextopic/corpus.h"
#include "lextopic/error.h"
#include "lextopic/utf8.h"

namespace lextopic {
namespace {

constexpr std::array<std::string_view, 12> kGregorianMonths = {
    "january", "february", "march", "april", "may", "june",
    "july", "august", "september", "october", "november", "december"};

constexpr std::array<std::string_view, 12> kJalaliMonths = {
    "farvardin", "ordibehesht", "khordad", "tir", "mordad", "shahrivar",
    "mehr", "aban", "azar", "dey", "bahman", "esfand"};

constexpr std::array<std::string_view, 12> kJalaliMonthsPersian = {
    "فروردین", "اردیبهشت", "خرداد", "تیر", "مرداد", "شهریور",
    "مهر", "آبان", "آذر", "دی", "بهمن", "اسفند"};

[[noreturn]] void malformed(std::string_view raw) {
  throw Error(ErrorCode::kMalformedDate, "corpus", std::string(raw));
}

bool is_delimiter(char32_t cp) {
  return utf8::is_space(cp) || cp == U',' || cp == U'/' || cp == U'-' ||
         cp == U'.' || cp == 0x060C;  // Arabic comma
}

char32_t ascii_digit(char32_t cp) {
  if (cp >= 0x06F0 && cp <= 0x06F9) return U'0' + (cp - 0x06F0);
  if (cp >= 0x0660 && cp <= 0x0669) return U'0' + (cp - 0x0660);
  return cp;
}

// Returns the Jalali month (1-12) a word names, or 0.
int month_from_word(const std::string& word) {
  std::string lower;
  for (char c : word) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (int g = 0; g < 12; ++g) {
    const std::string_view name = kGregorianMonths[g];
    if (lower == name || (lower.size() == 3 && name.substr(0, 3) == lower)) {
      // Gregorian month g+1 labels the Jalali month starting inside it.
      return (g + 12 - 3) % 12 + 1;
    }
  }
  for (int j = 0; j < 12; ++j) {
    if (lower == kJalaliMonths[j] || word == kJalaliMonthsPersian[j]) return j + 1;
  }
  return 0;
}

}  // namespace

RecordDate parse_record_date(std::string_view raw) {
  std::vector<std::string> pieces;
  std::string current;
  for (char32_t cp : utf8::decode(raw)) {
    if (is_delimiter(cp)) {
      if (!current.empty()) pieces.push_back(std::move(current));
      current.clear();
      continue;
    }
    utf8::append(current, ascii_digit(cp));
  }
  if (!current.empty()) pieces.push_back(std::move(current));

  std::vector<std::string> numbers;
  int named_month = 0;
  for (const std::string& p : pieces) {
    const bool numeric = std::all_of(p.begin(), p.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
    if (numeric) {
      if (p.size() > 4) malformed(raw);
      numbers.push_back(p);
    } else if (int m = month_from_word(p); m != 0) {
      if (named_month != 0) malformed(raw);
      named_month = m;
    }
  }

  calendar::JalaliDate date;
  if (named_month != 0) {
    if (numbers.size() != 2) malformed(raw);
    const bool first_is_year = numbers[0].size() == 4;
    if (first_is_year == (numbers[1].size() == 4)) malformed(raw);
    date.year = std::stoi(first_is_year ? numbers[0] : numbers[1]);
    date.day = std::stoi(first_is_year ? numbers[1] : numbers[0]);
    date.month = named_month;
  } else {
    if (numbers.size() != 3) malformed(raw);
    if (numbers[0].size() == 4 && numbers[2].size() <= 2) {
      date = {std::stoi(numbers[0]), std::stoi(numbers[1]), std::stoi(numbers[2])};
    } else if (numbers[2].size() == 4 && numbers[0].size() <= 2) {
      date = {std::stoi(numbers[2]), std::stoi(numbers[0]), std::stoi(numbers[1])};
    } else {
      malformed(raw);
    }
  }

  try {
    calendar::validate_jalali(date);
  } catch (const Error&) {
    malformed(raw);
  }
  RecordDate out;
  out.raw = std::string(raw);
  out.jalali_year = date.year;
  out.jalali_month = date.month;
  out.jalali_day = date.day;
  out.gregorian_year = calendar::jalali_to_gregorian(date).year;
  return out;
}

RecordDate make_record_date(const calendar::JalaliDate& date) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d/%02d/%02d", date.year, date.month, date.day);
  return parse_record_date(buf);
}

}  // namespace lextopic

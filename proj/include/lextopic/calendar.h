#ifndef LEXTOPIC_CALENDAR_H_
#define LEXTOPIC_CALENDAR_H_

#include <compare>
#include <cstdint>

namespace lextopic::calendar {

struct JalaliDate {
  int year = 0;
  int month = 0;
  int day = 0;
  auto operator<=>(const JalaliDate&) const = default;
};

struct GregorianDate {
  int year = 0;
  int month = 0;
  int day = 0;
  auto operator<=>(const GregorianDate&) const = default;
};

// Arithmetic 33-year cycle, valid for the years this library accepts.
inline constexpr int kMinJalaliYear = 1200;
inline constexpr int kMaxJalaliYear = 1600;

bool is_jalali_leap_year(int year);
int jalali_month_length(int year, int month);

// Throws Error(MalformedDate) when the components do not name a real day.
void validate_jalali(const JalaliDate& date);

std::int64_t jalali_to_day_number(const JalaliDate& date);
JalaliDate day_number_to_jalali(std::int64_t jdn);
std::int64_t gregorian_to_day_number(const GregorianDate& date);
GregorianDate day_number_to_gregorian(std::int64_t jdn);

GregorianDate jalali_to_gregorian(const JalaliDate& date);
JalaliDate gregorian_to_jalali(const GregorianDate& date);

// Gregorian year containing the given Solar Hijri day.
int jalali_to_gregorian_year(int year, int month, int day);

}  // namespace lextopic::calendar

#endif  // LEXTOPIC_CALENDAR_H_

#include "lextopic/calendar.h"

#include <string>

#include "lextopic/error.h"

namespace lextopic::calendar {
namespace {

// Julian day number of 1 Farvardin, year 1.
constexpr std::int64_t kPersianEpoch = 1948320;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

// Days preceding the 1-based month within a Jalali year.
int days_before_month(int month) {
  return month <= 7 ? 31 * (month - 1) : 30 * (month - 1) + 6;
}

std::int64_t year_start(int year) {
  return kPersianEpoch - 1 + 365LL * (year - 1) + floor_div(8LL * year + 21, 33);
}

}  // namespace

bool is_jalali_leap_year(int year) {
  return floor_mod(25LL * year + 11, 33) < 8;
}

int jalali_month_length(int year, int month) {
  if (month <= 6) return 31;
  if (month <= 11) return 30;
  return is_jalali_leap_year(year) ? 30 : 29;
}

void validate_jalali(const JalaliDate& date) {
  const auto fail = [&] {
    throw Error(ErrorCode::kMalformedDate, "corpus",
                std::to_string(date.year) + "/" + std::to_string(date.month) +
                    "/" + std::to_string(date.day));
  };
  if (date.year < kMinJalaliYear || date.year > kMaxJalaliYear) fail();
  if (date.month < 1 || date.month > 12) fail();
  if (date.day < 1 || date.day > jalali_month_length(date.year, date.month)) fail();
}

std::int64_t jalali_to_day_number(const JalaliDate& date) {
  return year_start(date.year) + days_before_month(date.month) + date.day;
}

JalaliDate day_number_to_jalali(std::int64_t jdn) {
  const std::int64_t since_epoch = jdn - kPersianEpoch;
  const int year = static_cast<int>(1 + floor_div(33 * since_epoch + 3, 12053));
  const std::int64_t farvardin1 = 365LL * (year - 1) + floor_div(8LL * year + 21, 33);
  const int day_of_year = static_cast<int>(since_epoch - farvardin1);  // 0-based
  const int month = day_of_year < 216 ? day_of_year / 31 : (day_of_year - 6) / 30;
  return {year, month + 1, day_of_year - days_before_month(month + 1) + 1};
}

std::int64_t gregorian_to_day_number(const GregorianDate& date) {
  const std::int64_t a = (14 - date.month) / 12;
  const std::int64_t y = date.year + 4800 - a;
  const std::int64_t m = date.month + 12 * a - 3;
  return date.day + (153 * m + 2) / 5 + 365 * y + floor_div(y, 4) -
         floor_div(y, 100) + floor_div(y, 400) - 32045;
}

GregorianDate day_number_to_gregorian(std::int64_t jdn) {
  const std::int64_t a = jdn + 32044;
  const std::int64_t b = floor_div(4 * a + 3, 146097);
  const std::int64_t c = a - floor_div(146097 * b, 4);
  const std::int64_t d = floor_div(4 * c + 3, 1461);
  const std::int64_t e = c - floor_div(1461 * d, 4);
  const std::int64_t m = floor_div(5 * e + 2, 153);
  return {static_cast<int>(100 * b + d - 4800 + m / 10),
          static_cast<int>(m + 3 - 12 * (m / 10)),
          static_cast<int>(e - floor_div(153 * m + 2, 5) + 1)};
}

GregorianDate jalali_to_gregorian(const JalaliDate& date) {
  validate_jalali(date);
  return day_number_to_gregorian(jalali_to_day_number(date));
}

JalaliDate gregorian_to_jalali(const GregorianDate& date) {
  return day_number_to_jalali(gregorian_to_day_number(date));
}

int jalali_to_gregorian_year(int year, int month, int day) {
  return jalali_to_gregorian({year, month, day}).year;
}

}  // namespace lextopic::calendar

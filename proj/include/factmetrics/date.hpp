#pragma once

#include <chrono>
#include <cstdio>
#include <string>

#include "factmetrics/error.hpp"

namespace factmetrics {

using Date = std::chrono::year_month_day;

// Parses a strict ISO-8601 calendar date "YYYY-MM-DD" (UTC).
inline Date parse_date(const std::string& text) {
    int y = 0, m = 0, d = 0;
    char tail = '\0';
    if (text.size() != 10 ||
        std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) != 3) {
        throw data_error("invalid date '" + text + "', expected YYYY-MM-DD");
    }
    const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                    std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) {
        throw data_error("invalid calendar date '" + text + "'");
    }
    return date;
}

inline std::string format_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

// Whole days from `from` to `to`; negative when `to` precedes `from`.
inline long long days_between(const Date& from, const Date& to) {
    const auto a = std::chrono::sys_days{from};
    const auto b = std::chrono::sys_days{to};
    return (b - a).count();
}

inline Date add_days(const Date& date, long long days) {
    return Date{std::chrono::sys_days{date} + std::chrono::days{days}};
}

}  // namespace factmetrics

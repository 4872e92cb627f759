#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "factmetrics/error.hpp"
#include "factmetrics/records.hpp"

namespace factmetrics::ingest {

namespace detail {

inline std::string line_ctx(std::size_t line_no) {
    return "line " + std::to_string(line_no) + ": ";
}

inline std::int64_t require_count(const nlohmann::json& obj, const char* key,
                                  std::size_t line_no) {
    if (!obj.contains(key)) {
        throw data_error(line_ctx(line_no) + "missing field '" + key + "'");
    }
    const auto& v = obj.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw data_error(line_ctx(line_no) + "field '" + key + "' must be an integer");
    }
    const auto n = v.get<std::int64_t>();
    if (n < 0) {
        throw data_error(line_ctx(line_no) + "field '" + key + "' must be non-negative");
    }
    return n;
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  std::size_t line_no) {
    if (!obj.contains(key) || !obj.at(key).is_string()) {
        throw data_error(line_ctx(line_no) + "field '" + key + "' must be a string");
    }
    return obj.at(key).get<std::string>();
}

inline nlohmann::json parse_json_line(const std::string& line, std::size_t line_no) {
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
        throw data_error(line_ctx(line_no) + "malformed JSON object");
    }
    return obj;
}

}  // namespace detail

// Parses the JSON-lines user file: one object per line with keys user_id,
// follower_count, followed_count, total_tweet_count, registered_at
// (ISO-8601 date), verified. Records are returned in input order; a
// duplicate user_id is an error.
inline std::vector<UserRecord> parse_users(std::istream& in) {
    std::vector<UserRecord> users;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const nlohmann::json obj = detail::parse_json_line(line, line_no);

        UserRecord u;
        u.user_id = detail::require_string(obj, "user_id", line_no);
        if (u.user_id.empty()) {
            throw data_error(detail::line_ctx(line_no) + "field 'user_id' must be non-empty");
        }
        u.follower_count = detail::require_count(obj, "follower_count", line_no);
        u.followed_count = detail::require_count(obj, "followed_count", line_no);
        u.total_tweet_count = detail::require_count(obj, "total_tweet_count", line_no);
        try {
            u.registered_at = parse_date(detail::require_string(obj, "registered_at", line_no));
        } catch (const data_error& e) {
            throw data_error(detail::line_ctx(line_no) + "field 'registered_at': " + e.what());
        }
        if (!obj.contains("verified") || !obj.at("verified").is_boolean()) {
            throw data_error(detail::line_ctx(line_no) + "field 'verified' must be a boolean");
        }
        u.verified = obj.at("verified").get<bool>();

        if (!seen.insert(u.user_id).second) {
            throw data_error("duplicate user_id '" + u.user_id + "'");
        }
        users.push_back(std::move(u));
    }
    return users;
}

// Parses the JSON-lines tweet file: tweet_id, user_id, urls (array of strings).
inline std::vector<TweetRecord> parse_tweets(std::istream& in) {
    std::vector<TweetRecord> tweets;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const nlohmann::json obj = detail::parse_json_line(line, line_no);

        TweetRecord t;
        t.tweet_id = detail::require_string(obj, "tweet_id", line_no);
        t.user_id = detail::require_string(obj, "user_id", line_no);
        if (t.tweet_id.empty() || t.user_id.empty()) {
            throw data_error(detail::line_ctx(line_no) + "tweet_id and user_id must be non-empty");
        }
        if (!obj.contains("urls") || !obj.at("urls").is_array()) {
            throw data_error(detail::line_ctx(line_no) + "field 'urls' must be an array");
        }
        for (const auto& u : obj.at("urls")) {
            if (!u.is_string()) {
                throw data_error(detail::line_ctx(line_no) + "field 'urls' must contain strings");
            }
            t.urls.push_back(u.get<std::string>());
        }
        if (!seen.insert(t.tweet_id).second) {
            throw data_error("duplicate tweet_id '" + t.tweet_id + "'");
        }
        tweets.push_back(std::move(t));
    }
    return tweets;
}

inline void write_users(std::ostream& out, const std::vector<UserRecord>& users) {
    for (const auto& u : users) {
        nlohmann::json obj = {
            {"user_id", u.user_id},
            {"follower_count", u.follower_count},
            {"followed_count", u.followed_count},
            {"total_tweet_count", u.total_tweet_count},
            {"registered_at", format_date(u.registered_at)},
            {"verified", u.verified},
        };
        out << obj.dump() << '\n';
    }
}

inline void write_tweets(std::ostream& out, const std::vector<TweetRecord>& tweets) {
    for (const auto& t : tweets) {
        nlohmann::json obj = {
            {"tweet_id", t.tweet_id},
            {"user_id", t.user_id},
            {"urls", t.urls},
        };
        out << obj.dump() << '\n';
    }
}

// Hostname of an absolute http/https URL, lowercased, with one leading
// "www." label removed. No public-suffix processing: the registry join key
// is exactly this normalized hostname.
inline std::string extract_domain(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw data_error("not an absolute http/https URL: '" + url + "'");
    }
    std::string scheme = url.substr(0, scheme_end);
    std::transform(scheme.begin(), scheme.end(), scheme.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (scheme != "http" && scheme != "https") {
        throw data_error("unsupported URL scheme '" + scheme + "'");
    }

    std::string authority = url.substr(scheme_end + 3);
    const auto path_start = authority.find_first_of("/?#");
    if (path_start != std::string::npos) authority.resize(path_start);
    // strip userinfo and port
    const auto at = authority.find_last_of('@');
    if (at != std::string::npos) authority.erase(0, at + 1);
    const auto colon = authority.find(':');
    if (colon != std::string::npos) authority.resize(colon);

    std::transform(authority.begin(), authority.end(), authority.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (authority.rfind("www.", 0) == 0) authority.erase(0, 4);
    if (authority.empty()) {
        throw data_error("URL has no host: '" + url + "'");
    }
    return authority;
}

// Derives the four analysis metrics for one user at a shared reference date.
// Day counts are whole UTC days; tweets_per_day divides by max(1, days) so
// day-old accounts stay finite.
inline AccountMetrics derive_account_metrics(const UserRecord& user, const Date& reference_date) {
    const long long days = days_between(user.registered_at, reference_date);
    if (days < 0) {
        throw data_error("user '" + user.user_id + "' registered after reference date");
    }
    const auto ratio = [](std::int64_t num, std::int64_t den) -> double {
        if (den > 0) return static_cast<double>(num) / static_cast<double>(den);
        if (num == 0) return 0.0;  // 0/0 convention
        return std::numeric_limits<double>::infinity();
    };
    AccountMetrics m;
    m.days_since_registration = days;
    m.tweets_per_day = static_cast<double>(user.total_tweet_count) /
                       static_cast<double>(std::max<long long>(1, days));
    m.follower_followed_ratio = ratio(user.follower_count, user.followed_count);
    m.followed_follower_ratio = ratio(user.followed_count, user.follower_count);
    return m;
}

}  // namespace factmetrics::ingest

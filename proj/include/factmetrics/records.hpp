#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "factmetrics/date.hpp"

namespace factmetrics {

// Raw per-account observation as retrieved from the platform.
struct UserRecord {
    std::string user_id;
    std::int64_t follower_count = 0;
    std::int64_t followed_count = 0;
    std::int64_t total_tweet_count = 0;
    Date registered_at{};
    bool verified = false;

    bool operator==(const UserRecord&) const = default;
};

struct TweetRecord {
    std::string tweet_id;
    std::string user_id;
    std::vector<std::string> urls;

    bool operator==(const TweetRecord&) const = default;
};

// The four analysis metrics derived from a UserRecord against a reference
// date. Ratio conventions: x/0 = +infinity for x > 0, 0/0 = 0.
struct AccountMetrics {
    std::int64_t days_since_registration = 0;
    double tweets_per_day = 0.0;
    double follower_followed_ratio = 0.0;
    double followed_follower_ratio = 0.0;

    bool operator==(const AccountMetrics&) const = default;
};

}  // namespace factmetrics

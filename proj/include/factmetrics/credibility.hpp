#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "factmetrics/error.hpp"
#include "factmetrics/ingest.hpp"
#include "factmetrics/records.hpp"

namespace factmetrics::credibility {

// Six ordered source-reliability levels; ordinal index 0..5.
enum class ReliabilityLabel : int {
    VeryLow = 0,
    Low = 1,
    Mixed = 2,
    MostlyFactual = 3,
    High = 4,
    VeryHigh = 5,
};

inline constexpr int kLabelCount = 6;

inline constexpr std::array<const char*, kLabelCount> kLabelNames = {
    "VeryLow", "Low", "Mixed", "MostlyFactual", "High", "VeryHigh",
};

inline const char* label_name(ReliabilityLabel label) {
    return kLabelNames[static_cast<int>(label)];
}

inline std::optional<ReliabilityLabel> parse_label(const std::string& text) {
    for (int i = 0; i < kLabelCount; ++i) {
        if (text == kLabelNames[i]) return static_cast<ReliabilityLabel>(i);
    }
    return std::nullopt;
}

// domain -> reliability label, domains stored in extract_domain-normalized
// form (lowercase, one leading "www." removed).
class CredibilityRegistry {
public:
    void insert(const std::string& domain, ReliabilityLabel label) {
        std::string key = normalize(domain);
        if (!map_.emplace(std::move(key), label).second) {
            throw data_error("duplicate registry domain '" + normalize(domain) + "'");
        }
    }

    std::optional<ReliabilityLabel> lookup(const std::string& domain) const {
        const auto it = map_.find(domain);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t size() const { return map_.size(); }

    static std::string normalize(const std::string& domain) {
        std::string d = domain;
        std::transform(d.begin(), d.end(), d.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (d.rfind("www.", 0) == 0) d.erase(0, 4);
        return d;
    }

private:
    std::unordered_map<std::string, ReliabilityLabel> map_;
};

// Loads the registry from two-column CSV "domain,label". A single literal
// "domain,label" header line is tolerated.
inline CredibilityRegistry load_registry(std::istream& in) {
    CredibilityRegistry registry;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line == "domain,label") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 >= line.size()) {
            throw data_error("registry line " + std::to_string(line_no) +
                             ": expected 'domain,label'");
        }
        const std::string domain = line.substr(0, comma);
        const std::string label_text = line.substr(comma + 1);
        const auto label = parse_label(label_text);
        if (!label) {
            throw data_error("registry line " + std::to_string(line_no) +
                             ": unknown label '" + label_text + "'");
        }
        registry.insert(domain, *label);
    }
    return registry;
}

// Per-user share distribution of registry-matched links over the six labels.
struct FactualityVector {
    std::array<double, kLabelCount> shares{};
    std::int64_t matched_link_count = 0;
};

struct UserFactuality {
    std::string user_id;
    double score = 0.0;  // defined only when matched_link_count > 0
    std::int64_t matched_link_count = 0;
};

// Counts every URL occurrence whose domain is in the registry (a tweet with
// k matched URLs contributes k); unmatched URLs are excluded from both the
// numerator and the denominator. No matches yields the zero vector.
inline FactualityVector factuality_vector(const std::vector<TweetRecord>& tweets,
                                          const CredibilityRegistry& registry) {
    std::array<std::int64_t, kLabelCount> counts{};
    std::int64_t matched = 0;
    for (const auto& tweet : tweets) {
        for (const auto& url : tweet.urls) {
            std::string domain;
            try {
                domain = ingest::extract_domain(url);
            } catch (const data_error&) {
                continue;  // unparseable URL cannot match the registry
            }
            if (const auto label = registry.lookup(domain)) {
                ++counts[static_cast<int>(*label)];
                ++matched;
            }
        }
    }
    FactualityVector v;
    v.matched_link_count = matched;
    if (matched > 0) {
        for (int i = 0; i < kLabelCount; ++i) {
            v.shares[i] = static_cast<double>(counts[i]) / static_cast<double>(matched);
        }
    }
    return v;
}

// Scalar factuality score in [0,1]: ordinal index / 5 weighting of the share
// vector, so the six labels map to equally spaced scores 0, 0.2, ..., 1.
inline double user_score(const FactualityVector& v) {
    if (v.matched_link_count == 0) {
        throw data_error("factuality score undefined: no registry-matched links");
    }
    double score = 0.0;
    for (int i = 0; i < kLabelCount; ++i) {
        score += v.shares[i] * (static_cast<double>(i) / (kLabelCount - 1));
    }
    return score;
}

enum class Group : int { Low = 0, Middle = 1, High = 2 };

inline const char* group_name(Group g) {
    switch (g) {
        case Group::Low: return "Low";
        case Group::Middle: return "Middle";
        case Group::High: return "High";
    }
    return "?";
}

struct FactualityGrouping {
    double fraction = 0.0;
    std::map<std::string, Group> assignment;
    std::size_t low_size = 0;
    std::size_t middle_size = 0;
    std::size_t high_size = 0;
};

// Extreme-group size floor(f*n) computed in integer arithmetic so that the
// canonical fractions 0.25/0.30/0.35 never suffer binary-representation
// truncation (e.g. 18450 * 0.30 must give 5535, not 5534).
inline std::size_t extreme_group_size(std::size_t n, double fraction) {
    const long long percent = std::llround(fraction * 100.0);
    if (percent < 1 || percent > 49 ||
        std::fabs(fraction * 100.0 - static_cast<double>(percent)) > 1e-9) {
        throw usage_error("fraction must be a percentage in hundredths, got " +
                          std::to_string(fraction));
    }
    return static_cast<std::size_t>(static_cast<unsigned long long>(n) *
                                    static_cast<unsigned long long>(percent) / 100ULL);
}

// Segments users into Low/Middle/High by score percentile: sort ascending by
// (score, user_id) for deterministic tie-breaking, bottom floor(f*n) -> Low,
// top floor(f*n) -> High, rest -> Middle.
inline FactualityGrouping assign_groups(const std::vector<UserFactuality>& scores,
                                        double fraction) {
    const std::size_t n = scores.size();
    const std::size_t k = extreme_group_size(n, fraction);
    if (n < 3 || k == 0) {
        throw data_error("cannot form groups: n=" + std::to_string(n) +
                         ", extreme group size " + std::to_string(k));
    }
    std::vector<const UserFactuality*> order;
    order.reserve(n);
    for (const auto& s : scores) order.push_back(&s);
    std::sort(order.begin(), order.end(), [](const UserFactuality* a, const UserFactuality* b) {
        if (a->score != b->score) return a->score < b->score;
        return a->user_id < b->user_id;
    });

    FactualityGrouping grouping;
    grouping.fraction = fraction;
    grouping.low_size = k;
    grouping.high_size = k;
    grouping.middle_size = n - 2 * k;
    for (std::size_t i = 0; i < n; ++i) {
        Group g = Group::Middle;
        if (i < k) g = Group::Low;
        else if (i >= n - k) g = Group::High;
        grouping.assignment.emplace(order[i]->user_id, g);
    }
    return grouping;
}

}  // namespace factmetrics::credibility

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sentiline/corpus.hpp"
#include "sentiline/scorer.hpp"
#include "sentiline/stopwords.hpp"

namespace sentiline {

struct ScoreSeries {
    std::vector<ScorePoint> points;  // non-decreasing timestamps
    std::vector<double> smoothed;    // aligned to points
    std::vector<bool> outlier_flags; // aligned to points
};

enum class Polarity { positive, negative };

struct OutlierRegion {
    std::size_t start = 0; // indices into points, inclusive
    std::size_t end = 0;
    Polarity polarity = Polarity::positive;
    std::vector<std::size_t> member_points; // flagged point indices
    std::vector<std::string> member_ids;
    std::vector<std::pair<std::string, std::size_t>> top_terms;
};

// Trailing (causal) mean: out[i] = mean(scores[max(0, i-window+1) ..= i]).
std::vector<double> moving_average(const std::vector<double>& scores, std::size_t window = 25);

// Groups flagged points whose successive index gaps are <= gap. Polarity is
// the sign of (region member mean - global mean); an exact tie is positive.
std::vector<OutlierRegion> segment_regions(const ScoreSeries& series, std::size_t gap = 5);

// Term counts over the member records minus the union of stopword lists for
// the languages present; descending count, lexical tie-break, top_k entries.
std::vector<std::pair<std::string, std::size_t>> term_frequencies(
    const std::vector<const TweetRecord*>& members, const StopwordSets& stopwords,
    std::size_t top_k = 50);

struct DayStat {
    std::size_t count = 0;
    double mean = 0.0;
};

// Index 0 = Monday ... 6 = Sunday, UTC.
std::array<DayStat, 7> day_profile(const std::vector<ScorePoint>& points);

extern const char* const kWeekdayNames[7];

} // namespace sentiline

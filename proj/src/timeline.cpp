#include "sentiline/timeline.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sentiline/error.hpp"
#include "sentiline/timeparse.hpp"

namespace sentiline {

const char* const kWeekdayNames[7] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};

std::vector<double> moving_average(const std::vector<double>& scores, std::size_t window) {
    if (window < 1) throw Error::input("moving average: window must be >= 1");
    std::vector<double> out(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const std::size_t lo = i + 1 >= window ? i + 1 - window : 0;
        double acc = 0.0;
        for (std::size_t j = lo; j <= i; ++j) acc += scores[j];
        out[i] = acc / static_cast<double>(i - lo + 1);
    }
    return out;
}

std::vector<OutlierRegion> segment_regions(const ScoreSeries& series, std::size_t gap) {
    std::vector<std::size_t> flagged;
    for (std::size_t i = 0; i < series.outlier_flags.size(); ++i) {
        if (series.outlier_flags[i]) flagged.push_back(i);
    }
    std::vector<OutlierRegion> regions;
    if (flagged.empty()) return regions;

    double global_mean = 0.0;
    for (const auto& p : series.points) global_mean += p.score;
    global_mean /= static_cast<double>(series.points.size());

    std::size_t group_start = 0;
    for (std::size_t k = 1; k <= flagged.size(); ++k) {
        const bool break_here = k == flagged.size() || flagged[k] - flagged[k - 1] > gap;
        if (!break_here) continue;
        OutlierRegion r;
        r.start = flagged[group_start];
        r.end = flagged[k - 1];
        double mean = 0.0;
        for (std::size_t j = group_start; j < k; ++j) {
            r.member_points.push_back(flagged[j]);
            r.member_ids.push_back(series.points[flagged[j]].id);
            mean += series.points[flagged[j]].score;
        }
        mean /= static_cast<double>(k - group_start);
        r.polarity = mean >= global_mean ? Polarity::positive : Polarity::negative;
        regions.push_back(std::move(r));
        group_start = k;
    }
    return regions;
}

std::vector<std::pair<std::string, std::size_t>> term_frequencies(
    const std::vector<const TweetRecord*>& members, const StopwordSets& stopwords,
    std::size_t top_k) {
    std::set<Lang> langs;
    for (const auto* r : members) langs.insert(r->lang);

    auto is_stopword = [&](const std::string& token) {
        for (Lang l : langs) {
            if (stopwords.for_lang(l).count(token)) return true;
        }
        return false;
    };

    std::map<std::string, std::size_t> counts;
    for (const auto* r : members) {
        for (const auto& tok : r->tokens) {
            if (!is_stopword(tok)) ++counts[tok];
        }
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > top_k) ranked.resize(top_k);
    return ranked;
}

std::array<DayStat, 7> day_profile(const std::vector<ScorePoint>& points) {
    if (points.empty()) throw Error::input("day profile: no points");
    std::array<DayStat, 7> table{};
    for (const auto& p : points) {
        DayStat& d = table[static_cast<std::size_t>(utc_weekday(p.timestamp))];
        ++d.count;
        d.mean += p.score;
    }
    for (auto& d : table) {
        if (d.count > 0) d.mean /= static_cast<double>(d.count);
    }
    return table;
}

} // namespace sentiline

#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "sentiline/config.hpp"
#include "sentiline/corpus.hpp"
#include "sentiline/esd.hpp"
#include "sentiline/timeline.hpp"

namespace sentiline {

struct CorpusStats {
    std::size_t total = 0;
    std::size_t scored = 0;
    std::size_t unscored = 0;
    std::size_t dedup_dropped = 0;
    std::array<std::size_t, 4> lang_counts{}; // en, de, es, unknown
};

struct OutlierReport {
    CorpusStats corpus;
    double alpha = 0.05;
    std::size_t r = 0;
    EsdResult esd;
    std::vector<std::string> outlier_ids;
    ScoreSeries series;
    std::vector<OutlierRegion> regions;
    std::array<DayStat, 7> days{};
    std::string model_info;
    std::string generated_at; // pinned by fixed-clock mode
    PipelineConfig config;
};

// schema_version 1. Deterministic: identical report structs serialize to
// identical bytes.
std::string report_to_json(const OutlierReport& report);

// "id,timestamp,score,smoothed,outlier" with %.17g round-trip floats.
void write_scores_csv(const ScoreSeries& series, std::ostream& out);

struct ScoresCsvRow {
    std::string id;
    std::int64_t timestamp;
    double score;
};

std::vector<ScoresCsvRow> read_scores_csv(std::istream& in);

// 1200x400 viewBox: one circle per point (r=2, outliers carry class
// "outlier"), the moving average as a path with class "midline".
std::string render_timeline_svg(const ScoreSeries& series);

} // namespace sentiline

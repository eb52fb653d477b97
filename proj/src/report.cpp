#include "sentiline/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sentiline/csv.hpp"
#include "sentiline/error.hpp"

namespace sentiline {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string report_to_json(const OutlierReport& rep) {
    using json = nlohmann::ordered_json;
    json j;
    j["schema_version"] = 1;
    j["meta"] = {{"tool", "sentiline"},
                 {"version", "0.1.0"},
                 {"model", rep.model_info},
                 {"generated_at", rep.generated_at}};
    j["corpus"] = {{"total", rep.corpus.total},
                   {"scored", rep.corpus.scored},
                   {"unscored", rep.corpus.unscored},
                   {"dedup_dropped", rep.corpus.dedup_dropped},
                   {"lang_counts",
                    {{"en", rep.corpus.lang_counts[0]},
                     {"de", rep.corpus.lang_counts[1]},
                     {"es", rep.corpus.lang_counts[2]},
                     {"unknown", rep.corpus.lang_counts[3]}}}};
    j["esd"] = {{"alpha", rep.alpha},
                {"r", rep.r},
                {"num_outliers", rep.esd.num_outliers},
                {"R", rep.esd.r_stats},
                {"lambda", rep.esd.lambdas},
                {"outlier_ids", rep.outlier_ids}};
    j["regions"] = json::array();
    for (const auto& region : rep.regions) {
        json terms = json::array();
        for (const auto& [token, count] : region.top_terms) {
            terms.push_back(json::array({token, count}));
        }
        j["regions"].push_back(
            {{"start_ts", rep.series.points[region.start].timestamp},
             {"end_ts", rep.series.points[region.end].timestamp},
             {"polarity", region.polarity == Polarity::positive ? "positive" : "negative"},
             {"ids", region.member_ids},
             {"top_terms", terms}});
    }
    j["day_profile"] = json::object();
    for (int d = 0; d < 7; ++d) {
        j["day_profile"][kWeekdayNames[d]] = {{"count", rep.days[d].count},
                                              {"mean", rep.days[d].mean}};
    }
    j["config"] = json::object();
    for (const auto& [k, v] : rep.config.echo()) j["config"][k] = v;
    return j.dump(2) + "\n";
}

void write_scores_csv(const ScoreSeries& series, std::ostream& out) {
    out << "id,timestamp,score,smoothed,outlier\n";
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        const auto& p = series.points[i];
        out << csv_escape(p.id) << ',' << p.timestamp << ',' << fmt17(p.score) << ','
            << fmt17(series.smoothed[i]) << ',' << (series.outlier_flags[i] ? 1 : 0) << '\n';
    }
}

std::vector<ScoresCsvRow> read_scores_csv(std::istream& in) {
    const auto rows = parse_csv(in);
    if (rows.empty()) throw Error::input("scores csv: empty file");
    const auto& header = rows[0];
    if (header.size() < 3 || header[0] != "id" || header[1] != "timestamp" ||
        header[2] != "score") {
        throw Error::input("scores csv: header must start with id,timestamp,score");
    }
    std::vector<ScoresCsvRow> out;
    out.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() < 3) throw Error::input("scores csv: short row " + std::to_string(i + 1));
        ScoresCsvRow r;
        r.id = row[0];
        try {
            r.timestamp = std::stoll(row[1]);
            r.score = std::stod(row[2]);
        } catch (const std::exception&) {
            throw Error::input("scores csv: bad number in row " + std::to_string(i + 1));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string render_timeline_svg(const ScoreSeries& series) {
    const double width = 1200.0, height = 400.0;
    const double left = 50.0, right = 10.0, top = 10.0, bottom = 30.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const std::size_t n = series.points.size();

    auto x_of = [&](std::size_t i) {
        if (n <= 1) return left + plot_w / 2.0;
        return left + plot_w * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    auto y_of = [&](double score) { return top + plot_h * (1.0 - score); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1200 400\">\n";
    svg << "  <style>.pt{fill:#4477aa;fill-opacity:0.45;}"
           ".outlier{fill:#cc3311;fill-opacity:0.9;}"
           ".midline{stroke:#228833;stroke-width:1.5;fill:none;}"
           ".axis{stroke:#333333;stroke-width:1;}"
           ".grid{stroke:#cccccc;stroke-width:0.5;}"
           ".lbl{font-family:sans-serif;font-size:11px;fill:#333333;}</style>\n";

    // Axes and score gridlines.
    for (double level : {0.0, 0.5, 1.0}) {
        svg << "  <line class=\"grid\" x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(y_of(level))
            << "\" x2=\"" << fmt2(width - right) << "\" y2=\"" << fmt2(y_of(level)) << "\"/>\n";
        svg << "  <text class=\"lbl\" x=\"" << fmt2(left - 28.0) << "\" y=\""
            << fmt2(y_of(level) + 4.0) << "\">" << fmt2(level).substr(0, 3) << "</text>\n";
    }
    svg << "  <line class=\"axis\" x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(top) << "\" x2=\""
        << fmt2(left) << "\" y2=\"" << fmt2(height - bottom) << "\"/>\n";
    svg << "  <line class=\"axis\" x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(height - bottom)
        << "\" x2=\"" << fmt2(width - right) << "\" y2=\"" << fmt2(height - bottom) << "\"/>\n";

    // Moving-average midline.
    if (n >= 1) {
        svg << "  <path class=\"midline\" d=\"";
        for (std::size_t i = 0; i < n; ++i) {
            svg << (i == 0 ? "M" : " L") << fmt2(x_of(i)) << " " << fmt2(y_of(series.smoothed[i]));
        }
        svg << "\"/>\n";
    }

    // One scatter mark per scored point.
    for (std::size_t i = 0; i < n; ++i) {
        svg << "  <circle class=\"" << (series.outlier_flags[i] ? "outlier" : "pt") << "\" cx=\""
            << fmt2(x_of(i)) << "\" cy=\"" << fmt2(y_of(series.points[i].score))
            << "\" r=\"2\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace sentiline

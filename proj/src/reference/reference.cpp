#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sentiline::ref {

namespace {

double sigm(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// One direction over the sequence; returns the per-original-step hidden
// outputs. Everything is an explicit scalar loop.
std::vector<std::vector<double>> run_dir(const LstmDirWeights& w, const Mat& input,
                                         bool reverse) {
    const int hidden = w.w_hh.cols;
    const int in_dim = w.w_ih.cols;
    const int steps = input.rows;
    std::vector<std::vector<double>> outputs(steps, std::vector<double>(hidden, 0.0));
    std::vector<double> h(hidden, 0.0), c(hidden, 0.0);

    for (int s = 0; s < steps; ++s) {
        const int t = reverse ? steps - 1 - s : s;
        std::vector<double> h_new(hidden), c_new(hidden);
        for (int k = 0; k < hidden; ++k) {
            double zi = w.b[k];
            double zf = w.b[hidden + k];
            double zg = w.b[2 * hidden + k];
            double zo = w.b[3 * hidden + k];
            for (int j = 0; j < in_dim; ++j) {
                const double xj = input.at(t, j);
                zi += w.w_ih.at(k, j) * xj;
                zf += w.w_ih.at(hidden + k, j) * xj;
                zg += w.w_ih.at(2 * hidden + k, j) * xj;
                zo += w.w_ih.at(3 * hidden + k, j) * xj;
            }
            for (int j = 0; j < hidden; ++j) {
                const double hj = h[j];
                zi += w.w_hh.at(k, j) * hj;
                zf += w.w_hh.at(hidden + k, j) * hj;
                zg += w.w_hh.at(2 * hidden + k, j) * hj;
                zo += w.w_hh.at(3 * hidden + k, j) * hj;
            }
            c_new[k] = sigm(zf) * c[k] + sigm(zi) * std::tanh(zg);
            h_new[k] = sigm(zo) * std::tanh(c_new[k]);
        }
        h = h_new;
        c = c_new;
        outputs[t] = h;
    }
    return outputs;
}

} // namespace

double forward_score(const SentimentModel& model, const Mat& sequence) {
    const int hidden = model.cfg.hidden_dim;
    const int dirs = model.cfg.directions();
    const int steps = sequence.rows;
    if (steps < 1) throw std::runtime_error("reference forward: empty sequence");

    Mat current = sequence;
    for (int l = 0; l < model.cfg.layers; ++l) {
        auto fwd = run_dir(model.layers[l].fwd, current, false);
        std::vector<std::vector<double>> bwd;
        if (dirs == 2) bwd = run_dir(model.layers[l].bwd, current, true);
        Mat next(steps, dirs * hidden);
        for (int t = 0; t < steps; ++t) {
            for (int k = 0; k < hidden; ++k) next.at(t, k) = fwd[t][k];
            if (dirs == 2) {
                for (int k = 0; k < hidden; ++k) next.at(t, hidden + k) = bwd[t][k];
            }
        }
        current = std::move(next);
    }

    const int width = dirs * hidden;
    double z = model.head_b;
    for (int k = 0; k < width; ++k) {
        double pooled = 0.0;
        for (int t = 0; t < steps; ++t) pooled += current.at(t, k);
        z += model.head_w[k] * (pooled / steps);
    }
    return sigm(z);
}

std::vector<double> score_corpus_serial(const SentimentModel& model,
                                        const EmbeddingTable& table, const Corpus& corpus,
                                        std::size_t& unscored) {
    std::vector<double> scores;
    unscored = 0;
    for (const auto& r : corpus.records) {
        std::vector<const double*> rows;
        for (const auto& tok : r.tokens) {
            if (const double* v = table.lookup(tok)) rows.push_back(v);
        }
        if (rows.empty()) {
            ++unscored;
            continue;
        }
        Mat seq(static_cast<int>(rows.size()), table.dim);
        for (std::size_t t = 0; t < rows.size(); ++t) {
            std::copy(rows[t], rows[t] + table.dim, seq.row(static_cast<int>(t)));
        }
        scores.push_back(forward_score(model, seq));
    }
    return scores;
}

std::vector<double> moving_average(const std::vector<double>& x, std::size_t window) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t lo = (i + 1 >= window) ? i + 1 - window : 0;
        double acc = 0.0;
        std::size_t cnt = 0;
        for (std::size_t j = lo; j <= i; ++j) {
            acc += x[j];
            ++cnt;
        }
        out[i] = acc / static_cast<double>(cnt);
    }
    return out;
}

std::vector<std::pair<std::string, double>> csls_rank(const std::vector<double>& query,
                                                      const EmbeddingTable& table, int k) {
    const int n = table.rows();
    const int d = table.dim;
    auto cosine = [&](const double* a, const double* b) {
        double acc = 0.0;
        for (int j = 0; j < d; ++j) acc += a[j] * b[j];
        return acc;
    };
    auto top_k_mean = [&](std::vector<double> vals) {
        std::sort(vals.begin(), vals.end(), std::greater<double>());
        const int kk = std::min<int>(k, static_cast<int>(vals.size()));
        double acc = 0.0;
        for (int i = 0; i < kk; ++i) acc += vals[i];
        return kk > 0 ? acc / kk : 0.0;
    };

    std::vector<double> qcos(n);
    for (int i = 0; i < n; ++i) qcos[i] = cosine(query.data(), table.row(i));
    const double rs = top_k_mean(qcos);

    std::vector<std::pair<std::string, double>> out;
    for (int i = 0; i < n; ++i) {
        std::vector<double> others;
        for (int j = 0; j < n; ++j) {
            if (j != i) others.push_back(cosine(table.row(i), table.row(j)));
        }
        const double rt = top_k_mean(others);
        out.emplace_back(table.tokens[i], 2.0 * qcos[i] - rt - rs);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

namespace {

// Student-t CDF for integer nu via the classic finite sums: with
// theta = arctan(t / sqrt(nu)),
//   nu odd:  P(|T| <= t) = 2/pi * (theta + sin(theta) * S_odd(cos(theta)))
//   nu even: P(|T| <= t) = sin(theta) * S_even(cos(theta))
// where the S are short products accumulated below.
double t_cdf_closed_form(double t, int nu) {
    const double theta = std::atan(t / std::sqrt(static_cast<double>(nu)));
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    double a;
    if (nu % 2 == 1) {
        double sum = 0.0;
        double term = c; // cos(theta)
        if (nu >= 3) {
            sum = term;
            for (int j = 2; j <= nu - 3; j += 2) {
                term *= c * c * static_cast<double>(j) / static_cast<double>(j + 1);
                sum += term;
            }
        }
        a = 2.0 / 3.14159265358979323846 * (theta + s * sum);
    } else {
        double sum = 1.0;
        double term = 1.0;
        for (int j = 2; j <= nu - 2; j += 2) {
            term *= c * c * static_cast<double>(j - 1) / static_cast<double>(j);
            sum += term;
        }
        a = s * sum;
    }
    // a = P(|T| <= |t|)
    return t >= 0.0 ? 0.5 + 0.5 * a : 0.5 - 0.5 * a;
}

} // namespace

double t_quantile_closed_form(double p, int nu) {
    if (!(p > 0.0 && p < 1.0)) throw std::runtime_error("reference quantile: p out of range");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -t_quantile_closed_form(1.0 - p, nu);
    double lo = 0.0, hi = 1.0;
    while (t_cdf_closed_form(hi, nu) < p) hi *= 2.0;
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (t_cdf_closed_form(mid, nu) < p) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-13 * (1.0 + lo)) break;
    }
    return 0.5 * (lo + hi);
}

EsdOutcome esd_bruteforce(const std::vector<double>& series, double alpha, std::size_t r) {
    EsdOutcome out;
    std::vector<double> vals = series;
    std::vector<std::size_t> idx(series.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const std::size_t n = series.size();

    std::vector<std::size_t> removal;
    for (std::size_t i = 1; i <= r; ++i) {
        const std::size_t m = vals.size();
        double mean = 0.0;
        for (double v : vals) mean += v;
        mean /= static_cast<double>(m);
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        const double sd = std::sqrt(var / static_cast<double>(m - 1));
        if (sd == 0.0) throw std::runtime_error("reference esd: zero variance");

        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (std::abs(vals[j] - mean) > best) {
                best = std::abs(vals[j] - mean);
                arg = j;
            }
        }
        out.r_stats.push_back(best / sd);
        removal.push_back(idx[arg]);
        vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(arg));
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(arg));

        const int nu = static_cast<int>(n - i - 1);
        const double p = 1.0 - alpha / (2.0 * static_cast<double>(n - i + 1));
        const double t = t_quantile_closed_form(p, nu);
        out.lambdas.push_back(static_cast<double>(n - i) * t /
                              std::sqrt((static_cast<double>(nu) + t * t) *
                                        static_cast<double>(n - i + 1)));
    }
    out.num_outliers = 0;
    for (std::size_t i = 0; i < out.r_stats.size(); ++i) {
        if (out.r_stats[i] > out.lambdas[i]) out.num_outliers = i + 1;
    }
    out.outlier_indices.assign(removal.begin(),
                               removal.begin() + static_cast<std::ptrdiff_t>(out.num_outliers));
    return out;
}

} // namespace sentiline::ref

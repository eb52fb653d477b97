#include "sentiline/lstm.hpp"

#include <cmath>

#include "sentiline/error.hpp"

namespace sentiline {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

LstmDirWeights dir_zeros(int input_dim, int hidden) {
    LstmDirWeights w;
    w.w_ih = Mat(4 * hidden, input_dim);
    w.w_hh = Mat(4 * hidden, hidden);
    w.b.assign(4 * hidden, 0.0);
    return w;
}

} // namespace

void ModelConfig::validate() const {
    if (embed_dim <= 0 || hidden_dim <= 0 || layers <= 0) {
        throw Error::input("model config: dimensions must be positive");
    }
}

SentimentModel SentimentModel::zeros(const ModelConfig& cfg) {
    cfg.validate();
    SentimentModel m;
    m.cfg = cfg;
    m.layers.resize(cfg.layers);
    for (int l = 0; l < cfg.layers; ++l) {
        m.layers[l].fwd = dir_zeros(cfg.input_width(l), cfg.hidden_dim);
        if (cfg.bidirectional) {
            m.layers[l].bwd = dir_zeros(cfg.input_width(l), cfg.hidden_dim);
        }
    }
    m.head_w.assign(cfg.out_width(), 0.0);
    m.head_b = 0.0;
    return m;
}

void lstm_cell_forward(const LstmDirWeights& w, const double* x, const double* h,
                       const double* c, double* h_out, double* c_out) {
    const int hidden = w.w_hh.cols;
    Vec z(w.b);
    matvec_add(w.w_ih, x, z.data());
    matvec_add(w.w_hh, h, z.data());
    for (int k = 0; k < hidden; ++k) {
        const double gi = sigmoid(z[k]);
        const double gf = sigmoid(z[hidden + k]);
        const double gg = std::tanh(z[2 * hidden + k]);
        const double go = sigmoid(z[3 * hidden + k]);
        c_out[k] = gf * c[k] + gi * gg;
        h_out[k] = go * std::tanh(c_out[k]);
    }
}

namespace {

// Runs one direction of one layer over the whole sequence, filling the cache
// and the direction's slice of the per-step layer output.
void run_direction(const LstmDirWeights& w, const Mat& input, bool reverse, int hidden,
                   Mat& output, int out_offset, DirCache& cache) {
    const int steps = input.rows;
    cache.gate_i.assign(steps, Vec(hidden));
    cache.gate_f.assign(steps, Vec(hidden));
    cache.gate_g.assign(steps, Vec(hidden));
    cache.gate_o.assign(steps, Vec(hidden));
    cache.c.assign(steps, Vec(hidden));
    cache.h.assign(steps, Vec(hidden));
    cache.tanh_c.assign(steps, Vec(hidden));

    Vec h_prev(hidden, 0.0), c_prev(hidden, 0.0);
    Vec z(4 * hidden);
    for (int s = 0; s < steps; ++s) {
        const int t = reverse ? steps - 1 - s : s;
        z.assign(w.b.begin(), w.b.end());
        matvec_add(w.w_ih, input.row(t), z.data());
        matvec_add(w.w_hh, h_prev.data(), z.data());
        for (int k = 0; k < hidden; ++k) {
            const double gi = sigmoid(z[k]);
            const double gf = sigmoid(z[hidden + k]);
            const double gg = std::tanh(z[2 * hidden + k]);
            const double go = sigmoid(z[3 * hidden + k]);
            const double cc = gf * c_prev[k] + gi * gg;
            const double tc = std::tanh(cc);
            cache.gate_i[s][k] = gi;
            cache.gate_f[s][k] = gf;
            cache.gate_g[s][k] = gg;
            cache.gate_o[s][k] = go;
            cache.c[s][k] = cc;
            cache.tanh_c[s][k] = tc;
            cache.h[s][k] = go * tc;
        }
        h_prev = cache.h[s];
        c_prev = cache.c[s];
        double* out_row = output.row(t);
        for (int k = 0; k < hidden; ++k) out_row[out_offset + k] = cache.h[s][k];
    }
}

// Inference-only pass: no activation caching, buffers reused across steps.
// The input transform is hoisted out of the recurrence so each W_ih row is
// streamed once per sequence instead of once per step; the recurrent W_hh
// product stays step-by-step. The arithmetic order per gate value matches
// the cached path exactly.
void run_direction_fast(const LstmDirWeights& w, const Mat& input, bool reverse, int hidden,
                        Mat& output, int out_offset, Vec& h, Vec& c, Vec& z, Mat& zx) {
    const int steps = input.rows;
    const int rows4 = 4 * hidden;
    if (zx.rows != steps || zx.cols != rows4) zx = Mat(steps, rows4);
    for (int r = 0; r < rows4; ++r) {
        const double* wr = w.w_ih.row(r);
        const double br = w.b[r];
        for (int t = 0; t < steps; ++t) {
            zx.at(t, r) = br + row_dot(wr, input.row(t), w.w_ih.cols);
        }
    }

    std::fill(h.begin(), h.end(), 0.0);
    std::fill(c.begin(), c.end(), 0.0);
    for (int s = 0; s < steps; ++s) {
        const int t = reverse ? steps - 1 - s : s;
        const double* zx_row = zx.row(t);
        std::copy(zx_row, zx_row + rows4, z.begin());
        matvec_add(w.w_hh, h.data(), z.data());
        double* out_row = output.row(t) + out_offset;
        for (int k = 0; k < hidden; ++k) {
            const double gi = sigmoid(z[k]);
            const double gf = sigmoid(z[hidden + k]);
            const double gg = std::tanh(z[2 * hidden + k]);
            const double go = sigmoid(z[3 * hidden + k]);
            c[k] = gf * c[k] + gi * gg;
            h[k] = go * std::tanh(c[k]);
            out_row[k] = h[k];
        }
    }
}

double forward_fast(const SentimentModel& model, const Mat& sequence) {
    const ModelConfig& cfg = model.cfg;
    const int steps = sequence.rows;
    const int hidden = cfg.hidden_dim;
    Vec h(hidden), c(hidden), z(4 * hidden);
    Mat zx;

    Mat current;
    Mat next(steps, cfg.out_width());
    for (int l = 0; l < cfg.layers; ++l) {
        const Mat& input = l == 0 ? sequence : current;
        run_direction_fast(model.layers[l].fwd, input, false, hidden, next, 0, h, c, z, zx);
        if (cfg.bidirectional) {
            run_direction_fast(model.layers[l].bwd, input, true, hidden, next, hidden, h, c, z,
                               zx);
        }
        std::swap(current, next);
        if (next.rows != steps || next.cols != cfg.out_width()) {
            next = Mat(steps, cfg.out_width());
        }
    }

    const int width = cfg.out_width();
    double acc = 0.0;
    for (int k = 0; k < width; ++k) {
        double pooled = 0.0;
        for (int t = 0; t < steps; ++t) pooled += current.at(t, k);
        acc += model.head_w[k] * (pooled / steps);
    }
    return sigmoid(model.head_b + acc);
}

} // namespace

double forward(const SentimentModel& model, const Mat& sequence, ForwardCache* cache) {
    const ModelConfig& cfg = model.cfg;
    const int steps = sequence.rows;
    if (steps < 1) throw Error::empty("unscorable: empty token sequence");
    if (sequence.cols != cfg.embed_dim) {
        throw Error::input("forward: sequence width does not match embed_dim");
    }
    if (!cache) return forward_fast(model, sequence);

    ForwardCache& fc = *cache;
    const int dirs = cfg.directions();
    fc.layer_inputs.clear();
    fc.dir_caches.assign(static_cast<std::size_t>(cfg.layers) * dirs, DirCache{});

    Mat current = sequence;
    for (int l = 0; l < cfg.layers; ++l) {
        fc.layer_inputs.push_back(current);
        Mat next(steps, cfg.out_width());
        run_direction(model.layers[l].fwd, fc.layer_inputs[l], false, cfg.hidden_dim, next, 0,
                      fc.dir_caches[static_cast<std::size_t>(l) * dirs]);
        if (cfg.bidirectional) {
            run_direction(model.layers[l].bwd, fc.layer_inputs[l], true, cfg.hidden_dim, next,
                          cfg.hidden_dim, fc.dir_caches[static_cast<std::size_t>(l) * dirs + 1]);
        }
        current = std::move(next);
    }

    // Average pooling over time, then the sigmoid head.
    const int width = cfg.out_width();
    fc.pooled.assign(width, 0.0);
    for (int t = 0; t < steps; ++t) {
        const double* r = current.row(t);
        for (int k = 0; k < width; ++k) fc.pooled[k] += r[k];
    }
    for (int k = 0; k < width; ++k) fc.pooled[k] /= steps;

    fc.logit = model.head_b + dot(model.head_w.data(), fc.pooled.data(), width);
    fc.score = sigmoid(fc.logit);
    return fc.score;
}

double bce_loss(double score, int label) {
    const double s = std::min(1.0 - 1e-7, std::max(1e-7, score));
    return label == 1 ? -std::log(s) : -std::log(1.0 - s);
}

ModelGrads ModelGrads::zeros(const ModelConfig& cfg) {
    ModelGrads g;
    g.layers.resize(cfg.layers);
    for (int l = 0; l < cfg.layers; ++l) {
        g.layers[l].fwd = dir_zeros(cfg.input_width(l), cfg.hidden_dim);
        if (cfg.bidirectional) {
            g.layers[l].bwd = dir_zeros(cfg.input_width(l), cfg.hidden_dim);
        }
    }
    g.head_w.assign(cfg.out_width(), 0.0);
    g.head_b = 0.0;
    return g;
}

namespace {

void axpy(Vec& dst, const Vec& src, double a) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += a * src[i];
}

void axpy(Mat& dst, const Mat& src, double a) {
    for (std::size_t i = 0; i < dst.a.size(); ++i) dst.a[i] += a * src.a[i];
}

double sq(const Vec& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc;
}

double sq(const Mat& m) {
    double acc = 0.0;
    for (double x : m.a) acc += x * x;
    return acc;
}

} // namespace

void ModelGrads::axpy_into(SentimentModel& model, double alpha) const {
    for (std::size_t l = 0; l < layers.size(); ++l) {
        axpy(model.layers[l].fwd.w_ih, layers[l].fwd.w_ih, alpha);
        axpy(model.layers[l].fwd.w_hh, layers[l].fwd.w_hh, alpha);
        axpy(model.layers[l].fwd.b, layers[l].fwd.b, alpha);
        if (model.cfg.bidirectional) {
            axpy(model.layers[l].bwd.w_ih, layers[l].bwd.w_ih, alpha);
            axpy(model.layers[l].bwd.w_hh, layers[l].bwd.w_hh, alpha);
            axpy(model.layers[l].bwd.b, layers[l].bwd.b, alpha);
        }
    }
    axpy(model.head_w, head_w, alpha);
    model.head_b += alpha * head_b;
}

double ModelGrads::squared_norm() const {
    double acc = head_b * head_b + sq(head_w);
    for (const auto& l : layers) {
        acc += sq(l.fwd.w_ih) + sq(l.fwd.w_hh) + sq(l.fwd.b);
        acc += sq(l.bwd.w_ih) + sq(l.bwd.w_hh) + sq(l.bwd.b);
    }
    return acc;
}

void ModelGrads::scale(double s) {
    for (auto& l : layers) {
        for (double& x : l.fwd.w_ih.a) x *= s;
        for (double& x : l.fwd.w_hh.a) x *= s;
        for (double& x : l.fwd.b) x *= s;
        for (double& x : l.bwd.w_ih.a) x *= s;
        for (double& x : l.bwd.w_hh.a) x *= s;
        for (double& x : l.bwd.b) x *= s;
    }
    for (double& x : head_w) x *= s;
    head_b *= s;
}

namespace {

// BPTT through one direction of one layer. d_out[t] holds the gradient
// arriving at this direction's hidden output for original step t; d_input
// (T x input_width) accumulates gradients wrt the layer's input.
void backprop_direction(const LstmDirWeights& w, const Mat& input, bool reverse, int hidden,
                        const DirCache& cache, const std::vector<Vec>& d_out,
                        LstmDirWeights& grads, Mat* d_input) {
    const int steps = input.rows;
    Vec dh_carry(hidden, 0.0), dc_carry(hidden, 0.0);
    Vec dz(4 * hidden);
    Vec zero(hidden, 0.0);

    for (int s = steps - 1; s >= 0; --s) {
        const int t = reverse ? steps - 1 - s : s;
        const Vec& gi = cache.gate_i[s];
        const Vec& gf = cache.gate_f[s];
        const Vec& gg = cache.gate_g[s];
        const Vec& go = cache.gate_o[s];
        const Vec& tc = cache.tanh_c[s];
        const Vec& c_prev = s > 0 ? cache.c[s - 1] : zero;
        const Vec& h_prev = s > 0 ? cache.h[s - 1] : zero;

        for (int k = 0; k < hidden; ++k) {
            const double dh = d_out[t][k] + dh_carry[k];
            const double d_o = dh * tc[k];
            const double dc = dc_carry[k] + dh * go[k] * (1.0 - tc[k] * tc[k]);
            const double d_i = dc * gg[k];
            const double d_f = dc * c_prev[k];
            const double d_g = dc * gi[k];
            dz[k] = d_i * gi[k] * (1.0 - gi[k]);
            dz[hidden + k] = d_f * gf[k] * (1.0 - gf[k]);
            dz[2 * hidden + k] = d_g * (1.0 - gg[k] * gg[k]);
            dz[3 * hidden + k] = d_o * go[k] * (1.0 - go[k]);
            dc_carry[k] = dc * gf[k];
        }

        rank1_update(grads.w_ih, 1.0, dz.data(), input.row(t));
        rank1_update(grads.w_hh, 1.0, dz.data(), h_prev.data());
        for (int k = 0; k < 4 * hidden; ++k) grads.b[k] += dz[k];

        std::fill(dh_carry.begin(), dh_carry.end(), 0.0);
        matvec_transposed_add(w.w_hh, dz.data(), dh_carry.data());
        if (d_input) {
            matvec_transposed_add(w.w_ih, dz.data(), d_input->row(t));
        }
    }
}

} // namespace

void backward(const SentimentModel& model, const Mat& sequence, const ForwardCache& cache,
              int label, double weight, ModelGrads& grads) {
    const ModelConfig& cfg = model.cfg;
    const int steps = sequence.rows;
    const int width = cfg.out_width();
    const int hidden = cfg.hidden_dim;
    const int dirs = cfg.directions();

    // Sigmoid + BCE collapse to (score - label) at the logit.
    const double dlogit = weight * (cache.score - static_cast<double>(label));
    grads.head_b += dlogit;
    for (int k = 0; k < width; ++k) grads.head_w[k] += dlogit * cache.pooled[k];

    // d pooled -> per-step output gradient of the top layer.
    std::vector<Vec> d_out(steps, Vec(width, 0.0));
    for (int t = 0; t < steps; ++t) {
        for (int k = 0; k < width; ++k) {
            d_out[t][k] = dlogit * model.head_w[k] / steps;
        }
    }

    for (int l = cfg.layers - 1; l >= 0; --l) {
        const Mat& input = cache.layer_inputs[l];
        Mat d_input(steps, cfg.input_width(l));
        const bool need_input_grad = l > 0;

        // Split the layer-output gradient into per-direction slices.
        std::vector<Vec> d_fwd(steps, Vec(hidden));
        for (int t = 0; t < steps; ++t) {
            for (int k = 0; k < hidden; ++k) d_fwd[t][k] = d_out[t][k];
        }
        backprop_direction(model.layers[l].fwd, input, false, hidden,
                           cache.dir_caches[static_cast<std::size_t>(l) * dirs], d_fwd,
                           grads.layers[l].fwd, need_input_grad ? &d_input : nullptr);
        if (cfg.bidirectional) {
            std::vector<Vec> d_bwd(steps, Vec(hidden));
            for (int t = 0; t < steps; ++t) {
                for (int k = 0; k < hidden; ++k) d_bwd[t][k] = d_out[t][hidden + k];
            }
            backprop_direction(model.layers[l].bwd, input, true, hidden,
                               cache.dir_caches[static_cast<std::size_t>(l) * dirs + 1], d_bwd,
                               grads.layers[l].bwd, need_input_grad ? &d_input : nullptr);
        }

        if (need_input_grad) {
            d_out.assign(steps, Vec(cfg.input_width(l)));
            for (int t = 0; t < steps; ++t) {
                const double* r = d_input.row(t);
                for (int k = 0; k < cfg.input_width(l); ++k) d_out[t][k] = r[k];
            }
        }
    }
}

} // namespace sentiline

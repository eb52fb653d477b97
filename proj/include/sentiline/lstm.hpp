#pragma once

#include <cstdint>
#include <vector>

#include "sentiline/matrix.hpp"

namespace sentiline {

struct ModelConfig {
    int embed_dim = 300;
    int hidden_dim = 300;
    int layers = 2;
    bool bidirectional = true;

    int directions() const { return bidirectional ? 2 : 1; }
    // Width of a layer's per-step output.
    int out_width() const { return directions() * hidden_dim; }
    // Input width of layer l (0-based).
    int input_width(int layer) const { return layer == 0 ? embed_dim : out_width(); }

    void validate() const;
};

// One direction of one layer. Gate blocks stacked [i, f, g, o] along rows.
struct LstmDirWeights {
    Mat w_ih; // 4H x input_dim
    Mat w_hh; // 4H x H
    Vec b;    // 4H
};

struct LstmLayerWeights {
    LstmDirWeights fwd;
    LstmDirWeights bwd; // unused when unidirectional
};

struct SentimentModel {
    ModelConfig cfg;
    std::vector<LstmLayerWeights> layers;
    Vec head_w; // out_width
    double head_b = 0.0;

    static SentimentModel zeros(const ModelConfig& cfg);
};

// One LSTM step: z = W_ih x + W_hh h + b; i,f,o through the logistic sigmoid,
// g through tanh; c' = f.c + i.g; h' = o.tanh(c').
void lstm_cell_forward(const LstmDirWeights& w, const double* x, const double* h,
                       const double* c, double* h_out, double* c_out);

// Activations cached for backprop, one direction of one layer. Step s is the
// processing step; for the backward direction step s reads input T-1-s.
struct DirCache {
    std::vector<Vec> gate_i, gate_f, gate_g, gate_o;
    std::vector<Vec> c, h, tanh_c;
};

struct ForwardCache {
    std::vector<Mat> layer_inputs;        // per layer: T x input_width
    std::vector<DirCache> dir_caches;     // layer * directions + dir
    Vec pooled;
    double logit = 0.0;
    double score = 0.0;
};

// Full forward pass over an embedded sequence (T x embed_dim, T >= 1).
// Returns the sigmoid score in (0, 1). Cache is optional.
double forward(const SentimentModel& model, const Mat& sequence, ForwardCache* cache = nullptr);

double bce_loss(double score, int label);

// Gradients mirror the weight layout; embeddings receive none.
struct ModelGrads {
    std::vector<LstmLayerWeights> layers;
    Vec head_w;
    double head_b = 0.0;

    static ModelGrads zeros(const ModelConfig& cfg);
    void axpy_into(SentimentModel& model, double alpha) const; // model += alpha * grads
    double squared_norm() const;
    void scale(double s);
};

// Accumulates exact reverse-mode gradients of `weight * bce(score, label)`
// into `grads` for one example, given its forward cache.
void backward(const SentimentModel& model, const Mat& sequence, const ForwardCache& cache,
              int label, double weight, ModelGrads& grads);

} // namespace sentiline

#pragma once

#include <string>

#include "sentiline/config.hpp"

namespace sentiline {

// Subcommand bodies, shared by the CLI and the integration tests. All throw
// sentiline::Error; the CLI maps error kinds to exit codes.

// Procrustes-aligns src embeddings into the tgt space via the dictionary and
// writes them in the text vector format. Returns the orthogonality residual.
double run_align(const PipelineConfig& cfg, const std::string& out_path);

// Trains the configured scorer, writes <out_dir>/weights.mlsw and
// <out_dir>/metrics.json.
void run_train(const PipelineConfig& cfg);

// Scores the corpus, writes <out_dir>/scores.csv (moving average included,
// no outlier detection).
void run_score(const PipelineConfig& cfg);

// Full pass: scores, smooths, runs ESD, segments regions, ranks terms and
// writes <out_dir>/report.json, scores.csv and timeline.svg.
void run_analyze(const PipelineConfig& cfg);

// Re-runs the detection stages from an existing scores.csv plus the corpus;
// writes report.json and timeline.svg.
void run_report(const PipelineConfig& cfg);

} // namespace sentiline

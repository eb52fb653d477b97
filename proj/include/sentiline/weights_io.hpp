#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "sentiline/lstm.hpp"
#include "sentiline/train.hpp"

namespace sentiline {

// Named-tensor container, little-endian throughout:
//   magic "MLSW" | u32 version = 1 | u32 tensor count
//   per tensor: u16 name length | name bytes | u8 rank | u32 dims[rank]
//               | row-major f32 data
// LSTM tensors are "l{1-based layer}.{fwd|bwd}.{W_ih|W_hh|b}" plus "head.W"
// and "head.b"; the baseline uses "baseline.W" and "baseline.b".
// Values are stored as f32; save(load(f)) == f byte for byte.
void save_weights(const SentimentModel& model, std::ostream& out);
SentimentModel load_weights(std::istream& in);

void save_baseline_weights(const BaselineModel& model, std::ostream& out);
BaselineModel load_baseline_weights(std::istream& in);

// Peeks at the tensor names to tell an LSTM container from a baseline one.
bool weights_file_is_baseline(std::istream& in);

} // namespace sentiline

// SPDX-License-Identifier: Apache-2.0
//
// sparsesync: sparsity-aware joint frame synchronization and channel estimation
// Copyright (C) 2026 the sparsesync authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SPARSESYNC_MODEL_HPP
#define SPARSESYNC_MODEL_HPP

#include "sparsesync/types.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sparsesync {

enum class Modulation { Bpsk, Qpsk };

// Constellation points in their documented index order. Decision ties break
// toward the smaller index.
//   BPSK: {+1, -1}
//   QPSK (Gray, unit energy): {(+1+i), (-1+i), (-1-i), (+1-i)} / sqrt(2)
const std::vector<cplx>& constellation(Modulation mod);

Modulation modulation_from_string(std::string_view name);
std::string to_string(Modulation mod);

// Frame-structure contract. One training frame of training_len symbols is
// transmitted every training_period frames; the other frames carry data_len
// payload symbols each. training_len = data_len + channel_memory +
// num_equations - 1 keeps every estimation equation inside the training frame
// for any frame boundary in [0, data_len - 1].
struct FrameConfig {
    int data_len = 0;        // M
    int channel_memory = 0;  // L
    int num_equations = 0;   // N_E
    int training_period = 1; // P
    Modulation modulation = Modulation::Bpsk;
    int training_len = 0;    // M~ = M + L + N_E - 1

    int combined_len() const { return data_len + channel_memory; }
};

FrameConfig validate_frame_config(int data_len, int channel_memory, int num_equations,
                                  int training_period, Modulation modulation);

// Physical channel impulse response h = [h_0 ... h_L].
struct Cir {
    CVec taps;
    int memory() const { return static_cast<int>(taps.size()) - 1; }
};

// h padded with `boundary` leading zeros and trailing zeros up to length
// data_len + memory; folds the unknown frame boundary into the channel.
struct CombinedCir {
    CVec taps;
    int boundary = 0;
};

CombinedCir build_combined_cir(const Cir& h, int boundary, int data_len);

struct TrainingFrame {
    CVec symbols; // length training_len, each exactly on the constellation
    std::uint64_t seed = 0;
};

// Deterministic pseudo-random constellation symbols; same seed, same frame.
TrainingFrame generate_training(const FrameConfig& config, std::uint64_t seed);
CVec generate_data_frame(const FrameConfig& config, std::uint64_t seed);

// Nearest-constellation-point decision, elementwise.
CVec decide_symbols(const CVec& soft, Modulation mod);

} // namespace sparsesync

#endif

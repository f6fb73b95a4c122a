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

#include "sparsesync/model.hpp"

#include "sparsesync/rng.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sparsesync {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

const std::vector<cplx> kBpsk = {cplx(1.0, 0.0), cplx(-1.0, 0.0)};
const std::vector<cplx> kQpsk = {cplx(kInvSqrt2, kInvSqrt2), cplx(-kInvSqrt2, kInvSqrt2),
                                 cplx(-kInvSqrt2, -kInvSqrt2), cplx(kInvSqrt2, -kInvSqrt2)};

CVec random_symbols(const FrameConfig& config, std::uint64_t seed, int count) {
    const auto& points = constellation(config.modulation);
    const unsigned bits = config.modulation == Modulation::Bpsk ? 1u : 2u;
    Xoshiro256pp rng(seed);
    CVec symbols(count);
    for (int i = 0; i < count; ++i)
        symbols[i] = points[rng.top_bits(bits)];
    return symbols;
}
} // namespace

const std::vector<cplx>& constellation(Modulation mod) {
    return mod == Modulation::Bpsk ? kBpsk : kQpsk;
}

Modulation modulation_from_string(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "bpsk")
        return Modulation::Bpsk;
    if (lower == "qpsk")
        return Modulation::Qpsk;
    throw std::invalid_argument("unknown modulation '" + std::string(name) + "' (bpsk|qpsk)");
}

std::string to_string(Modulation mod) { return mod == Modulation::Bpsk ? "bpsk" : "qpsk"; }

FrameConfig validate_frame_config(int data_len, int channel_memory, int num_equations,
                                  int training_period, Modulation modulation) {
    if (data_len < 1)
        throw std::invalid_argument("frame config: M must be >= 1");
    if (channel_memory < 0)
        throw std::invalid_argument("frame config: L must be >= 0");
    if (num_equations < 1)
        throw std::invalid_argument("frame config: N_E must be >= 1");
    if (training_period < 1)
        throw std::invalid_argument("frame config: P must be >= 1");

    FrameConfig config;
    config.data_len = data_len;
    config.channel_memory = channel_memory;
    config.num_equations = num_equations;
    config.training_period = training_period;
    config.modulation = modulation;
    config.training_len = data_len + channel_memory + num_equations - 1;
    return config;
}

CombinedCir build_combined_cir(const Cir& h, int boundary, int data_len) {
    if (h.taps.size() < 1)
        throw std::invalid_argument("combined CIR: channel must have at least one tap");
    if (boundary < 0 || boundary > data_len - 1)
        throw std::invalid_argument("combined CIR: boundary " + std::to_string(boundary) +
                                    " outside [0, " + std::to_string(data_len - 1) + "]");

    CombinedCir combined;
    combined.boundary = boundary;
    combined.taps = CVec::Zero(data_len + h.memory());
    combined.taps.segment(boundary, h.taps.size()) = h.taps;
    return combined;
}

TrainingFrame generate_training(const FrameConfig& config, std::uint64_t seed) {
    return TrainingFrame{random_symbols(config, seed, config.training_len), seed};
}

CVec generate_data_frame(const FrameConfig& config, std::uint64_t seed) {
    return random_symbols(config, seed, config.data_len);
}

CVec decide_symbols(const CVec& soft, Modulation mod) {
    if (soft.size() == 0)
        throw std::invalid_argument("decide_symbols: empty input");
    const auto& points = constellation(mod);
    CVec hard(soft.size());
    for (Eigen::Index i = 0; i < soft.size(); ++i) {
        std::size_t best = 0;
        double best_dist = std::norm(soft[i] - points[0]);
        for (std::size_t j = 1; j < points.size(); ++j) {
            const double dist = std::norm(soft[i] - points[j]);
            if (dist < best_dist) { // ties keep the smaller index
                best = j;
                best_dist = dist;
            }
        }
        hard[i] = points[best];
    }
    return hard;
}

} // namespace sparsesync

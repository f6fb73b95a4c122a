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

#ifndef SPARSESYNC_NUMERICS_HPP
#define SPARSESYNC_NUMERICS_HPP

#include "sparsesync/types.hpp"

namespace sparsesync {

struct LsSolution {
    CVec x;
    Eigen::Index rank = 0;
    // Numerically rank-deficient beyond tolerance. The solution is still
    // usable (smallest-norm least-squares fit on the detected rank).
    bool degenerate = false;
};

// Minimum-norm least-squares solution of min ||A x - b||_2 via a complete
// orthogonal decomposition: least-squares fit for tall A, minimum-norm exact
// solution for fat A. Rank tolerance is max(m,n) * machine epsilon relative
// to the largest pivot.
LsSolution solve_least_squares(const CMat& A, const CVec& b);

// c[d] = | sum_{k=0}^{window-1} conj(x[k]) * y[d+k] |  for d = 0..max_offset.
// Unnormalized; magnitude makes the result invariant to a carrier phase on y.
RVec cross_correlate(const CVec& y, const CVec& x, int max_offset, int window);

// Full linear convolution, length len(x) + len(h) - 1.
CVec convolve(const CVec& x, const CVec& h);

} // namespace sparsesync

#endif

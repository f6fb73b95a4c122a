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

#include "sparsesync/numerics.hpp"

#include <limits>
#include <stdexcept>

namespace sparsesync {

LsSolution solve_least_squares(const CMat& A, const CVec& b) {
    if (A.rows() < 1 || A.cols() < 1)
        throw std::invalid_argument("solve_least_squares: empty matrix");
    if (A.rows() != b.size())
        throw std::invalid_argument("solve_least_squares: A has " + std::to_string(A.rows()) +
                                    " rows but b has " + std::to_string(b.size()) + " entries");

    Eigen::CompleteOrthogonalDecomposition<CMat> cod(A.rows(), A.cols());
    cod.setThreshold(static_cast<double>(std::max(A.rows(), A.cols())) *
                     std::numeric_limits<double>::epsilon());
    cod.compute(A);

    LsSolution out;
    out.x = cod.solve(b);
    out.rank = cod.rank();
    out.degenerate = out.rank < std::min(A.rows(), A.cols());
    return out;
}

RVec cross_correlate(const CVec& y, const CVec& x, int max_offset, int window) {
    if (window < 1)
        throw std::invalid_argument("cross_correlate: window must be >= 1");
    if (max_offset < 0)
        throw std::invalid_argument("cross_correlate: max_offset must be >= 0");
    if (window > x.size())
        throw std::invalid_argument("cross_correlate: window exceeds reference length");
    if (max_offset + window > y.size())
        throw std::invalid_argument("cross_correlate: max_offset + window exceeds signal length");

    const auto ref = x.head(window);
    RVec magnitudes(max_offset + 1);
    for (int d = 0; d <= max_offset; ++d)
        magnitudes[d] = std::abs(ref.dot(y.segment(d, window)));
    return magnitudes;
}

CVec convolve(const CVec& x, const CVec& h) {
    if (x.size() == 0 || h.size() == 0)
        throw std::invalid_argument("convolve: empty input");
    CVec out = CVec::Zero(x.size() + h.size() - 1);
    for (Eigen::Index k = 0; k < h.size(); ++k)
        out.segment(k, x.size()) += h[k] * x;
    return out;
}

} // namespace sparsesync

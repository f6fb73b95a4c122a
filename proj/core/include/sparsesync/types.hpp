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

#ifndef SPARSESYNC_TYPES_HPP
#define SPARSESYNC_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace sparsesync {

using cplx = std::complex<double>;

// Complex column vector / dense complex matrix used throughout the library.
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

inline bool all_finite(const CVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
            return false;
    return true;
}

} // namespace sparsesync

#endif

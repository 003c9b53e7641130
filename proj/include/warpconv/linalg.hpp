// Copyright 2026 The warpconv developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "warpconv/operator.hpp"

namespace warpconv {

// Eigendecomposition of a Hermitian operator: h = V diag(values) V†,
// values ascending, V unitary.
struct HermEig {
    RealVector values;
    Matrix vectors;
};

HermEig herm_eig(const Operator& h);

// Kronecker product; the composite dimension is capped by max_dim.
Operator tensor(const Operator& a, const Operator& b,
                int max_dim = kDefaultMaxCompositeDim);
StateVector tensor(const StateVector& a, const StateVector& b,
                   int max_dim = kDefaultMaxCompositeDim);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b,
                       int max_dim = kDefaultMaxCompositeDim);

// e^{-i t h} for Hermitian h, via spectral decomposition (exact for normal
// operators up to eigensolver accuracy, independent of ||h|| t).
Operator expi(const Operator& h, double t);

// Reduction of a composite-system operator b on H (x) K to an operator on H
// by evaluating the K factor in the state omega_k:
//   M = Tr_K[(I (x) omega_k) b],  so <psi|M psi'> = (omega_{psi,psi'} (x) omega_K)(b).
// Maps I to I, positive to positive, A (x) B to tr(omega_k B) A.
Operator partial_expectation(const Operator& b, const DensityOperator& omega_k,
                             int dim_h, int dim_k);

// Partial trace over the second (K) factor.
Operator partial_trace_right(const Operator& b, int dim_h, int dim_k);

double frob_distance(const Operator& a, const Operator& b);

// ||ab - ba||_F
double commutator_norm(const Operator& a, const Operator& b);

} // namespace warpconv

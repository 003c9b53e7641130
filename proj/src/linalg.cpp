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

#include "warpconv/linalg.hpp"

#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace warpconv {

HermEig herm_eig(const Operator& h) {
    if (!h.is_hermitian()) {
        throw ContractError("herm_eig: input is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.mat());
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("herm_eig: eigensolver failed to converge");
    }
    return HermEig{es.eigenvalues(), es.eigenvectors()};
}

namespace {

void check_capacity(long long da, long long db, int max_dim, const char* who) {
    if (da * db > max_dim) {
        throw CapacityError(std::string(who) + ": composite dimension " +
                            std::to_string(da * db) + " exceeds the cap " +
                            std::to_string(max_dim));
    }
}

} // namespace

Operator tensor(const Operator& a, const Operator& b, int max_dim) {
    check_capacity(a.dim(), b.dim(), max_dim, "tensor");
    return Operator(Eigen::kroneckerProduct(a.mat(), b.mat()).eval());
}

StateVector tensor(const StateVector& a, const StateVector& b, int max_dim) {
    check_capacity(a.dim(), b.dim(), max_dim, "tensor");
    Vector v(static_cast<long>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        v.segment(static_cast<long>(i) * b.dim(), b.dim()) = a[i] * b.vec();
    }
    return StateVector(std::move(v));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b, int max_dim) {
    return DensityOperator(tensor(a.op(), b.op(), max_dim));
}

Operator expi(const Operator& h, double t) {
    const HermEig eig = herm_eig(h);
    Vector phases(h.dim());
    for (int k = 0; k < h.dim(); ++k) {
        phases(k) = std::exp(Complex(0.0, -t * eig.values(k)));
    }
    return Operator(eig.vectors * phases.asDiagonal() * eig.vectors.adjoint());
}

Operator partial_expectation(const Operator& b, const DensityOperator& omega_k,
                             int dim_h, int dim_k) {
    if (dim_h <= 0 || dim_k <= 0 || b.dim() != dim_h * dim_k) {
        throw DimensionError("partial_expectation: composite dimension must equal dim_h * dim_k");
    }
    if (omega_k.dim() != dim_k) {
        throw DimensionError("partial_expectation: state dimension must equal dim_k");
    }
    // M_{ij} = sum_{k,l} rho_{kl} b_{(i,l),(j,k)}  =  Tr_K[(I (x) rho) b]
    const Matrix& rho = omega_k.mat();
    const Matrix& bm = b.mat();
    Matrix m = Matrix::Zero(dim_h, dim_h);
    for (int i = 0; i < dim_h; ++i) {
        for (int j = 0; j < dim_h; ++j) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < dim_k; ++k) {
                for (int l = 0; l < dim_k; ++l) {
                    acc += rho(k, l) * bm(static_cast<long>(i) * dim_k + l,
                                          static_cast<long>(j) * dim_k + k);
                }
            }
            m(i, j) = acc;
        }
    }
    return Operator(std::move(m));
}

Operator partial_trace_right(const Operator& b, int dim_h, int dim_k) {
    if (dim_h <= 0 || dim_k <= 0 || b.dim() != dim_h * dim_k) {
        throw DimensionError("partial_trace_right: composite dimension must equal dim_h * dim_k");
    }
    const Matrix& bm = b.mat();
    Matrix m = Matrix::Zero(dim_h, dim_h);
    for (int i = 0; i < dim_h; ++i) {
        for (int j = 0; j < dim_h; ++j) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < dim_k; ++k) {
                acc += bm(static_cast<long>(i) * dim_k + k,
                          static_cast<long>(j) * dim_k + k);
            }
            m(i, j) = acc;
        }
    }
    return Operator(std::move(m));
}

double frob_distance(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw DimensionError("frob_distance: dimension mismatch");
    return (a.mat() - b.mat()).norm();
}

double commutator_norm(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw DimensionError("commutator_norm: dimension mismatch");
    return (a.mat() * b.mat() - b.mat() * a.mat()).norm();
}

} // namespace warpconv

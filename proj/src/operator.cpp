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

#include "warpconv/operator.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace warpconv {

namespace {

bool all_finite(const Matrix& m) {
    return m.allFinite();
}

} // namespace

Operator::Operator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw DimensionError("Operator: matrix must be square and nonempty");
    }
    if (!all_finite(m_)) {
        throw ContractError("Operator: entries must be finite");
    }
}

Operator Operator::identity(int dim) {
    if (dim <= 0) throw DimensionError("Operator::identity: dim must be positive");
    return Operator(Matrix::Identity(dim, dim));
}

Operator Operator::zero(int dim) {
    if (dim <= 0) throw DimensionError("Operator::zero: dim must be positive");
    return Operator(Matrix::Zero(dim, dim));
}

bool Operator::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).norm() <= tol * dim();
}

bool Operator::is_unitary(double tol) const {
    const Matrix g = m_.adjoint() * m_;
    return (g - Matrix::Identity(dim(), dim())).norm() <= tol * dim();
}

bool Operator::is_positive(double tol) const {
    if (!is_hermitian(tol)) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol * dim();
}

bool Operator::is_projection(double tol) const {
    if (!is_hermitian(tol)) return false;
    return (m_ * m_ - m_).norm() <= tol * dim();
}

Operator operator+(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw DimensionError("operator+: dimension mismatch");
    return Operator(a.m_ + b.m_);
}

Operator operator-(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw DimensionError("operator-: dimension mismatch");
    return Operator(a.m_ - b.m_);
}

Operator operator*(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw DimensionError("operator*: dimension mismatch");
    return Operator(a.m_ * b.m_);
}

Operator operator*(Complex c, const Operator& a) {
    return Operator(c * a.m_);
}

StateVector::StateVector(Vector v) : v_(std::move(v)) {
    if (v_.size() == 0) throw DimensionError("StateVector: empty vector");
    if (!v_.allFinite()) throw ContractError("StateVector: entries must be finite");
    const double n = v_.norm();
    if (n < 1e-300) throw ContractError("StateVector: cannot normalize the zero vector");
    v_ /= n;
}

StateVector StateVector::basis(int dim, int index) {
    if (dim <= 0) throw DimensionError("StateVector::basis: dim must be positive");
    if (index < 0 || index >= dim) throw DimensionError("StateVector::basis: index out of range");
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return StateVector(std::move(v));
}

Complex StateVector::expectation(const Operator& a) const {
    if (a.dim() != dim()) throw DimensionError("StateVector::expectation: dimension mismatch");
    return v_.dot(a.mat() * v_);
}

DensityOperator::DensityOperator(Operator op) : op_(std::move(op)) {
    if (!op_.is_hermitian(1e-10)) {
        throw ContractError("DensityOperator: not Hermitian within 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(op_.mat(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * op_.dim()) {
        throw ContractError("DensityOperator: not positive semidefinite within 1e-10");
    }
    if (std::abs(op_.trace() - Complex(1.0, 0.0)) > 1e-10 * op_.dim()) {
        throw ContractError("DensityOperator: trace must be 1 within 1e-10");
    }
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
    return DensityOperator(Operator(psi.vec() * psi.vec().adjoint()));
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
    if (dim <= 0) throw DimensionError("DensityOperator::maximally_mixed: dim must be positive");
    return DensityOperator(Operator(Matrix::Identity(dim, dim) / static_cast<double>(dim)));
}

} // namespace warpconv

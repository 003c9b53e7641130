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

#include <complex>

#include <Eigen/Dense>

#include "warpconv/errors.hpp"

namespace warpconv {

using Complex     = std::complex<double>;
using Matrix      = Eigen::MatrixXcd;
using Vector      = Eigen::VectorXcd;
using RealVector  = Eigen::VectorXd;
using RealMatrix  = Eigen::MatrixXd;

// Structural predicates (Hermitian/unitary/projection/positive) accept a
// Frobenius defect up to tol * dim; equality-style checks in tests use
// 1e-9 * (1 + ||.||_F).
inline constexpr double kStructuralTol = 1e-10;

// Composite (tensor product) dimensions are capped by policy; everything in
// this library is dense.
inline constexpr int kDefaultMaxCompositeDim = 4096;

// Dense operator on a finite-dimensional Hilbert space. Immutable after
// construction; entries are validated to be finite.
class Operator {
public:
    explicit Operator(Matrix m);

    static Operator identity(int dim);
    static Operator zero(int dim);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& mat() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

    Operator adjoint() const { return Operator(m_.adjoint()); }
    Complex trace() const { return m_.trace(); }
    double frob_norm() const { return m_.norm(); }

    bool is_hermitian(double tol = kStructuralTol) const;
    bool is_unitary(double tol = kStructuralTol) const;
    bool is_positive(double tol = kStructuralTol) const;
    bool is_projection(double tol = kStructuralTol) const;

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(Complex c, const Operator& a);
    friend Operator operator*(const Operator& a, Complex c) { return c * a; }
    friend Operator operator*(double c, const Operator& a) { return Complex(c, 0.0) * a; }
    friend Operator operator*(const Operator& a, double c) { return Complex(c, 0.0) * a; }

private:
    Matrix m_;
};

// Normalized vector state; construction normalizes and rejects zero vectors.
class StateVector {
public:
    explicit StateVector(Vector v);

    static StateVector basis(int dim, int index);

    int dim() const { return static_cast<int>(v_.size()); }
    const Vector& vec() const { return v_; }
    Complex operator[](int i) const { return v_(i); }

    // <psi | a psi>
    Complex expectation(const Operator& a) const;

private:
    Vector v_;
};

// Hermitian, positive semidefinite, unit-trace operator.
class DensityOperator {
public:
    explicit DensityOperator(Operator op);

    static DensityOperator pure(const StateVector& psi);
    static DensityOperator maximally_mixed(int dim);

    int dim() const { return op_.dim(); }
    const Operator& op() const { return op_; }
    const Matrix& mat() const { return op_.mat(); }

private:
    Operator op_;
};

} // namespace warpconv

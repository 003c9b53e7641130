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

#include <stdexcept>
#include <string>

namespace warpconv {

// Precondition violated by the caller (non-Hermitian input, broken
// commutation requirement, non-stochastic kernel, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operand shapes are incompatible.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A composite object would exceed the configured size policy.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scenario file does not match its schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Phase-space input is not continued smoothly across the periodic seam,
// so FFT-based evaluation would periodize garbage.
class PeriodizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace warpconv

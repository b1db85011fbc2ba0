/*
   Copyright 2026 The irsout Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace irsout {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Result not representable in double precision.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Two partial-fraction poles closer than the relative separation tolerance.
/// The closed forms are undefined there; use the quadrature oracle instead.
class DegeneratePoles : public Error {
public:
    DegeneratePoles(std::size_t first, std::size_t second, const std::string& what)
        : Error(what), first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// Every IRS element has zero amplitude: the cascade channel is identically
/// zero and the outage is 1 for any positive threshold.
class AllZeroAmplitudes : public Error {
public:
    using Error::Error;
};

/// Iterative numerical method failed to reach its tolerance.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Floating-point result violated an identity it must satisfy.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Scenario or plan failed validation; carries one message per violation.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> diagnostics)
        : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

    const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out;
        for (const auto& item : items) {
            if (!out.empty()) out += "; ";
            out += item;
        }
        return out;
    }

    std::vector<std::string> diagnostics_;
};

}  // namespace irsout

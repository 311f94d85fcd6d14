// Copyright 2026 The majmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAJMEM_ERRORS_HPP
#define MAJMEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace majmem {

/// Raised when a numerical routine cannot deliver a result within its stated tolerance.
/// The residual is whatever norm the failing check measured.
class NumericalError : public std::runtime_error {
   public:
    NumericalError(const std::string &what, double residual)
        : std::runtime_error(what), residual_(residual) {
    }
    double residual() const noexcept {
        return residual_;
    }

   private:
    double residual_;
};

/// Invalid parameters or shapes supplied by the caller.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace majmem

#endif

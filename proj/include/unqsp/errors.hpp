/*
   Copyright 2026 The unqsp authors

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

#ifndef UNQSP_ERRORS_HPP
#define UNQSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unqsp {

/// Base class for all unqsp errors.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An input violated a documented precondition (bad shape, indefinite
/// spectrum, non-unitary matrix, parameter out of range, ...).
class PreconditionError : public Error {
   public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// An iterative solver ran out of budget; carries the best residual seen.
class ConvergenceError : public Error {
   public:
    ConvergenceError(const std::string& msg, double best) : Error(msg), best_residual(best) {}
    double best_residual;
};

/// A synthesis recursion hit a numerically degenerate step.
class DegeneracyError : public Error {
   public:
    DegeneracyError(const std::string& msg, int step_index) : Error(msg), step(step_index) {}
    int step;
};

/// A synthesized circuit failed its built-in verification.
class SynthesisError : public Error {
   public:
    explicit SynthesisError(const std::string& msg) : Error(msg) {}
};

}  // namespace unqsp

#endif

/*
   Copyright 2026 The chaincodes Authors

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

#include <stdexcept>
#include <string>

namespace chaincodes {

enum class ErrorCode {
    DivisionByZero,
    InvalidInput,
    NotCoprime,
    NotAUnit,
    AmbientMismatch,
    InvalidIndex,
    SelfDualUnsupported,
    InternalError,
};

constexpr const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::InvalidIndex: return "InvalidIndex";
        case ErrorCode::SelfDualUnsupported: return "SelfDualUnsupported";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so diagnostics stay greppable.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace chaincodes

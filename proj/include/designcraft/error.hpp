/*
   Copyright 2026 The designcraft Authors

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

#ifndef DESIGNCRAFT_ERROR_HPP
#define DESIGNCRAFT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace designcraft {

enum class ErrorKind {
    InvalidArgument,  // precondition violated by the caller
    Construction,     // a code construction did not produce the expected object
    Budget,           // enumeration or verification exceeds the configured cap
    Inconsistent,     // an exact division or identity failed
    Parse,            // malformed input file
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace designcraft

#endif  // DESIGNCRAFT_ERROR_HPP

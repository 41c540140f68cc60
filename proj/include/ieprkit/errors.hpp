// Copyright 2026 The ieprkit Authors
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

namespace iepr {

/// Error taxonomy shared by the whole toolkit. The category drives the
/// process exit code: validation -> 1, numerics -> 2, resource -> 3.
class Error : public std::runtime_error {
public:
    enum class Category { validation, numerics, resource };

    Error(Category cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}

    Category category() const noexcept { return category_; }

    int exit_code() const noexcept {
        switch (category_) {
            case Category::validation: return 1;
            case Category::numerics: return 2;
            case Category::resource: return 3;
        }
        return 2;
    }

private:
    Category category_;
};

/// Invalid physical or structural input (bad circuit, bad parameter range).
class SpecError : public Error {
public:
    explicit SpecError(const std::string& msg) : Error(Category::validation, msg) {}
};

/// Malformed input file or export payload.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(Category::validation, msg) {}
};

/// Request outside the method's declared applicability.
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& msg) : Error(Category::validation, msg) {}
};

/// Iterative kernel failed to converge.
class NumericsError : public Error {
public:
    explicit NumericsError(const std::string& msg) : Error(Category::numerics, msg) {}
};

/// Input describes an unphysical system (e.g. negative mode energy).
class PhysicsError : public Error {
public:
    explicit PhysicsError(const std::string& msg) : Error(Category::numerics, msg) {}
};

/// Data violates an exact identity beyond tolerance.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& msg) : Error(Category::numerics, msg) {}
};

/// A root/minimum search found nothing in the given interval.
class SearchError : public Error {
public:
    explicit SearchError(const std::string& msg) : Error(Category::numerics, msg) {}
};

/// Spectrum labeling or oracle bookkeeping failed.
class OracleError : public Error {
public:
    explicit OracleError(const std::string& msg) : Error(Category::numerics, msg) {}
};

/// Configured size/dimension cap exceeded.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error(Category::resource, msg) {}
};

}  // namespace iepr

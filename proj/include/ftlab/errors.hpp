// Copyright 2026 The ftlab authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ftlab {

/// Bad experiment configuration: wrong backend/noise/gate combination or a
/// malformed config file. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A gadget could not obtain a verified ancilla within its retry budget.
class AncillaExhausted : public std::runtime_error {
  public:
    explicit AncillaExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Threshold fitting was asked to work with too little usable data.
class FitError : public std::runtime_error {
  public:
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ftlab

// Copyright 2026 The dublo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUBLO_ERROR_HPP
#define DUBLO_ERROR_HPP

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dublo {

/// Input text could not be read as a graph, measure, or config.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Input was well formed but violates a model invariant (disconnected,
/// self-loop, size cap, parameter range).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Numerical breakdown: iteration caps, degenerate pivots. Distinct from an
/// LP being infeasible, which is a normal answer.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultSizeCap = 512;

/// Vertex cap for graph construction. DUBLO_SIZE_CAP overrides the default.
inline std::size_t default_size_cap() {
  if (const char* env = std::getenv("DUBLO_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return static_cast<std::size_t>(v);
  }
  return kDefaultSizeCap;
}

}  // namespace dublo

#endif  // DUBLO_ERROR_HPP

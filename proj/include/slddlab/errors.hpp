// Copyright 2026 The slddlab Authors
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

#ifndef SLDDLAB_ERRORS_HPP
#define SLDDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sldd {

/// Thrown when an operation would exceed a hard resource cap (dense
/// dimension, twirl width, interval count, oracle search space). Distinct
/// from invalid_argument so callers can map it to its own exit code.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string &what)
      : std::runtime_error(what) {}
};

} // namespace sldd

#endif

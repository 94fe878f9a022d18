// Copyright 2026 The voxfeat authors
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

#ifndef VOXFEAT_COMMON_HPP_
#define VOXFEAT_COMMON_HPP_

#include <stdexcept>
#include <string>

namespace voxfeat {

/// Base class for all voxfeat errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration (bad parameter combinations).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or malformed input files.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Numeric argument outside the function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is not defined for this input
/// (e.g. a perturbation measure over too few cycles).
class UndefinedResultError : public Error {
 public:
  using Error::Error;
};

}  // namespace voxfeat

#endif  // VOXFEAT_COMMON_HPP_

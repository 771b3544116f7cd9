// Copyright 2026 The dnnreuse Authors. All Rights Reserved.
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

#ifndef DNNREUSE_ERROR_H_
#define DNNREUSE_ERROR_H_

#include <stdexcept>
#include <string>

namespace dnnreuse {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input: documents, CSV files, out-of-range arguments.
// The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// An argument outside its documented domain (alpha > 1, batch 0, ...).
class ArgumentError : public InputError {
 public:
  using InputError::InputError;
};

// The computation is well-formed but has no meaningful answer, e.g. a
// correlation over a constant series or an intensity with zero MACs.
// The CLI maps these to exit code 3.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace dnnreuse

#endif  // DNNREUSE_ERROR_H_

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

#ifndef DNNREUSE_FORMAT_H_
#define DNNREUSE_FORMAT_H_

#include <string>

namespace dnnreuse {

// Fixed report precision: ratios get 4 decimals, counts and energies get
// scientific notation with 4 significant digits. Negative zero prints as 0.
std::string format_ratio(double value);
std::string format_count(double value);

// Shortest representation that parses back to the same double.
std::string format_exact(double value);

}  // namespace dnnreuse

#endif  // DNNREUSE_FORMAT_H_

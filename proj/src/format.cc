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

#include "dnnreuse/format.h"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace dnnreuse {

namespace {

std::string printf_double(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, value);
  std::string s(buf);
  // "-0.0000" after rounding a tiny negative.
  if (s.front() == '-' && s.find_first_not_of("-0.e+", 0) == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace

std::string format_ratio(double value) { return printf_double("%.4f", value); }

std::string format_count(double value) { return printf_double("%.3e", value); }

std::string format_exact(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return printf_double("%.17g", value);
  return std::string(buf, ptr);
}

}  // namespace dnnreuse

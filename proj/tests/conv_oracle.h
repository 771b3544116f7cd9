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

// Loop-nest enumeration of a grouped 2-D convolution, used as an independent
// oracle for the closed-form cost model.

#ifndef DNNREUSE_TESTS_CONV_ORACLE_H_
#define DNNREUSE_TESTS_CONV_ORACLE_H_

#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

namespace dnnreuse::testing {

struct ConvCase {
  std::int64_t in_c, in_h, in_w;
  std::int64_t out_c, k_h, k_w;
  std::int64_t stride = 1, pad = 0, groups = 1;
};

struct OracleCount {
  std::uint64_t macs = 0;
  std::uint64_t weights = 0;
  std::uint64_t activations = 0;
  std::int64_t out_h = 0, out_w = 0;
};

// Walks every (n, m, kh, kw, oh, ow) tuple the convolution evaluates, counting
// one MAC each. Weights are the distinct filter taps touched; activations are
// the ifmap elements plus the distinct ofmap elements written.
inline OracleCount enumerate_conv(const ConvCase& c) {
  OracleCount r;
  for (std::int64_t o = -c.pad; o + c.k_h <= c.in_h + c.pad; o += c.stride) ++r.out_h;
  for (std::int64_t o = -c.pad; o + c.k_w <= c.in_w + c.pad; o += c.stride) ++r.out_w;
  const std::int64_t in_per_group = c.in_c / c.groups;
  const std::int64_t out_per_group = c.out_c / c.groups;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> taps;
  std::vector<char> written(static_cast<std::size_t>(c.out_c * r.out_h * r.out_w), 0);
  for (std::int64_t n = 0; n < c.out_c; ++n) {
    const std::int64_t group = n / out_per_group;
    for (std::int64_t m = group * in_per_group; m < (group + 1) * in_per_group; ++m) {
      for (std::int64_t kh = 0; kh < c.k_h; ++kh) {
        for (std::int64_t kw = 0; kw < c.k_w; ++kw) {
          for (std::int64_t oh = 0; oh < r.out_h; ++oh) {
            for (std::int64_t ow = 0; ow < r.out_w; ++ow) {
              ++r.macs;
              taps.emplace(n, m - group * in_per_group, kh, kw);
              written[static_cast<std::size_t>((n * r.out_h + oh) * r.out_w + ow)] = 1;
            }
          }
        }
      }
    }
  }
  r.weights = taps.size();
  std::uint64_t out_elems = 0;
  for (char w : written) out_elems += static_cast<std::uint64_t>(w);
  r.activations = static_cast<std::uint64_t>(c.in_c * c.in_h * c.in_w) + out_elems;
  return r;
}

}  // namespace dnnreuse::testing

#endif  // DNNREUSE_TESTS_CONV_ORACLE_H_

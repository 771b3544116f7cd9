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

// The dnnreuse command line.
//
//   dnnreuse analyze   MODEL... [--batch B] [--alpha A] [--format csv|json]
//   dnnreuse layers    MODEL [--format csv|json]
//   dnnreuse calibrate --profiles CSV --measurements CSV [--models MODEL...]
//                      [--macs CSV] [--device D] [--batch B] [--step S]
//                      [--epsilon E] [--joined CSV]
//   dnnreuse roofline  --hw JSON [--metric ai|di] [--mode raw|converted] CSV...
//   dnnreuse stats     (--csv CSV --x COL --y COL | --r R --n N)
//   dnnreuse power     --samples CSV [--idle W] [--subtract-idle]
//   dnnreuse energy    --measurements CSV [--per-frame] [--models MODEL...]
//
// Exit codes: 0 success, 2 invalid input, 3 analytic degeneracy, 1 anything
// else. Reports go to stdout only when the whole command succeeds.

#ifndef DNNREUSE_TOOLS_CLI_H_
#define DNNREUSE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dnnreuse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDegenerate = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dnnreuse::cli

#endif  // DNNREUSE_TOOLS_CLI_H_

//
// Copyright 2026 The statleak Authors
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
//


#ifndef STATLEAK_CLI_CLI_H_
#define STATLEAK_CLI_CLI_H_

#include <ostream>

namespace statleak {

inline constexpr char kVersion[] = "0.1.0";

// Entry point of the statleak tool. Primary output goes to `out`; errors are
// a single JSON object {"error": {"code", "message"}} on `err`. Returns the
// process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace statleak

#endif  // STATLEAK_CLI_CLI_H_

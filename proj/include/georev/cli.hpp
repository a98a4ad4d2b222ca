/*
 * Copyright (c) 2026, the georev authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GEOREV_CLI_HPP
#define GEOREV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace georev::cli {

/// Runs the command-line interface (subcommands: profile, deform, metric,
/// geodesic, verify, sweep) with the given arguments (excluding argv[0]).
///
/// Exit-status contract: 0 = all checks passed, 1 = checks ran and failed,
/// 2 = invalid input or usage.  All floating-point table output uses 17
/// significant digits so runs with identical configuration (including the
/// seed) are byte-identical.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17-significant-digit (round-trip exact) formatting used for all CSV
/// output.
std::string format_double(double v);

}  // namespace georev::cli

#endif  // GEOREV_CLI_HPP

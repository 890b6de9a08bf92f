// SPDX-License-Identifier: Apache-2.0
//
// itsce: channel-parameter estimation for ITS-assisted high-speed-rail links
// Copyright (C) 2026 The itsce authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ITSCE_TOOLS_CLI_HPP
#define ITSCE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace itsce::cli
{
    // Runs the command line front end; returns the process exit status.
    // Subcommands: sweep, crlb, validate, demo.
    int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif

// Copyright 2026 The qnet Authors
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

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "qnet/network.hpp"

namespace qnet {

/// Parses the line-oriented network description. Relative `post` table paths
/// are resolved against `base_dir`. Throws ParseError with the offending line.
NetworkSpec parse_network(std::string_view text, const std::filesystem::path &base_dir = {});

NetworkSpec read_network(const std::filesystem::path &path);

/// Canonical text form; parse_network(print_network(s)) == s.
std::string print_network(const NetworkSpec &spec);

/// Writes the spec and any post table that has no path yet (as
/// "<party>.post" beside the file).
void write_network(NetworkSpec spec, const std::filesystem::path &path);

/// Post table text: one "<input> <output>" pair per line.
std::map<std::string, std::string> parse_post_table(std::string_view text);
std::string print_post_table(const PostTable &table);

}  // namespace qnet

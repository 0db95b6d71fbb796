#pragma once

#include <string>
#include <string_view>

#include "fpm/instance.hpp"

namespace fpm {

// Instance file (line oriented):
//   agents: a0 a1 ...
//   jobs: b0 b1 ...
//   a0 > b1 b0        # neighbors, best first; one line per vertex
// Lines starting with '#' are comments. A vertex without a line has an empty
// list, which is only legal for jobs without neighbors.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// Matching file: one "agent job" pair per line; omitted vertices are
// self-matched.
Matching parse_matching(const Instance& inst, std::string_view text);
std::string serialize_matching(const Instance& inst, const Matching& m);

std::string read_file(const std::string& path);

}  // namespace fpm

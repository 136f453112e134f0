#pragma once

#include <string>
#include <string_view>

#include "spa/instance.hpp"

namespace spa {

// Instance file format (line-oriented, '#' starts a comment, 1-based ids):
//   line 1:        n1 n2 n3
//   next n1 lines: student preference list; a tie group is parenthesised,
//                  e.g. "3 (1 2)". A blank line is an empty list.
//   next n2 lines: c_j lecturer_id
//   next n3 lines: d_k_plus d_k_minus
SpaInstance parse_instance(std::string_view text);
std::string write_instance(const SpaInstance& instance);

// Matching format: one "student project" pair per line (1-based ids), then a
// footer comment "# size=.. profile=(..) cost=.. degree=..".
Matching parse_matching(std::string_view text, const SpaInstance& instance);
std::string write_matching(const SpaInstance& instance, const Matching& matching);

SpaInstance load_instance(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace spa

#pragma once

#include <string>

#include "luk/definability.hpp"
#include "luk/parse.hpp"

namespace luk {

// Theory files: one formula per line, '#' comments, blank lines ignored.
Theory parse_theory_text(const std::string& text, const std::string& label = {});
Theory read_theory_file(const std::string& path);
std::string render_theory(const Theory& t);

// Single-line DEF records: DEF <formula> | <variable> | <m/n>
std::string render_instance(const DefInstance& inst);
DefInstance parse_instance(const std::string& line);

}  // namespace luk

#pragma once

#include <string>
#include <vector>

namespace ex2vec {

// Minimal CSV support for the comma-separated, unquoted files this project
// reads and writes. Fields never contain commas or quotes.
std::vector<std::string> split_csv_line(const std::string& line);

// Strict numeric field parsers. `context` is prepended to error messages,
// typically "file:line".
long long parse_int_field(const std::string& s, const std::string& context);
double parse_real_field(const std::string& s, const std::string& context);

// Fixed-format helpers so output files are byte-stable across runs.
std::string format_fixed(double v, int decimals);  // printf %.Nf
std::string format_g17(double v);                  // printf %.17g, round-trips exactly

}  // namespace ex2vec

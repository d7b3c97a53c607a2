// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hardness::csv {

// RFC 4180 reader: quoted fields, doubled quotes, CRLF or LF line ends.
// Blank lines are skipped.
std::vector<std::vector<std::string>> parse(std::istream& in);

// Quotes a field only when it contains a separator, quote or line break.
std::string escape(std::string_view field);

// printf-style %.{digits}g formatting.
std::string format_real(double value, int significant_digits);

} // namespace hardness::csv

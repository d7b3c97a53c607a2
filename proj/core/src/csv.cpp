// SPDX-License-Identifier: Apache-2.0

#include "hardness/csv.hpp"

#include <cstdio>

#include "hardness/errors.hpp"

namespace hardness::csv {

std::vector<std::vector<std::string>> parse(std::istream& in)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    bool row_has_content = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        if (row_has_content || !row.empty() || field_started) {
            end_field();
            rows.push_back(std::move(row));
        }
        row.clear();
        row_has_content = false;
    };

    char c = 0;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            field_started = true;
            row_has_content = true;
            break;
        case ',':
            row_has_content = true;
            end_field();
            break;
        case '\r':
            if (in.peek() == '\n') {
                in.get(c);
            }
            end_row();
            break;
        case '\n':
            end_row();
            break;
        default:
            field.push_back(c);
            field_started = true;
            row_has_content = true;
        }
    }
    if (in_quotes) {
        throw SchemaError("csv: unterminated quoted field");
    }
    end_row();
    return rows;
}

std::string escape(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_real(double value, int significant_digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

} // namespace hardness::csv

#include "sentiline/csv.hpp"

namespace sentiline {

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    bool row_started = false;

    auto end_field = [&]() {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_row = [&]() {
        end_field();
        rows.push_back(row);
        row.clear();
        row_started = false;
    };

    char c;
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
                if (!field_started || field.empty()) {
                    in_quotes = true;
                    field_started = true;
                    row_started = true;
                } else {
                    field.push_back(c); // stray quote mid-field, keep it
                }
                break;
            case ',':
                end_field();
                row_started = true;
                break;
            case '\r':
                break;
            case '\n':
                if (row_started || field_started || !field.empty() || !row.empty()) {
                    end_row();
                }
                break;
            default:
                field.push_back(c);
                field_started = true;
                row_started = true;
                break;
        }
    }
    if (row_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

std::string csv_escape(const std::string& f) {
    bool need = false;
    for (char c : f) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') {
            need = true;
            break;
        }
    }
    if (!need) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

} // namespace sentiline

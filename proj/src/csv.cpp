#include "fdrepair/csv.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace fdrepair {

namespace {

struct RawRow {
    std::vector<std::string> fields;
    int line; // 1-based line where the row starts
};

std::vector<RawRow> parse_rows(std::istream& in, char delim) {
    std::vector<RawRow> rows;
    std::string field;
    RawRow row{{}, 1};
    int line = 1;
    bool in_quotes = false;
    bool row_started = false;
    bool field_was_quoted = false;

    auto end_field = [&] {
        row.fields.push_back(field);
        field.clear();
        field_was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row = RawRow{{}, line};
        row_started = false;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        if (c == '"' && field.empty() && !field_was_quoted) {
            in_quotes = true;
            field_was_quoted = true;
            row_started = true;
        } else if (c == delim) {
            row_started = true;
            end_field();
        } else if (c == '\n') {
            ++line;
            if (row_started || !field.empty() || !row.fields.empty()) end_row();
            row.line = line;
        } else if (c == '\r') {
            // swallowed; \r\n and bare \r both treated as line ends via \n
        } else {
            row_started = true;
            field += c;
        }
    }
    if (in_quotes)
        throw std::runtime_error("parse error: unterminated quoted field starting near line " +
                                 std::to_string(row.line));
    if (row_started || !field.empty() || !row.fields.empty()) end_row();
    return rows;
}

CellValue parse_vcell(const std::string& text, const Schema& schema, int column) {
    if (text.size() >= 2 && text[0] == '?') {
        auto colon = text.rfind(':');
        if (colon != std::string::npos && colon > 1) {
            std::string attr_name = text.substr(1, colon - 1);
            std::string idx_text = text.substr(colon + 1);
            int attr = schema.index_of(attr_name);
            if (attr >= 0 && !idx_text.empty() &&
                idx_text.find_first_not_of("0123456789") == std::string::npos) {
                if (attr != column)
                    throw std::runtime_error("parse error: variable ?" + attr_name +
                                             " appears in column " + schema.name(column));
                return CellValue::variable(attr, std::stoll(idx_text));
            }
        }
    }
    return CellValue::constant(text);
}

VInstance load_any(std::istream& in, const CsvOptions& opts, bool variable_aware) {
    std::vector<RawRow> rows = parse_rows(in, opts.delimiter);
    if (rows.empty()) throw std::runtime_error("parse error: empty input");

    Schema schema;
    std::size_t first_data = 0;
    if (opts.header) {
        schema = Schema(rows[0].fields);
        first_data = 1;
    } else {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < rows[0].fields.size(); ++i)
            names.push_back("c" + std::to_string(i));
        schema = Schema(std::move(names));
    }

    std::vector<Tuple> tuples;
    for (std::size_t r = first_data; r < rows.size(); ++r) {
        const RawRow& row = rows[r];
        if (static_cast<int>(row.fields.size()) != schema.size())
            throw std::runtime_error("parse error: line " + std::to_string(row.line) + " has " +
                                     std::to_string(row.fields.size()) + " fields, expected " +
                                     std::to_string(schema.size()));
        Tuple t;
        t.reserve(schema.size());
        for (int a = 0; a < schema.size(); ++a) {
            if (variable_aware)
                t.push_back(parse_vcell(row.fields[a], schema, a));
            else
                t.push_back(CellValue::constant(row.fields[a]));
        }
        tuples.push_back(std::move(t));
    }
    return VInstance(std::move(schema), std::move(tuples));
}

std::string quote_field(const std::string& f, char delim) {
    bool needs = f.find(delim) != std::string::npos || f.find('"') != std::string::npos ||
                 f.find('\n') != std::string::npos || f.find('\r') != std::string::npos;
    if (!needs) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

VInstance load_csv(std::istream& in, const CsvOptions& opts) { return load_any(in, opts, false); }

VInstance load_csv_string(const std::string& text, const CsvOptions& opts) {
    std::istringstream ss(text);
    return load_csv(ss, opts);
}

VInstance load_csv_file(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_csv(in, opts);
}

VInstance load_vcsv(std::istream& in, const CsvOptions& opts) { return load_any(in, opts, true); }

VInstance load_vcsv_file(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_vcsv(in, opts);
}

std::string format_cell(const CellValue& c, const Schema& schema) {
    if (c.is_variable())
        return "?" + schema.name(c.var_attr()) + ":" + std::to_string(c.var_index());
    return c.text();
}

std::string write_csv(const VInstance& inst, const CsvOptions& opts) {
    std::string out;
    if (opts.header) {
        for (int a = 0; a < inst.attr_count(); ++a) {
            if (a) out += opts.delimiter;
            out += quote_field(inst.schema().name(a), opts.delimiter);
        }
        out += '\n';
    }
    for (int t = 0; t < inst.tuple_count(); ++t) {
        for (int a = 0; a < inst.attr_count(); ++a) {
            if (a) out += opts.delimiter;
            out += quote_field(format_cell(inst.cell(t, a), inst.schema()), opts.delimiter);
        }
        out += '\n';
    }
    return out;
}

void write_csv_file(const VInstance& inst, const std::string& path, const CsvOptions& opts) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << write_csv(inst, opts);
}

} // namespace fdrepair

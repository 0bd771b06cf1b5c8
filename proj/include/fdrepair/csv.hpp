#pragma once

#include <iosfwd>
#include <string>

#include "fdrepair/relation.hpp"

namespace fdrepair {

struct CsvOptions {
    bool header = true;
    char delimiter = ',';
};

// RFC-4180-style parsing: quoted fields may contain the delimiter, quotes
// ("" escape) and newlines.  Every field becomes a constant cell, verbatim;
// empty fields are ordinary empty-string constants.  Headerless files get
// synthesized attribute names c0..c<m-1>.
VInstance load_csv(std::istream& in, const CsvOptions& opts = {});
VInstance load_csv_string(const std::string& text, const CsvOptions& opts = {});
VInstance load_csv_file(const std::string& path, const CsvOptions& opts = {});

// Same, but cells of the form "?<attr>:<index>" are parsed back into
// variables.  Used to re-read repaired instances.
VInstance load_vcsv(std::istream& in, const CsvOptions& opts = {});
VInstance load_vcsv_file(const std::string& path, const CsvOptions& opts = {});

// Variables render as "?<attr>:<index>".
std::string write_csv(const VInstance& inst, const CsvOptions& opts = {});
void write_csv_file(const VInstance& inst, const std::string& path, const CsvOptions& opts = {});

std::string format_cell(const CellValue& c, const Schema& schema);

} // namespace fdrepair

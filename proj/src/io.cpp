#include "shapeassoc/io.hpp"

#include "shapeassoc/error.hpp"
#include "shapeassoc/numfmt.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>

namespace shapeassoc {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> fields;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Comma fields may be double-quoted, with "" escaping a quote.
std::vector<std::string> split(const std::string& line, Delimiter d) {
    std::vector<std::string> out;
    if (d == Delimiter::Whitespace) {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size()) break;
            const std::size_t j = line.find_first_of(" \t\r\n\v\f", i);
            out.push_back(line.substr(i, j == std::string::npos ? std::string::npos : j - i));
            i = j == std::string::npos ? line.size() : j;
        }
        return out;
    }
    const char sep = d == Delimiter::Tab ? '\t' : ',';
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"' && trim(field).empty()) {
            quoted = true;
            was_quoted = true;
            field.clear();
        } else if (c == sep) {
            out.push_back(was_quoted ? field : trim(field));
            field.clear();
            was_quoted = false;
        } else {
            field += c;
        }
    }
    out.push_back(was_quoted ? field : trim(field));
    return out;
}

Delimiter detect(const std::string& line) {
    if (line.find(',') != std::string::npos) return Delimiter::Comma;
    if (line.find('\t') != std::string::npos) return Delimiter::Tab;
    return Delimiter::Whitespace;
}

std::vector<Line> read_lines(std::istream& in, Delimiter d) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::string t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        if (d == Delimiter::Auto) d = detect(t);
        lines.push_back({number, split(d == Delimiter::Whitespace ? t : raw, d)});
    }
    return lines;
}

double parse_number(const std::string& token, std::size_t line, std::size_t column) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ValueError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": cannot parse '" + token + "' as a finite number");
    }
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos && trim(s) == s) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

SeriesSet parse_dataset(std::istream& in, const DatasetFile& f) {
    auto lines = read_lines(in, f.delimiter);
    if (lines.empty()) throw ShapeError("dataset: no data lines");

    const bool header = f.has_ids && f.orientation == Orientation::Columns;
    std::optional<std::vector<std::string>> ids;
    if (header) {
        ids = lines.front().fields;
        if (f.drop_first_column && !ids->empty()) ids->erase(ids->begin());
        lines.erase(lines.begin());
        if (lines.empty()) throw ShapeError("dataset: header line but no data");
    }
    const std::size_t skip = (f.has_ids && !header ? 1 : 0) + (f.drop_first_column ? 1 : 0);

    std::vector<std::vector<double>> grid;
    std::vector<std::string> row_ids;
    std::size_t width = 0;
    for (const Line& line : lines) {
        if (line.fields.size() <= skip) {
            throw ShapeError("line " + std::to_string(line.number) + ": no values");
        }
        if (grid.empty()) {
            width = line.fields.size();
        } else if (line.fields.size() != width) {
            throw ShapeError("line " + std::to_string(line.number) + ": expected " + std::to_string(width) +
                             " fields, found " + std::to_string(line.fields.size()));
        }
        if (f.has_ids && !header) row_ids.push_back(line.fields.front());
        std::vector<double> row;
        for (std::size_t c = skip; c < line.fields.size(); ++c) {
            row.push_back(parse_number(line.fields[c], line.number, c + 1));
        }
        grid.push_back(std::move(row));
    }

    Orientation o = f.orientation;
    if (o == Orientation::Auto) {
        o = f.has_ids || grid.size() < grid.front().size() ? Orientation::Rows : Orientation::Columns;
    }
    if (o == Orientation::Rows) {
        if (!row_ids.empty()) ids = std::move(row_ids);
        return load_set(grid, ids);
    }
    std::vector<std::vector<double>> cols(grid.front().size(), std::vector<double>(grid.size()));
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c) cols[c][r] = grid[r][c];
    if (ids && ids->size() != cols.size()) {
        throw ShapeError("dataset: header has " + std::to_string(ids->size()) + " ids for " +
                         std::to_string(cols.size()) + " columns");
    }
    return load_set(cols, ids);
}

SeriesSet parse_dataset(const DatasetFile& f) {
    std::ifstream in(f.path);
    if (!in) throw IoError("cannot read '" + f.path + "'");
    return parse_dataset(in, f);
}

std::string format_matrix_csv(const LabeledMatrix& m) {
    std::string out = "id";
    for (const auto& id : m.ids()) out += "," + csv_field(id);
    out += '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += csv_field(m.ids()[i]);
        for (std::size_t j = 0; j < m.size(); ++j) out += "," + format_roundtrip(m(i, j));
        out += '\n';
    }
    return out;
}

LabeledMatrix parse_matrix_csv(std::istream& in) {
    auto lines = read_lines(in, Delimiter::Comma);
    if (lines.empty()) throw ShapeError("matrix: empty input");
    std::vector<std::string> ids(lines.front().fields.begin() + 1, lines.front().fields.end());
    const std::size_t n = ids.size();
    if (lines.size() != n + 1) {
        throw ShapeError("matrix: header names " + std::to_string(n) + " ids but there are " +
                         std::to_string(lines.size() - 1) + " rows");
    }
    std::vector<double> values;
    values.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        const Line& line = lines[r + 1];
        if (line.fields.size() != n + 1) {
            throw ShapeError("line " + std::to_string(line.number) + ": expected " + std::to_string(n + 1) + " fields");
        }
        if (line.fields.front() != ids[r]) {
            throw ShapeError("line " + std::to_string(line.number) + ": row id '" + line.fields.front() +
                             "' does not match column id '" + ids[r] + "'");
        }
        for (std::size_t c = 1; c <= n; ++c) values.push_back(parse_number(line.fields[c], line.number, c + 1));
    }
    return LabeledMatrix(std::move(ids), std::move(values));
}

LabeledMatrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    return parse_matrix_csv(in);
}

std::string format_dataset(const SeriesSet& s) {
    std::string out;
    for (const auto& x : s) {
        out += csv_field(x.id());
        for (double v : x.values()) out += "," + format_roundtrip(v);
        out += '\n';
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace shapeassoc

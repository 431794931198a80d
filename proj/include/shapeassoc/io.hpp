#pragma once

#include "shapeassoc/matrix.hpp"
#include "shapeassoc/series.hpp"

#include <istream>
#include <string>

namespace shapeassoc {

enum class Delimiter { Auto, Comma, Whitespace, Tab };
enum class Orientation { Auto, Rows, Columns };

/// A delimited text dataset. Lines starting with '#' and blank lines are skipped.
///
/// With has_ids, rows-are-series files carry the id in the first field of each
/// line and columns-are-series files carry a header line of ids. Auto
/// orientation with has_ids reads ids from the first field. UCR archive files
/// put a class label first; drop_first_column discards it.
struct DatasetFile {
    std::string path;
    Delimiter delimiter = Delimiter::Auto;
    Orientation orientation = Orientation::Auto;
    bool has_ids = false;
    bool drop_first_column = false;
};

/// Auto orientation reads series from rows when there are fewer rows than columns.
/// Ragged rows raise ShapeError naming the line; bad tokens raise ValueError
/// naming line and column; unreadable files raise IoError.
[[nodiscard]] SeriesSet parse_dataset(const DatasetFile& f);
[[nodiscard]] SeriesSet parse_dataset(std::istream& in, const DatasetFile& f);

/// Header line "id,<ids>", then one line per row "<id>,<values>" at round-trip precision.
[[nodiscard]] std::string format_matrix_csv(const LabeledMatrix& m);
/// Inverse of format_matrix_csv.
[[nodiscard]] LabeledMatrix parse_matrix_csv(std::istream& in);
[[nodiscard]] LabeledMatrix read_matrix_csv(const std::string& path);

/// One series per line, id first, comma separated, round-trip precision.
[[nodiscard]] std::string format_dataset(const SeriesSet& s);

/// Writes text to a file, throwing IoError if it cannot be written.
void write_text(const std::string& path, const std::string& text);

}  // namespace shapeassoc

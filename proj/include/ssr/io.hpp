#ifndef SSR_IO_HPP
#define SSR_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ssr/construct.hpp"
#include "ssr/matrix.hpp"

namespace ssr {

/// A matrix on disk plus optional metadata. CSV carries the entries only;
/// the JSON form carries everything:
///
///   {"rows": 2, "cols": 2, "entries": [["1","1"],["2","1"]],
///    "metadata": {"pattern": "+-", "order": 2, "trace": {...}}}
///
/// Entries are always exact rational strings, never floating point.
struct MatrixDocument {
  Mat matrix;
  std::optional<SignPattern> pattern;
  std::optional<std::size_t> order;
  std::optional<nlohmann::ordered_json> trace;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

enum class DocumentFormat { csv, json };

DocumentFormat parse_format(std::string_view text);

/// One line per row, cells separated by ',', trailing newline.
std::string to_csv(const Mat& m);
/// Accepts '\n' or "\r\n" line endings and ignores blank lines. Throws
/// std::invalid_argument on ragged rows or malformed cells.
Mat parse_csv(std::string_view text);

std::string to_json(const MatrixDocument& doc);
MatrixDocument parse_json(std::string_view text);

std::string serialize(const MatrixDocument& doc, DocumentFormat format);
/// JSON when the first non-blank character is '{', CSV otherwise.
MatrixDocument parse_document(std::string_view text);

nlohmann::ordered_json trace_to_json(const ConstructionTrace& trace);

}  // namespace ssr

#endif  // SSR_IO_HPP

#include "ssr/io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ssr {

using nlohmann::ordered_json;

DocumentFormat parse_format(std::string_view text) {
  if (text == "csv") return DocumentFormat::csv;
  if (text == "json") return DocumentFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string to_csv(const Mat& m) {
  std::string out;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) out.push_back(',');
      out += to_string(m(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

Mat parse_csv(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<Scalar> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const std::string_view cell = line.substr(start, comma - start);
      try {
        row.push_back(parse_scalar(cell));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(rows.front().size()) + " cells, found " +
                                  std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  return Mat(rows);
}

ordered_json trace_to_json(const ConstructionTrace& trace) {
  ordered_json out = ordered_json::object();
  ordered_json ys = ordered_json::array();
  for (const auto& choice : trace.y_choices) {
    ordered_json row = ordered_json::array();
    for (const Scalar& y : choice) row.push_back(to_string(y));
    ys.push_back(std::move(row));
  }
  out["y_choices"] = std::move(ys);
  ordered_json deltas = ordered_json::array();
  for (const auto& d : trace.delta_choices) {
    deltas.push_back({{"row", d.row},
                      {"delta", to_string(d.delta)},
                      {"lambda", to_string(d.lambda)},
                      {"Lambda", to_string(d.Lambda)}});
  }
  out["delta_choices"] = std::move(deltas);
  ordered_json ext = ordered_json::array();
  for (const auto& e : trace.pattern_extensions) {
    ext.push_back({{"size", e.size}, {"sign", e.sign > 0 ? "+" : "-"}});
  }
  out["pattern_extensions"] = std::move(ext);
  out["oracle_skipped"] = trace.oracle_skipped;
  return out;
}

std::string to_json(const MatrixDocument& doc) {
  ordered_json out;
  out["rows"] = doc.matrix.rows();
  out["cols"] = doc.matrix.cols();
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 1; i <= doc.matrix.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 1; j <= doc.matrix.cols(); ++j) row.push_back(to_string(doc.matrix(i, j)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  if (doc.pattern || doc.order || doc.trace) {
    ordered_json meta = ordered_json::object();
    if (doc.pattern) meta["pattern"] = doc.pattern->to_string();
    if (doc.order) meta["order"] = *doc.order;
    if (doc.trace) meta["trace"] = *doc.trace;
    out["metadata"] = std::move(meta);
  }
  return out.dump(2) + "\n";
}

MatrixDocument parse_json(std::string_view text) {
  ordered_json in;
  try {
    in = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON document: ") + e.what());
  }
  try {
    const auto rows = in.at("rows").get<std::size_t>();
    const auto cols = in.at("cols").get<std::size_t>();
    const auto& entries = in.at("entries");
    if (rows == 0 || cols == 0) throw std::invalid_argument("rows and cols must be positive");
    if (!entries.is_array() || entries.size() != rows) {
      throw std::invalid_argument("entries must hold " + std::to_string(rows) + " rows");
    }
    MatrixDocument doc;
    doc.matrix = Mat(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto& row = entries[i];
      if (!row.is_array() || row.size() != cols) {
        throw std::invalid_argument("row " + std::to_string(i + 1) + " must hold " +
                                    std::to_string(cols) + " entries");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        doc.matrix(i + 1, j + 1) = parse_scalar(row[j].get<std::string>());
      }
    }
    if (in.contains("metadata")) {
      const auto& meta = in.at("metadata");
      if (meta.contains("pattern")) doc.pattern = SignPattern::parse(meta.at("pattern").get<std::string>());
      if (meta.contains("order")) doc.order = meta.at("order").get<std::size_t>();
      if (meta.contains("trace")) doc.trace = meta.at("trace");
    }
    return doc;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix document: ") + e.what());
  }
}

std::string serialize(const MatrixDocument& doc, DocumentFormat format) {
  return format == DocumentFormat::csv ? to_csv(doc.matrix) : to_json(doc);
}

MatrixDocument parse_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return MatrixDocument{parse_csv(text), std::nullopt, std::nullopt, std::nullopt};
}

}  // namespace ssr

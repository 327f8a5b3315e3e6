#include "ssr/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "ssr/construct.hpp"
#include "ssr/insert.hpp"
#include "ssr/io.hpp"
#include "ssr/verify.hpp"

namespace ssr::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format;
  std::string out_path;
  bool trace = false;
};

struct GenOptions {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string signs;
  std::optional<std::size_t> order;
};

struct VerifyOptions {
  std::string input;
  std::optional<std::size_t> order;
  bool oracle = false;
  std::size_t max_oracle_dim = 8;
};

struct ExtendOptions {
  std::string input;
  std::string side;
  std::string new_sign;
  std::optional<std::size_t> order;
};

struct InsertOptions {
  std::string input;
  std::string axis;
  std::size_t at = 0;
  std::string new_sign;
  std::optional<std::size_t> order;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format: csv or json (json when --trace)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "Write the document here instead of standard output");
  cmd->add_flag("--trace", o.trace, "Include the construction trace (json only)");
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open input '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::optional<int> parse_new_sign(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "+" || text == "+1") return 1;
  if (text == "-" || text == "-1") return -1;
  throw UsageError("--new-sign expects '+' or '-', got '" + text + "'");
}

void emit(const MatrixDocument& doc, const OutputOptions& o, std::ostream& out) {
  DocumentFormat format = o.trace ? DocumentFormat::json : DocumentFormat::csv;
  if (!o.format.empty()) format = parse_format(o.format);
  if (o.trace && format == DocumentFormat::csv) {
    throw UsageError("--trace needs --format json");
  }
  const std::string text = serialize(doc, format);
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + o.out_path + "'");
  file << text;
}

MatrixDocument make_document(Mat m, std::size_t order, const ConstructionTrace& trace,
                             const OutputOptions& o) {
  MatrixDocument doc;
  const SsrReport report = verify_auto(m, order);
  if (report.accepted()) doc.pattern = report.inferred_pattern;
  doc.order = order;
  if (o.trace) doc.trace = trace_to_json(trace);
  doc.matrix = std::move(m);
  return doc;
}

int cmd_gen(const GenOptions& g, const OutputOptions& o, std::ostream& out) {
  SignPattern eps;
  try {
    eps = SignPattern::parse(g.signs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::size_t d = std::min(g.rows, g.cols);
  const std::size_t order = g.order.value_or(d);
  if (order < 1 || order > d) {
    throw UsageError("--order must lie in [1, min(rows, cols)] = [1, " + std::to_string(d) + "]");
  }
  if (eps.size() != order) throw UsageError(kPatternLengthMessage);
  Construction built = order == d ? ssr_construction(g.rows, g.cols, eps)
                                  : ssr_p_construction(g.rows, g.cols, order, eps);
  MatrixDocument doc;
  doc.pattern = eps;
  doc.order = order;
  if (o.trace) doc.trace = trace_to_json(built.trace);
  doc.matrix = std::move(built.matrix);
  emit(doc, o, out);
  return kExitOk;
}

int cmd_verify(const VerifyOptions& v, std::istream& in, std::ostream& out) {
  const MatrixDocument doc = parse_document(read_input(v.input, in));
  const Mat& a = doc.matrix;
  const std::size_t order = v.order.value_or(a.min_dim());
  if (order < 1 || order > a.min_dim()) {
    throw UsageError("--order must lie in [1, " + std::to_string(a.min_dim()) + "]");
  }
  if (v.oracle && a.min_dim() > v.max_oracle_dim) {
    throw UsageError("--oracle enumerates every minor; refused for min(rows, cols) = " +
                     std::to_string(a.min_dim()) + " > " + std::to_string(v.max_oracle_dim) +
                     " (raise --max-oracle-dim to override)");
  }
  const SsrReport report = v.oracle ? verify_full(a, order) : verify_contiguous(a, order);
  out << (report.accepted() ? "accepted" : "rejected") << '\n';
  out << "order: " << report.order_checked << '\n';
  if (report.accepted()) {
    out << "pattern: " << report.inferred_pattern->to_string() << '\n';
    return kExitOk;
  }
  out << "witness: " << describe(*report.witness) << '\n';
  return kExitRejected;
}

int cmd_extend(const ExtendOptions& x, const OutputOptions& o, std::istream& in,
               std::ostream& out) {
  const MatrixDocument doc = parse_document(read_input(x.input, in));
  const Side side = parse_side(x.side);
  const std::optional<int> sign = parse_new_sign(x.new_sign);
  ConstructionTrace trace;
  Mat result;
  std::size_t order = 0;
  if (x.order && *x.order < doc.matrix.min_dim()) {
    if (sign) throw UsageError("--new-sign has no effect with --order below min(rows, cols)");
    order = *x.order;
    result = extend_border_ssr_p(doc.matrix, order, side, &trace);
  } else {
    if (x.order && *x.order != doc.matrix.min_dim()) {
      throw UsageError("--order exceeds min(rows, cols)");
    }
    result = extend_border(doc.matrix, side, sign, &trace);
    order = result.min_dim();
  }
  emit(make_document(std::move(result), order, trace, o), o, out);
  return kExitOk;
}

int cmd_insert(const InsertOptions& x, const OutputOptions& o, std::istream& in,
               std::ostream& out) {
  const MatrixDocument doc = parse_document(read_input(x.input, in));
  Axis axis;
  if (x.axis == "row") {
    axis = Axis::row;
  } else if (x.axis == "col") {
    axis = Axis::col;
  } else {
    throw UsageError("--axis expects 'row' or 'col'");
  }
  const std::optional<int> sign = parse_new_sign(x.new_sign);
  ConstructionTrace trace;
  Mat result;
  std::size_t order = 0;
  if (x.order && *x.order < doc.matrix.min_dim()) {
    if (sign) throw UsageError("--new-sign has no effect with --order below min(rows, cols)");
    order = *x.order;
    result = insert_line_ssr_p(doc.matrix, order, axis, x.at, &trace);
  } else {
    if (x.order && *x.order != doc.matrix.min_dim()) {
      throw UsageError("--order exceeds min(rows, cols)");
    }
    result = insert_line(doc.matrix, axis, x.at, sign, &trace);
    order = result.min_dim();
  }
  emit(make_document(std::move(result), order, trace, o), o, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct, extend and verify strictly sign regular matrices", "ssr"};
  app.require_subcommand(1);

  GenOptions gen;
  OutputOptions gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Construct an SSR or SSR_p matrix");
  gen_cmd->add_option("--rows", gen.rows, "Number of rows")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cols", gen.cols, "Number of columns")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--signs", gen.signs, "Sign pattern over {+,-}")->required();
  gen_cmd->add_option("--order", gen.order, "Build SSR_p for this p instead of full SSR");
  add_output_options(gen_cmd, gen_out);

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Decide whether a matrix is SSR / SSR_p");
  ver_cmd->add_option("--input", ver.input, "Matrix document (csv or json), '-' for stdin")->required();
  ver_cmd->add_option("--order", ver.order, "Check minors up to this size (default min(m,n))");
  ver_cmd->add_flag("--oracle", ver.oracle, "Enumerate every minor instead of contiguous ones");
  ver_cmd->add_option("--max-oracle-dim", ver.max_oracle_dim,
                      "Largest min(m,n) accepted with --oracle")
      ->capture_default_str();

  ExtendOptions ext;
  OutputOptions ext_out;
  auto* ext_cmd = app.add_subcommand("extend", "Add a line at a border");
  ext_cmd->add_option("--input", ext.input, "Matrix document, '-' for stdin")->required();
  ext_cmd->add_option("--side", ext.side, "left, right, top or bottom")
      ->required()
      ->check(CLI::IsMember({"left", "right", "top", "bottom"}));
  ext_cmd->add_option("--new-sign", ext.new_sign,
                      "'+' keeps, '-' flips the last sign for a new minor size");
  ext_cmd->add_option("--order", ext.order, "Treat the input as SSR_p");
  add_output_options(ext_cmd, ext_out);

  InsertOptions ins;
  OutputOptions ins_out;
  auto* ins_cmd = app.add_subcommand("insert", "Insert a line between two consecutive lines");
  ins_cmd->add_option("--input", ins.input, "Matrix document, '-' for stdin")->required();
  ins_cmd->add_option("--axis", ins.axis, "row or col")->required();
  ins_cmd->add_option("--at", ins.at, "Insert between lines k and k+1")->required();
  ins_cmd->add_option("--new-sign", ins.new_sign,
                      "'+' keeps, '-' flips the last sign for a new minor size");
  ins_cmd->add_option("--order", ins.order, "Treat the input as SSR_p");
  add_output_options(ins_cmd, ins_out);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, gen_out, out);
    if (*ver_cmd) return cmd_verify(ver, in, out);
    if (*ext_cmd) return cmd_extend(ext, ext_out, in, out);
    if (*ins_cmd) return cmd_insert(ins, ins_out, in, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // ContractError, PreconditionError and document parse failures.
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ssr::cli

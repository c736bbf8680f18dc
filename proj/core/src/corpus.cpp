#include "latpack/corpus.hpp"

#include <charconv>
#include <optional>

#include "latpack/error.hpp"

namespace latpack {

namespace {

constexpr std::string_view kSourcePrefix = "# source: ";

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line_no, "not an integer: '" + std::string(token) + "'");
  return value;
}

}  // namespace

void render_matrix(std::string& out, const SquareMatrix& m) {
  const int n = m.order();
  out += std::to_string(n);
  out += '\n';
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
}

std::string render_corpus(const MatrixCorpus& corpus) {
  if (corpus.source.find('\n') != std::string::npos)
    throw PreconditionError("corpus source must be a single line");
  std::string out;
  if (!corpus.source.empty()) {
    out += kSourcePrefix;
    out += corpus.source;
    out += '\n';
  }
  for (std::size_t k = 0; k < corpus.matrices.size(); ++k) {
    if (k > 0) out += '\n';
    render_matrix(out, corpus.matrices[k]);
  }
  return out;
}

MatrixCorpus parse_corpus(std::string_view text) {
  MatrixCorpus corpus;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  int order = 0;            // 0 while between blocks
  std::size_t header_line = 0;
  std::vector<int> cells;

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') {
      if (line_no == 1 && line.starts_with(kSourcePrefix)) corpus.source = line.substr(kSourcePrefix.size());
      continue;
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (order != 0)
        throw ParseError(line_no, "blank line inside the matrix started at line " + std::to_string(header_line));
      continue;
    }
    if (order == 0) {
      if (tokens.size() != 1) throw ParseError(line_no, "expected a matrix order on its own line");
      order = parse_int(tokens.front(), line_no);
      if (order < 1) throw ParseError(line_no, "matrix order must be positive");
      header_line = line_no;
      cells.clear();
      continue;
    }
    if (tokens.size() != static_cast<std::size_t>(order))
      throw ParseError(line_no, "ragged row: expected " + std::to_string(order) + " entries, found " +
                                    std::to_string(tokens.size()));
    for (auto t : tokens) {
      const int v = parse_int(t, line_no);
      if (v < 1 || v > order)
        throw ParseError(line_no, "entry " + std::to_string(v) + " outside 1.." + std::to_string(order));
      cells.push_back(v);
    }
    if (cells.size() == static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
      corpus.matrices.emplace_back(order, std::move(cells));
      cells = {};
      order = 0;
    }
  }
  if (order != 0)
    throw ParseError(line_no, "unexpected end of input inside the matrix started at line " +
                                  std::to_string(header_line));
  return corpus;
}

}  // namespace latpack

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latpack/matrix.hpp"

namespace latpack {

/// An ordered list of square matrices plus a free-text origin note.
///
/// Text form, one block per matrix:
///
///     # source: <source>        (optional, first line)
///     n
///     a11 a12 ... a1n
///     ...
///     an1 an2 ... ann
///
/// Blocks are separated by one blank line. Any line starting with `#` is a
/// comment. Rendering is deterministic and parse(render(c)) == c.
struct MatrixCorpus {
  std::vector<SquareMatrix> matrices;
  std::string source;

  friend bool operator==(const MatrixCorpus&, const MatrixCorpus&) = default;
};

std::string render_corpus(const MatrixCorpus& corpus);
void render_matrix(std::string& out, const SquareMatrix& m);

/// Throws ParseError (with a 1-based line number) on ragged rows, non-integer
/// tokens, entries outside 1..n, or truncated blocks.
MatrixCorpus parse_corpus(std::string_view text);

}  // namespace latpack

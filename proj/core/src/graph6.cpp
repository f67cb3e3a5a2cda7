#include "tutte/graph6.hpp"

namespace tutte {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(std::size_t offset, const std::string& why) {
  throw InputError("graph6: " + why + " at byte " + std::to_string(offset));
}

int sixbits(std::string_view text, std::size_t i) {
  if (i >= text.size()) fail(i, "unexpected end of input");
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126) fail(i, "byte out of graph6 range");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();

  std::size_t i = base;
  long long n;
  int first = sixbits(text, i);
  if (first < 63) {
    n = first;
    i += 1;
  } else {
    // 126 starts the multi-byte length form.
    if (i + 3 >= text.size()) fail(i, "truncated vertex count");
    if (sixbits(text, i + 1) == 63) fail(i + 1, "vertex count beyond supported range");
    n = (static_cast<long long>(sixbits(text, i + 1)) << 12) |
        (sixbits(text, i + 2) << 6) | sixbits(text, i + 3);
    i += 4;
  }
  if (n > kMaxVertices) fail(base, "vertex count exceeds 64");

  Graph g(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(text.size() - i) < nbytes)
    fail(text.size(), "truncated adjacency data");
  if (static_cast<long long>(text.size() - i) > nbytes)
    fail(i + nbytes, "trailing bytes after adjacency data");

  long long bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      int b = sixbits(text, i + bit / 6);
      if ((b >> (5 - bit % 6)) & 1) g.add_edge(row, col);
    }
  }
  // Padding bits must be zero.
  for (long long pad = nbits; pad < nbytes * 6; ++pad) {
    int b = sixbits(text, i + pad / 6);
    if ((b >> (5 - pad % 6)) & 1) fail(i + pad / 6, "nonzero padding");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace tutte

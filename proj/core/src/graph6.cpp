#include "wmax/graph6.hpp"

#include <stdexcept>

namespace wmax {

// Bit order is the standard one: the upper triangle of the adjacency matrix
// in column order, x(0,1), x(0,2), x(1,2), x(0,3), ..., packed into 6-bit
// groups most significant bit first, each group offset by 63.

std::string graph6_encode(const Graph& g) {
  const int n = g.size();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw std::runtime_error("graph6: empty input");
  if (text.substr(0, 10) == ">>graph6<<")
    throw std::runtime_error("graph6: header form not accepted");
  const int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
  if (n < 1 || n > kMaxVertices)
    throw std::runtime_error("graph6: size byte out of range (n=" +
                             std::to_string(n) + ")");
  const int nbits = n * (n - 1) / 2;
  const size_t expect = 1 + static_cast<size_t>((nbits + 5) / 6);
  if (text.size() != expect)
    throw std::runtime_error("graph6: expected " + std::to_string(expect) +
                             " characters, got " + std::to_string(text.size()));
  Graph g(n);
  int row = 0, col = 1;
  for (size_t i = 1; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw std::runtime_error("graph6: invalid character at position " +
                               std::to_string(i));
    const int group = c - 63;
    for (int b = 5; b >= 0; --b) {
      const int bitval = (group >> b) & 1;
      if (col < n) {
        if (bitval) g.add_edge(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (bitval) {
        throw std::runtime_error("graph6: nonzero padding bits");
      }
    }
  }
  return g;
}

}  // namespace wmax

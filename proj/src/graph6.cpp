#include "ptn/graph6.hpp"

namespace ptn {

namespace {

void append_bits(std::string& out, uint64_t value, int nbits) {
  // big-endian bit append into a 6-bit accumulator held by caller via out
  // (we only ever call with nbits % 6 == 0 for headers)
  for (int i = nbits - 6; i >= 0; i -= 6)
    out.push_back(char(63 + ((value >> i) & 63)));
}

}  // namespace

std::string graph6_encode(const LargeGraph& g) {
  if (g.n >= (1 << 18)) throw std::invalid_argument("graph6_encode: vertex count needs the '~~' form, unsupported");
  std::string out;
  if (g.n <= 62) {
    out.push_back(char(63 + g.n));
  } else {
    out.push_back('~');
    append_bits(out, uint64_t(g.n), 18);
  }
  int acc = 0, nacc = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has(u, v) ? 1 : 0);
      if (++nacc == 6) {
        out.push_back(char(63 + acc));
        acc = nacc = 0;
      }
    }
  }
  if (nacc) out.push_back(char(63 + (acc << (6 - nacc))));
  return out;
}

LargeGraph graph6_decode(const std::string& s) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (pos + k > s.size()) throw Graph6Error(s.size(), "graph6: truncated input");
  };
  auto val = [&](size_t p) -> int {
    unsigned char c = s[p];
    if (c < 63 || c > 126) throw Graph6Error(p, "graph6: byte out of range");
    return c - 63;
  };
  need(1);
  long long n;
  if (s[pos] == '~') {
    ++pos;
    need(1);
    if (s[pos] == '~') throw Graph6Error(pos, "graph6: '~~' huge form unsupported");
    need(3);
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | val(pos + i);
    pos += 3;
  } else {
    n = val(pos);
    if (n == 63) throw Graph6Error(pos, "graph6: invalid header");
    ++pos;
  }
  LargeGraph g = LargeGraph::empty(int(n));
  long long nbits = n * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if ((long long)(s.size() - pos) != nbytes)
    throw Graph6Error(s.size(), "graph6: body length mismatch, expected " + std::to_string(nbytes) + " data bytes");
  long long bit = 0;
  int u = 0, v = 1;
  for (long long i = 0; i < nbytes; ++i) {
    int x = val(pos + i);
    for (int b = 5; b >= 0; --b, ++bit) {
      if (bit >= nbits) {
        if ((x >> b) & 1) throw Graph6Error(pos + i, "graph6: nonzero padding bits");
        continue;
      }
      if ((x >> b) & 1) g.add(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

}  // namespace ptn

#include "titree/sparse6.hpp"

#include <algorithm>
#include <cstdint>

#include "titree/error.hpp"

namespace titree {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedSparse6, what); }

void put_size(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::string_view strip(std::string_view line, std::string_view header) {
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  return line;
}

/// Reads the size field; advances `pos` past it.
std::int64_t get_size(std::string_view s, std::size_t& pos) {
  auto byte = [&](std::size_t i) -> std::int64_t {
    if (i >= s.size()) malformed("truncated size field");
    const int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) malformed("character outside 63..126 at offset " + std::to_string(i));
    return c - 63;
  };
  if (byte(pos) != 63) return byte(pos++);
  if (pos + 1 < s.size() && s[pos + 1] == 126) {
    std::int64_t n = 0;
    for (std::size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | byte(i);
    pos += 8;
    return n;
  }
  std::int64_t n = 0;
  for (std::size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | byte(i);
  pos += 4;
  return n;
}

class BitWriter {
 public:
  void put(std::uint64_t value, int width) {
    for (int b = width - 1; b >= 0; --b) bits_.push_back(static_cast<char>((value >> b) & 1));
  }
  void fill(std::size_t count, char bit) { bits_.insert(bits_.end(), count, bit); }
  std::size_t size() const { return bits_.size(); }
  void append_to(std::string& out) const {
    for (std::size_t i = 0; i < bits_.size(); i += 6) {
      int v = 0;
      for (std::size_t j = 0; j < 6; ++j) v = (v << 1) | bits_[i + j];
      out.push_back(static_cast<char>(v + 63));
    }
  }

 private:
  std::vector<char> bits_;
};

int bits_for(std::int64_t n) {
  int k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

std::string encode_sparse6(const Tree& t) {
  const std::int64_t n = t.order();
  std::string out(":");
  put_size(out, n);
  // Bits needed for n-1; zero when n == 1.
  const int k = n <= 1 ? 0 : bits_for(n);

  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  // Edges with u < v, ordered by (v, u).
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.v != b.v ? a.v < b.v : a.u < b.u;
  });

  BitWriter bits;
  std::int64_t cur = 0;
  for (const Edge& e : edges) {
    const std::int64_t u = e.u, v = e.v;
    if (v == cur) {
      bits.put(0, 1);
      bits.put(u, k);
    } else if (v == cur + 1) {
      cur = v;
      bits.put(1, 1);
      bits.put(u, k);
    } else {
      cur = v;
      bits.put(1, 1);
      bits.put(v, k);
      bits.put(0, 1);
      bits.put(u, k);
    }
  }
  const std::size_t pad = (6 - bits.size() % 6) % 6;
  if (k < 6 && n == (std::int64_t{1} << k) && pad >= static_cast<std::size_t>(k) && cur < n - 1) {
    // A padding run of ones would otherwise read as an edge to vertex n-1.
    bits.put(0, 1);
    bits.fill((6 - bits.size() % 6) % 6, 1);
  } else {
    bits.fill(pad, 1);
  }
  bits.append_to(out);
  return out;
}

std::vector<Edge> decode_sparse6_edges(std::string_view line, Vertex* order) {
  std::string_view s = strip(line, ">>sparse6<<");
  if (s.empty() || s.front() != ':') malformed("sparse6 line must start with ':'");
  std::size_t pos = 1;
  const std::int64_t n = get_size(s, pos);
  if (n < 1 || n > kMaxTreeOrder) malformed("unsupported vertex count " + std::to_string(n));
  const int k = n <= 1 ? 0 : bits_for(n);

  std::vector<char> bits;
  bits.reserve((s.size() - pos) * 6);
  for (std::size_t i = pos; i < s.size(); ++i) {
    const int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) malformed("character outside 63..126 at offset " + std::to_string(i));
    for (int b = 5; b >= 0; --b) bits.push_back(static_cast<char>(((c - 63) >> b) & 1));
  }

  std::vector<Edge> edges;
  std::int64_t v = 0;
  std::size_t i = 0;
  while (i + 1 + k <= bits.size()) {
    const int b = bits[i++];
    std::int64_t x = 0;
    for (int j = 0; j < k; ++j) x = (x << 1) | bits[i++];
    if (b) ++v;
    if (x >= n || v >= n) break;  // padding
    if (x > v) {
      v = x;
    } else {
      edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(v)});
    }
  }
  if (order) *order = static_cast<Vertex>(n);
  return edges;
}

Tree decode_sparse6(std::string_view line) {
  Vertex n = 0;
  auto edges = decode_sparse6_edges(line, &n);
  try {
    return Tree(n, edges);
  } catch (const Error& e) {
    malformed(std::string("decoded graph is not a tree: ") + e.what());
  }
}

Tree decode_graph6(std::string_view line) {
  std::string_view s = strip(line, ">>graph6<<");
  if (s.empty()) malformed("empty graph6 line");
  std::size_t pos = 0;
  const std::int64_t n = get_size(s, pos);
  if (n < 1 || n > 100000) malformed("unsupported vertex count " + std::to_string(n));
  const std::int64_t need = n * (n - 1) / 2;
  if (static_cast<std::int64_t>(s.size() - pos) * 6 < need) malformed("truncated graph6 data");
  std::vector<Edge> edges;
  std::int64_t bit = 0;
  for (std::int64_t j = 1; j < n; ++j) {
    for (std::int64_t i = 0; i < j; ++i, ++bit) {
      const int c = static_cast<unsigned char>(s[pos + bit / 6]);
      if (c < 63 || c > 126) malformed("character outside 63..126");
      if (((c - 63) >> (5 - bit % 6)) & 1) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  try {
    return Tree(static_cast<Vertex>(n), edges);
  } catch (const Error& e) {
    malformed(std::string("decoded graph is not a tree: ") + e.what());
  }
}

Tree decode_graph_line(std::string_view line) {
  std::string_view s = strip(line, "");
  if (s.starts_with(">>sparse6<<") || s.starts_with(":")) return decode_sparse6(s);
  return decode_graph6(s);
}

}  // namespace titree

#include "titree/text.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <type_traits>

#include "titree/error.hpp"

namespace titree {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool try_take(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void take(char c) {
    if (!try_take(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    std::int64_t value = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool at_end() {
    skip_space();
    return pos_ == s_.size();
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family(std::string_view text) {
  Cursor in(text);
  const std::size_t start = in.position();
  const std::string kind = in.word();
  in.take('(');
  FamilySpec spec;
  if (kind == "P") {
    spec = PathSpec{in.integer()};
  } else if (kind == "S") {
    StarlikeSpec s;
    do {
      s.lengths.push_back(in.integer());
    } while (in.try_take(','));
    spec = std::move(s);
  } else if (kind == "C") {
    OrdinaryCaterpillarSpec c;
    c.spine = in.integer();
    in.take(';');
    do {
      c.positions.push_back(in.integer());
    } while (in.try_take(','));
    spec = std::move(c);
  } else if (kind == "CV") {
    VariantCaterpillarSpec c;
    c.spine = in.integer();
    in.take(';');
    do {
      Attachment a;
      a.position = in.integer();
      in.take(':');
      a.length = in.integer();
      c.attachments.push_back(a);
    } while (in.try_take(','));
    spec = std::move(c);
  } else {
    throw ParseError(start, "unknown family '" + kind + "'; expected P, S, C or CV");
  }
  in.take(')');
  if (!in.at_end()) in.fail("trailing characters");
  try {
    validate(spec);
  } catch (const Error& e) {
    throw ParseError(start, e.what());
  }
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, PathSpec>) {
          out << "P(" << s.n << ")";
        } else if constexpr (std::is_same_v<S, StarlikeSpec>) {
          out << "S(";
          for (std::size_t i = 0; i < s.lengths.size(); ++i) out << (i ? "," : "") << s.lengths[i];
          out << ")";
        } else if constexpr (std::is_same_v<S, OrdinaryCaterpillarSpec>) {
          out << "C(" << s.spine << "; ";
          for (std::size_t i = 0; i < s.positions.size(); ++i) {
            out << (i ? "," : "") << s.positions[i];
          }
          out << ")";
        } else {
          out << "CV(" << s.spine << "; ";
          for (std::size_t i = 0; i < s.attachments.size(); ++i) {
            out << (i ? ", " : "") << s.attachments[i].position << ":" << s.attachments[i].length;
          }
          out << ")";
        }
      },
      spec);
  return out.str();
}

Tree parse_edge_list(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  // Blank out comments so offsets still refer to the original text.
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    cleaned.push_back(comment ? ' ' : c);
  }
  Cursor in(cleaned);
  const std::int64_t n = in.integer();
  if (n < 1 || n > kMaxTreeOrder) in.fail("order out of range");
  std::vector<Edge> edges;
  while (!in.at_end()) {
    const std::int64_t u = in.integer();
    const std::int64_t v = in.integer();
    if (u < 0 || v < 0 || u >= n || v >= n) in.fail("vertex label out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Tree(static_cast<Vertex>(n), edges);
}

std::string format_edge_list(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const Edge& e : t.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace titree

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mmclab {

// Exit codes shared by the library error types and the CLI.
enum class ExitCode : int {
  ok = 0,
  failure = 1,
  usage = 2,
  missing_file = 3,
  schema = 4,
  degenerate_input = 5,
};

class Error : public std::runtime_error {
public:
  Error(ExitCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ExitCode code() const { return code_; }

private:
  ExitCode code_;
};

struct MissingFileError : Error {
  explicit MissingFileError(const std::string& msg) : Error(ExitCode::missing_file, msg) {}
};
struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error(ExitCode::schema, msg) {}
};
struct DegenerateInputError : Error {
  explicit DegenerateInputError(const std::string& msg) : Error(ExitCode::degenerate_input, msg) {}
};

// Year-quarter timestamp, ordered chronologically. Comparisons and the
// linear index make event-window arithmetic trivial.
struct YearQuarter {
  std::int16_t year = 0;
  std::int8_t quarter = 0;  // 1..4

  auto operator<=>(const YearQuarter&) const = default;

  int index() const { return year * 4 + (quarter - 1); }
  YearQuarter next() const {
    return quarter == 4 ? YearQuarter{static_cast<std::int16_t>(year + 1), 1}
                        : YearQuarter{year, static_cast<std::int8_t>(quarter + 1)};
  }
  std::string to_string() const {
    return std::to_string(year) + "Q" + std::to_string(quarter);
  }

  // Accepts "2010Q2" / "2010q2".
  static YearQuarter parse(std::string_view s) {
    auto pos = s.find_first_of("Qq");
    if (pos == std::string_view::npos || pos + 2 != s.size())
      throw SchemaError("bad year-quarter '" + std::string(s) + "', expected YYYYQn");
    int y = 0, q = 0;
    auto r1 = std::from_chars(s.data(), s.data() + pos, y);
    auto r2 = std::from_chars(s.data() + pos + 1, s.data() + s.size(), q);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || q < 1 || q > 4)
      throw SchemaError("bad year-quarter '" + std::string(s) + "', expected YYYYQn");
    return {static_cast<std::int16_t>(y), static_cast<std::int8_t>(q)};
  }
};

// Short uppercase-alphanumeric code packed into a uint32_t, left-justified
// and space-padded so integer order equals lexicographic order. Covers
// airport codes (exactly 3 letters) and carrier codes (2-3 alphanumerics).
class Code {
public:
  Code() = default;

  auto operator<=>(const Code&) const = default;

  bool empty() const { return packed_ == 0; }
  std::uint32_t packed() const { return packed_; }

  std::string to_string() const {
    std::string out;
    for (int shift = 24; shift >= 0; shift -= 8) {
      char c = static_cast<char>((packed_ >> shift) & 0xff);
      if (c != ' ' && c != 0) out.push_back(c);
    }
    return out;
  }

  static bool parse_airport(std::string_view s, Code& out) {
    if (s.size() != 3) return false;
    std::uint32_t p = 0;
    for (char c : s) {
      if (c < 'A' || c > 'Z') return false;
      p = (p << 8) | static_cast<unsigned char>(c);
    }
    out.packed_ = p << 8 | ' ';
    return true;
  }

  static bool parse_carrier(std::string_view s, Code& out) {
    if (s.size() < 2 || s.size() > 3) return false;
    std::uint32_t p = 0;
    for (char c : s) {
      bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
      if (!ok) return false;
      p = (p << 8) | static_cast<unsigned char>(c);
    }
    if (s.size() == 2) p = (p << 8) | ' ';
    out.packed_ = (p << 8) | ' ';
    return true;
  }

  static Code airport(std::string_view s) {
    Code c;
    if (!parse_airport(s, c)) throw SchemaError("bad airport code '" + std::string(s) + "'");
    return c;
  }
  static Code carrier(std::string_view s) {
    Code c;
    if (!parse_carrier(s, c)) throw SchemaError("bad carrier code '" + std::string(s) + "'");
    return c;
  }

private:
  std::uint32_t packed_ = 0;
};

struct CodeHash {
  std::size_t operator()(const Code& c) const noexcept {
    std::uint64_t x = c.packed();
    x *= 0x9e3779b97f4a7c15ull;
    return static_cast<std::size_t>(x ^ (x >> 32));
  }
};

// Shortest round-trip decimal formatting; keeps CSV output byte-stable
// across runs and thread counts.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw SchemaError("bad numeric value '" + std::string(s) + "'");
  return v;
}

inline long long parse_int(std::string_view s) {
  long long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw SchemaError("bad integer value '" + std::string(s) + "'");
  return v;
}

// FNV-1a, used for input fingerprints in run manifests.
inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace mmclab

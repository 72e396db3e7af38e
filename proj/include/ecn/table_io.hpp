// On-disk solver tables: a small binary format, CSV export, and a directory cache.
#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "ecn/errors.hpp"
#include "ecn/ruleset.hpp"
#include "ecn/solver.hpp"

namespace ecn {

inline constexpr std::array<char, 4> kTableMagic{'E', 'C', 'N', 'T'};
inline constexpr std::uint32_t kTableFormatVersion = 1;

/// Thrown when a table file is truncated, has the wrong magic, or an unknown version.
class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class T>
void put_le(std::ostream& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF));
}

template <class T>
T get_le(std::istream& in) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    int c = in.get();
    if (c == EOF) throw TableFormatError("table file is truncated");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return static_cast<T>(v);
}

}  // namespace detail

// Layout (little endian):
//   "ECNT" | u32 version | u32 n, n bytes ruleset text | u32 m | m x u64 limits |
//   u64 count | u8 has_grundy | count x u8 outcome (0 = P) | [count x u32 grundy]
inline void write_tables(std::ostream& out, const Tables& t) {
  const auto& o = t.outcomes;
  const std::string name = o.ruleset().to_string();
  out.write(kTableMagic.data(), kTableMagic.size());
  detail::put_le<std::uint32_t>(out, kTableFormatVersion);
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(name.size()));
  out.write(name.data(), static_cast<std::streamsize>(name.size()));
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(o.box().piles()));
  for (Height h : o.box().limits()) detail::put_le<std::uint64_t>(out, h);
  detail::put_le<std::uint64_t>(out, o.size());
  detail::put_le<std::uint8_t>(out, t.grundy ? 1 : 0);
  for (std::size_t i = 0; i < o.size(); ++i) out.put(o.at_index(i) == Outcome::P ? 0 : 1);
  if (t.grundy)
    for (auto g : t.grundy->values()) detail::put_le<std::uint32_t>(out, g);
  if (!out) throw std::runtime_error("failed to write table");
}

inline Tables read_tables(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kTableMagic) throw TableFormatError("not a table file (bad magic)");
  const auto version = detail::get_le<std::uint32_t>(in);
  if (version != kTableFormatVersion)
    throw TableFormatError("unsupported table format version " + std::to_string(version));
  const auto len = detail::get_le<std::uint32_t>(in);
  if (len > 4096) throw TableFormatError("ruleset name too long");
  std::string name(len, '\0');
  in.read(name.data(), len);
  if (!in) throw TableFormatError("table file is truncated");
  Ruleset rules = parse_ruleset(name);
  const auto m = detail::get_le<std::uint32_t>(in);
  if (static_cast<int>(m) != rules.piles()) throw TableFormatError("pile count does not match the ruleset");
  std::vector<Height> limits(m);
  for (auto& h : limits) h = detail::get_le<std::uint64_t>(in);
  Box box(limits);
  const auto count = detail::get_le<std::uint64_t>(in);
  if (count != box.size() || count > (std::uint64_t{1} << 36))
    throw TableFormatError("entry count does not match the box");
  const bool has_grundy = detail::get_le<std::uint8_t>(in) != 0;
  std::vector<std::uint8_t> is_p(count);
  for (auto& b : is_p) b = detail::get_le<std::uint8_t>(in) == 0 ? 1 : 0;
  Tables t{OutcomeTable(rules, box, std::move(is_p)), std::nullopt};
  if (has_grundy) {
    std::vector<std::uint32_t> g(count);
    for (auto& v : g) v = detail::get_le<std::uint32_t>(in);
    t.grundy.emplace(rules, box, std::move(g));
  }
  return t;
}

/// One line per position: "position,outcome[,grundy]" with the position quoted.
inline void write_tables_csv(std::ostream& out, const Tables& t) {
  const auto& o = t.outcomes;
  out << (t.grundy ? "position,outcome,grundy\n" : "position,outcome\n");
  for (std::size_t i = 0; i < o.size(); ++i) {
    out << '"' << o.box().position_at(i).to_string() << "\"," << to_string(o.at_index(i));
    if (t.grundy) out << ',' << t.grundy->at_index(i);
    out << '\n';
  }
}

/// Cache directory from the ECN_TABLE_CACHE environment variable, if set.
inline std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* dir = std::getenv("ECN_TABLE_CACHE"); dir && *dir) return std::filesystem::path(dir);
  return std::nullopt;
}

/// File name for a cube table: ruleset text with punctuation folded, bound, format version.
inline std::string table_file_name(const Ruleset& rules, Height bound) {
  std::string s;
  for (char c : rules.to_string()) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s + "-B" + std::to_string(bound) + "-v" + std::to_string(kTableFormatVersion) + ".ecnt";
}

/// Loads the cube table from `dir` when present and well formed; otherwise builds it and
/// stores it there. Unreadable cache files are rebuilt, not trusted.
inline Tables load_or_build(const Ruleset& rules, Height bound, const std::filesystem::path& dir,
                            const SolverOptions& opts = {}) {
  const auto path = dir / table_file_name(rules, bound);
  if (std::ifstream in(path, std::ios::binary); in) {
    try {
      Tables t = read_tables(in);
      if (t.outcomes.ruleset() == rules && t.outcomes.box().is_cube() && t.outcomes.bound() == bound &&
          (t.grundy || !opts.grundy))
        return t;
    } catch (const std::exception&) {
    }
  }
  Tables t = build_tables(rules, bound, opts);
  std::filesystem::create_directories(dir);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    write_tables(out, t);
  }
  std::filesystem::rename(tmp, path);
  return t;
}

}  // namespace ecn

// Rulesets: extended circular nim ECN(m_S, k) and general nim on a simplicial complex.
#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecn/errors.hpp"

namespace ecn {

/// Pile indices are stored in a 64-bit mask, so a ruleset has at most this many piles.
inline constexpr int kMaxPiles = 63;

/// A set of pile indices.
class Face {
 public:
  constexpr Face() = default;
  explicit constexpr Face(std::uint64_t bits) : bits_(bits) {}

  static Face of(std::initializer_list<int> indices) {
    Face f;
    for (int i : indices) f = f.with(i);
    return f;
  }

  static Face from_indices(std::span<const int> indices) {
    Face f;
    for (int i : indices) f = f.with(i);
    return f;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  Face with(int i) const {
    if (i < 0 || i >= kMaxPiles) throw ValidationError("pile index out of range: " + std::to_string(i));
    return Face(bits_ | (std::uint64_t{1} << i));
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend constexpr auto operator<=>(Face, Face) = default;

 private:
  std::uint64_t bits_ = 0;
};

enum class RulesetKind { ecn, simplicial };

/// An immutable impartial ruleset over `piles()` piles.
///
/// ECN rulesets carry (m, S, k); the face family is generated from every step s in S and
/// every start pile i as {i, i+s, ..., i+(k-1)s} mod m. Simplicial rulesets carry an explicit
/// face family. In both cases a move picks one face and removes tokens from its piles.
class Ruleset {
 public:
  static Ruleset ecn(int piles, std::vector<int> steps, int max_select) {
    if (piles < 2 || piles > kMaxPiles)
      throw ValidationError("pile count m must be in [2, " + std::to_string(kMaxPiles) + "], got " +
                            std::to_string(piles));
    if (steps.empty()) throw ValidationError("step set S must be nonempty");
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    for (int s : steps) {
      if (s < 1 || s > piles / 2)
        throw ValidationError("step " + std::to_string(s) + " violates 1 <= s <= floor(m/2) = " +
                              std::to_string(piles / 2));
    }
    if (max_select < 1 || max_select > piles)
      throw ValidationError("selection size k must satisfy 1 <= k <= m = " + std::to_string(piles) + ", got " +
                            std::to_string(max_select));

    std::vector<Face> generators;
    for (int s : steps) {
      for (int start = 0; start < piles; ++start) {
        Face f;
        for (int j = 0; j < max_select; ++j) f = f.with((start + j * s) % piles);
        if (std::find(generators.begin(), generators.end(), f) == generators.end()) generators.push_back(f);
      }
    }
    auto data = std::make_shared<Data>();
    data->kind = RulesetKind::ecn;
    data->piles = piles;
    data->steps = std::move(steps);
    data->max_select = max_select;
    data->generators = std::move(generators);
    finish(*data);
    return Ruleset(std::move(data));
  }

  /// Builds a simplicial ruleset from its complete face family. The family must contain every
  /// singleton and be closed under taking nonempty subsets.
  static Ruleset simplicial(int piles, std::vector<Face> faces) {
    check_piles(piles);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (Face f : faces) {
      if (f.empty()) throw ValidationError("the empty set is not a face");
      if ((f.bits() >> piles) != 0) throw ValidationError("face " + f.to_string() + " uses a pile index >= m");
    }
    for (int i = 0; i < piles; ++i) {
      if (!std::binary_search(faces.begin(), faces.end(), Face::of({i})))
        throw ValidationError("face family is missing singleton {" + std::to_string(i) + "}");
    }
    for (Face f : faces) {
      for (int i : f.indices()) {
        Face sub(f.bits() & ~(std::uint64_t{1} << i));
        if (!sub.empty() && !std::binary_search(faces.begin(), faces.end(), sub))
          throw ValidationError("face family is not downward closed: " + f.to_string() + " is a face but " +
                                sub.to_string() + " is not");
      }
    }
    return simplicial_from_maximal(piles, std::move(faces));
  }

  /// Builds a simplicial ruleset whose faces are all nonempty subsets of the given sets, plus
  /// every singleton.
  static Ruleset simplicial_from_maximal(int piles, std::vector<Face> generators) {
    check_piles(piles);
    for (int i = 0; i < piles; ++i) generators.push_back(Face::of({i}));
    std::vector<Face> maximal;
    for (Face f : generators) {
      if (f.empty()) continue;
      if ((f.bits() >> piles) != 0) throw ValidationError("face " + f.to_string() + " uses a pile index >= m");
      bool dominated = std::any_of(generators.begin(), generators.end(),
                                   [f](Face g) { return g != f && f.subset_of(g); });
      if (!dominated && std::find(maximal.begin(), maximal.end(), f) == maximal.end()) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    auto data = std::make_shared<Data>();
    data->kind = RulesetKind::simplicial;
    data->piles = piles;
    data->max_select = 0;
    for (Face f : maximal) data->max_select = std::max(data->max_select, f.size());
    data->generators = std::move(maximal);
    finish(*data);
    return Ruleset(std::move(data));
  }

  /// Moore's nim MN(m, k): any k piles at once.
  static Ruleset moore(int piles, int max_select) {
    check_piles(piles);
    if (max_select < 1 || max_select > piles)
      throw ValidationError("Moore's nim needs 1 <= k <= m, got k = " + std::to_string(max_select));
    std::vector<Face> faces;
    std::uint64_t full = piles == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << piles) - 1;
    // Enumerate k-subsets with Gosper's hack.
    std::uint64_t v = (std::uint64_t{1} << max_select) - 1;
    while (v <= full && v != 0) {
      faces.emplace_back(v);
      std::uint64_t t = v | (v - 1);
      v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return simplicial_from_maximal(piles, std::move(faces));
  }

  RulesetKind kind() const noexcept { return data_->kind; }
  bool is_ecn() const noexcept { return data_->kind == RulesetKind::ecn; }
  int piles() const noexcept { return data_->piles; }
  /// Normalized step set (sorted, unique). Empty for simplicial rulesets.
  const std::vector<int>& steps() const noexcept { return data_->steps; }
  /// k for ECN rulesets; the largest face size for simplicial ones.
  int max_select() const noexcept { return data_->max_select; }

  /// ECN: one face per (step, start) pair, with duplicates removed, in generation order.
  /// Simplicial: the inclusion-maximal faces.
  const std::vector<Face>& generator_faces() const noexcept { return data_->generators; }

  /// Every nonempty face of the complex, sorted by mask value.
  const std::vector<Face>& faces() const {
    if (data_->closure_too_large)
      throw CapacityError(data_->closure_size_estimate, kMaxClosure);
    return data_->closure;
  }

  /// k when this is Moore's nim MN(m, k) in simplicial form (maximal faces = all k-subsets).
  std::optional<int> moore_degree() const {
    if (is_ecn()) return std::nullopt;
    const int m = piles();
    const int k = max_select();
    const auto& gens = generator_faces();
    if (!std::all_of(gens.begin(), gens.end(), [k](Face f) { return f.size() == k; })) return std::nullopt;
    double subsets = 1;
    for (int i = 0; i < k; ++i) subsets = subsets * (m - i) / (i + 1);
    if (static_cast<double>(gens.size()) != subsets) return std::nullopt;
    return k;
  }

  bool is_face(Face f) const {
    if (f.empty()) return false;
    return std::any_of(data_->generators.begin(), data_->generators.end(), [f](Face g) { return f.subset_of(g); });
  }

  std::string to_string() const {
    if (is_ecn()) {
      std::string s = "ECN(" + std::to_string(piles()) + "_{";
      for (std::size_t i = 0; i < steps().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(steps()[i]);
      }
      return s + "}," + std::to_string(max_select()) + ")";
    }
    if (auto k = moore_degree()) {
      if (*k == 1) return "NIM(" + std::to_string(piles()) + ")";
      return "MN(" + std::to_string(piles()) + "," + std::to_string(*k) + ")";
    }
    std::string s = "SIMPLICIAL(" + std::to_string(piles()) + ";";
    for (std::size_t i = 0; i < generator_faces().size(); ++i) {
      if (i) s += ',';
      s += generator_faces()[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const Ruleset& a, const Ruleset& b) {
    if (a.data_ == b.data_) return true;
    return a.kind() == b.kind() && a.piles() == b.piles() && a.steps() == b.steps() &&
           a.max_select() == b.max_select() && a.generator_faces() == b.generator_faces();
  }

 private:
  static constexpr std::size_t kMaxClosure = std::size_t{1} << 22;

  struct Data {
    RulesetKind kind = RulesetKind::ecn;
    int piles = 0;
    std::vector<int> steps;
    int max_select = 0;
    std::vector<Face> generators;
    std::vector<Face> closure;
    bool closure_too_large = false;
    std::size_t closure_size_estimate = 0;
  };

  explicit Ruleset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  static void check_piles(int piles) {
    if (piles < 1 || piles > kMaxPiles)
      throw ValidationError("pile count must be in [1, " + std::to_string(kMaxPiles) + "], got " +
                            std::to_string(piles));
  }

  static void finish(Data& d) {
    std::size_t estimate = 0;
    for (Face f : d.generators) estimate += (std::size_t{1} << std::min(f.size(), 40)) - 1;
    d.closure_size_estimate = estimate;
    if (estimate > kMaxClosure) {
      d.closure_too_large = true;
      return;
    }
    d.closure.reserve(estimate);
    for (Face f : d.generators) {
      // Every nonempty submask of f.
      for (std::uint64_t sub = f.bits(); sub != 0; sub = (sub - 1) & f.bits()) d.closure.emplace_back(sub);
    }
    std::sort(d.closure.begin(), d.closure.end());
    d.closure.erase(std::unique(d.closure.begin(), d.closure.end()), d.closure.end());
  }

  std::shared_ptr<const Data> data_;
};

/// The face generators of an ECN ruleset: for each step and start pile, the arithmetic run of
/// at most k piles, with wrap-around duplicates collapsed.
inline std::vector<Face> build_maximal_faces(const Ruleset& rules) {
  if (!rules.is_ecn()) throw ValidationError("build_maximal_faces expects an ECN ruleset");
  return rules.generator_faces();
}

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) buf_ += c;
  }

  bool done() const { return pos_ == buf_.size(); }
  bool peek(char c) const { return pos_ < buf_.size() && buf_[pos_] == c; }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    if (buf_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    int value = 0;
    auto begin = buf_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, buf_.data() + buf_.size(), value);
    if (ec != std::errc{} || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("cannot parse ruleset \"" + buf_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string buf_;
  std::size_t pos_ = 0;
};

inline std::vector<int> parse_int_set(Cursor& in) {
  std::vector<int> out;
  in.expect('{');
  if (in.accept('}')) return out;
  do {
    out.push_back(in.integer());
  } while (in.accept(','));
  in.expect('}');
  return out;
}

}  // namespace detail

/// Parses the shared ruleset syntax.
///
///   ECN(6_{1,2},3)   extended circular nim (a bare step "ECN(5_2,3)" is accepted too)
///   CN(5,3)          circular nim, i.e. ECN(5_{1},3)
///   MN(5,2)          Moore's nim
///   NIM(3)           plain nim
///   SIMPLICIAL(3;{0,1},{2})   nim on the complex generated by the listed faces
///
/// Whitespace anywhere is ignored.
inline Ruleset parse_ruleset(std::string_view text) {
  detail::Cursor in(text);
  Ruleset result = [&] {
    if (in.accept("ECN(")) {
      int m = in.integer();
      in.expect('_');
      std::vector<int> steps;
      if (in.peek('{'))
        steps = detail::parse_int_set(in);
      else
        steps.push_back(in.integer());
      in.expect(',');
      int k = in.integer();
      in.expect(')');
      return Ruleset::ecn(m, std::move(steps), k);
    }
    if (in.accept("CN(")) {
      int m = in.integer();
      in.expect(',');
      int k = in.integer();
      in.expect(')');
      return Ruleset::ecn(m, {1}, k);
    }
    if (in.accept("MN(")) {
      int m = in.integer();
      in.expect(',');
      int k = in.integer();
      in.expect(')');
      return Ruleset::moore(m, k);
    }
    if (in.accept("NIM(")) {
      int m = in.integer();
      in.expect(')');
      return Ruleset::moore(m, 1);
    }
    if (in.accept("SIMPLICIAL(")) {
      int m = in.integer();
      std::vector<Face> gens;
      while (in.accept(';') || in.accept(',')) {
        auto idx = detail::parse_int_set(in);
        for (int i : idx)
          if (i < 0 || i >= m) in.fail("face index " + std::to_string(i) + " outside [0, m)");
        gens.push_back(Face::from_indices(idx));
      }
      in.expect(')');
      return Ruleset::simplicial_from_maximal(m, std::move(gens));
    }
    in.fail("unknown ruleset family");
  }();
  if (!in.done()) in.fail("trailing characters");
  return result;
}

}  // namespace ecn

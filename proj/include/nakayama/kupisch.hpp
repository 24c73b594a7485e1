#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nakayama/numbers.hpp"

namespace nakayama {

enum class Kind { linear, cyclic };

enum class KupischErrorKind {
  violates_relative,  // c_{i+1} + 1 < c_i
  violates_interior,  // c_i < 2 at an index that must be >= 2
  bad_boundary,       // linear: c_{n-1} != 1; cyclic: c_{n-1} < 2
};

struct KupischError {
  KupischErrorKind kind;
  int index;

  std::string message() const {
    switch (kind) {
      case KupischErrorKind::violates_relative:
        return "c[" + std::to_string(index) + "] exceeds c[" + std::to_string(index + 1) + "]+1";
      case KupischErrorKind::violates_interior:
        return "c[" + std::to_string(index) + "] < 2 at interior index";
      case KupischErrorKind::bad_boundary:
        return "boundary entry c[n-1] invalid for the requested kind";
    }
    return "invalid Kupisch series";
  }
};

struct ValidationError : std::invalid_argument {
  KupischError error;
  explicit ValidationError(KupischError e) : std::invalid_argument(e.message()), error(e) {}
};

/// Lexicographically smallest rotation. Idempotent and rotation-invariant.
/// (Booth's algorithm would be linear; the quadratic scan is fine at these sizes.)
inline std::vector<int> canonical_necklace(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  int best = 0;
  for (int r = 1; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      int a = s[(r + j) % n], b = s[(best + j) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::vector<int> out(n);
  for (int j = 0; j < n; ++j) out[j] = s[(best + j) % n];
  return out;
}

inline std::optional<KupischError> check_kupisch(std::span<const int> c, Kind kind) {
  const int n = static_cast<int>(c.size());
  if (n == 0) return KupischError{KupischErrorKind::bad_boundary, 0};
  for (int i = 0; i + 1 < n; ++i)
    if (c[i + 1] + 1 < c[i]) return KupischError{KupischErrorKind::violates_relative, i};
  for (int i = 0; i + 1 < n; ++i)
    if (c[i] < 2) return KupischError{KupischErrorKind::violates_interior, i};
  if (kind == Kind::linear) {
    if (c[n - 1] != 1) return KupischError{KupischErrorKind::bad_boundary, n - 1};
  } else {
    if (c[n - 1] < 2) return KupischError{KupischErrorKind::bad_boundary, n - 1};
    if (c[0] + 1 < c[n - 1])  // the wrap-around instance of the relative condition
      return KupischError{KupischErrorKind::violates_relative, n - 1};
  }
  return std::nullopt;
}

/// A validated Kupisch series. Linear series keep their order; cyclic series
/// made through make() are stored in canonical (lex-min) rotation so that
/// isomorphic algebras compare equal. labeled() keeps the caller's rotation,
/// which the CLI uses to report per-vertex data in the user's labelling.
class KupischSeries {
 public:
  static KupischSeries make(std::vector<int> entries, Kind kind) {
    validate(entries, kind);
    if (kind == Kind::cyclic) entries = canonical_necklace(entries);
    return KupischSeries(std::move(entries), kind);
  }

  static KupischSeries labeled(std::vector<int> entries, Kind kind) {
    validate(entries, kind);
    return KupischSeries(std::move(entries), kind);
  }

  const std::vector<int>& entries() const { return entries_; }
  Kind kind() const { return kind_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  bool cyclic() const { return kind_ == Kind::cyclic; }

  /// Entry with cyclic index reduction; linear access must be in range.
  int at(int i) const {
    if (cyclic()) return entries_[mod(i, rank())];
    return entries_[i];
  }

  bool operator==(const KupischSeries&) const = default;

 private:
  KupischSeries(std::vector<int> entries, Kind kind) : entries_(std::move(entries)), kind_(kind) {}

  static void validate(const std::vector<int>& entries, Kind kind) {
    if (auto err = check_kupisch(entries, kind)) throw ValidationError(*err);
  }

  std::vector<int> entries_;
  Kind kind_;
};

/// coKupisch entries d_i = min{k >= 1 : k >= c_{i-k}}, indices cyclic for
/// cyclic series; for linear series an out-of-range index counts as satisfied.
inline std::vector<int> cokupisch_entries(std::span<const int> c, Kind kind) {
  const int n = static_cast<int>(c.size());
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 1;; ++k) {
      int idx = i - k;
      if (kind == Kind::linear) {
        if (idx < 0 || k >= c[idx]) {
          d[i] = k;
          break;
        }
      } else if (k >= c[mod(idx, n)]) {
        d[i] = k;
        break;
      }
    }
  }
  return d;
}

inline std::vector<int> cokupisch(const KupischSeries& K) {
  return cokupisch_entries(K.entries(), K.kind());
}

/// The opposite algebra: reversal of the coKupisch series (canonicalized when
/// cyclic). An involution on validated series.
inline KupischSeries opposite(const KupischSeries& K) {
  std::vector<int> d = cokupisch(K);
  std::reverse(d.begin(), d.end());
  return KupischSeries::make(std::move(d), K.kind());
}

/// The indecomposable module b_{i,k} = e_i A / e_i J^k.
struct IndModule {
  int vertex;  // i in 0..n-1
  int length;  // k in 1..c_i

  bool operator==(const IndModule&) const = default;
};

inline bool is_simple(const IndModule& m) { return m.length == 1; }

inline bool is_projective(const KupischSeries& K, const IndModule& m) {
  return m.length == K.at(m.vertex);
}

/// Prop.-style criterion: b_{i,m} is injective iff c_{i-1} <= m; for linear
/// series vertex 0 has no incoming arrow, so every b_{0,m} is injective.
inline bool is_injective(const KupischSeries& K, const IndModule& m) {
  if (!K.cyclic() && m.vertex == 0) return true;
  return K.at(m.vertex - 1 + (K.cyclic() ? K.rank() : 0)) <= m.length;
}

/// AR-quiver coordinates (i, i+k-1); the second coordinate is reduced mod n
/// for cyclic series.
inline std::pair<int, int> ar_coordinate(const KupischSeries& K, const IndModule& m) {
  int y = m.vertex + m.length - 1;
  if (K.cyclic()) y = mod(y, K.rank());
  return {m.vertex, y};
}

inline std::vector<IndModule> indecomposables(const KupischSeries& K) {
  std::vector<IndModule> out;
  for (int i = 0; i < K.rank(); ++i)
    for (int k = 1; k <= K.entries()[i]; ++k) out.push_back({i, k});
  return out;
}

}  // namespace nakayama

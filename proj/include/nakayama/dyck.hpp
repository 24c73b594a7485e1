#pragma once

#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nakayama/kupisch.hpp"

namespace nakayama {

// Paths are stored as area sequences; the step word is derived. Steps are
// written h (one unit along y) and v (one unit along x); a Dyck path of
// semilength n runs from (0,0) to (n,n) with every prefix satisfying #h >= #v.
// The area entry c_k counts the lattice points with x-coordinate k between
// the path and the main diagonal, so column k carries c_k - c_{k-1} + 1
// horizontal steps followed by one vertical step.

class DyckPath {
 public:
  static DyckPath from_area(std::vector<int> area) {
    if (auto err = check_kupisch(area, Kind::linear)) throw ValidationError(*err);
    return DyckPath(std::move(area));
  }

  /// Accepts words over {h,v} or {1,0} with 1 = h.
  static DyckPath from_word(std::string_view word) {
    int n2 = static_cast<int>(word.size());
    if (n2 % 2 != 0) throw std::invalid_argument("step word has odd length");
    int n = n2 / 2;
    std::vector<int> area(n + 1);
    int h = 0, v = 0;
    for (char ch : word) {
      if (ch == 'h' || ch == '1') {
        ++h;
      } else if (ch == 'v' || ch == '0') {
        if (v == n || h <= v) throw std::invalid_argument("word is not a Dyck path");
        area[v] = h - v + 1;
        ++v;
      } else {
        throw std::invalid_argument(std::string("bad step character '") + ch + "'");
      }
    }
    if (h != v) throw std::invalid_argument("word is not balanced");
    area[n] = 1;
    return from_area(std::move(area));
  }

  /// Inverse of coarea_sequence: d_0 = 1 and d_j = j - #{v before the j-th h} + 1.
  static DyckPath from_coarea(std::span<const int> d) {
    int n = static_cast<int>(d.size()) - 1;
    if (n < 0 || d[0] != 1) throw std::invalid_argument("coarea must start with 1");
    std::string w;
    int v_before = 0;
    for (int j = 1; j <= n; ++j) {
      int vb = j + 1 - d[j];
      if (vb < v_before || vb > j - 1) throw std::invalid_argument("invalid coarea sequence");
      w.append(vb - v_before, 'v');
      w.push_back('h');
      v_before = vb;
    }
    w.append(n - v_before, 'v');
    return from_word(w);
  }

  static DyckPath from_algebra(const KupischSeries& K) {
    if (K.cyclic()) throw std::invalid_argument("cyclic series corresponds to a periodic path");
    return DyckPath(K.entries());
  }

  KupischSeries to_algebra() const { return KupischSeries::make(area_, Kind::linear); }

  int semilength() const { return static_cast<int>(area_.size()) - 1; }
  const std::vector<int>& area() const { return area_; }
  std::vector<int> coarea() const { return cokupisch_entries(area_, Kind::linear); }

  std::string word() const {
    const int n = semilength();
    std::string w;
    w.reserve(2 * n);
    for (int k = 0; k < n; ++k) {
      int rise = k == 0 ? area_[0] - 1 : area_[k] - area_[k - 1] + 1;
      w.append(rise, 'h');
      w.push_back('v');
    }
    return w;
  }

  bool operator==(const DyckPath&) const = default;

 private:
  explicit DyckPath(std::vector<int> area) : area_(std::move(area)) {}
  std::vector<int> area_;
};

/// An n-periodic Dyck path, stored as its length-n area sequence with the
/// labelling of columns by Z/n fixed. The global shift is min entry minus 2.
class PeriodicDyckPath {
 public:
  static PeriodicDyckPath from_area(std::vector<int> area) {
    if (auto err = check_kupisch(area, Kind::cyclic)) throw ValidationError(*err);
    return PeriodicDyckPath(std::move(area));
  }

  /// One period of the necklace word plus the global shift.
  static PeriodicDyckPath from_necklace(std::string_view word, int shift) {
    int n2 = static_cast<int>(word.size());
    if (n2 == 0 || n2 % 2 != 0) throw std::invalid_argument("necklace word has odd length");
    int n = n2 / 2;
    // Decode h/v flags.
    std::vector<int> is_h;
    is_h.reserve(n2);
    for (char ch : word) {
      if (ch == 'h' || ch == '1')
        is_h.push_back(1);
      else if (ch == 'v' || ch == '0')
        is_h.push_back(0);
      else
        throw std::invalid_argument(std::string("bad step character '") + ch + "'");
    }
    // Rotate so that the word starts right after a v step (a column boundary).
    int start = -1;
    for (int r = 0; r < n2; ++r)
      if (!is_h[mod(r - 1, n2)]) {
        start = r;
        break;
      }
    if (start < 0) throw std::invalid_argument("necklace has no vertical step");
    std::vector<int> rises;
    int run = 0;
    for (int j = 0; j < n2; ++j) {
      if (is_h[(start + j) % n2])
        ++run;
      else {
        rises.push_back(run);
        run = 0;
      }
    }
    if (static_cast<int>(rises.size()) != n) throw std::invalid_argument("word is not balanced");
    // rises[k] = c_k - c_{k-1} + 1 determines the area up to an additive
    // constant, fixed by the requested shift (minimum entry shift + 2).
    std::vector<int> area(n);
    area[0] = 0;
    for (int k = 1; k < n; ++k) area[k] = area[k - 1] + rises[k] - 1;
    int lo = *std::min_element(area.begin(), area.end());
    for (int& a : area) a += shift + 2 - lo;
    return from_area(std::move(area));
  }

  static PeriodicDyckPath from_algebra(const KupischSeries& K) {
    if (!K.cyclic()) throw std::invalid_argument("linear series corresponds to a Dyck path");
    return PeriodicDyckPath(K.entries());
  }

  KupischSeries to_algebra() const { return KupischSeries::make(area_, Kind::cyclic); }
  KupischSeries to_algebra_labeled() const { return KupischSeries::labeled(area_, Kind::cyclic); }

  int period() const { return static_cast<int>(area_.size()); }
  int shift() const { return *std::min_element(area_.begin(), area_.end()) - 2; }
  const std::vector<int>& area() const { return area_; }
  std::vector<int> coarea() const { return cokupisch_entries(area_, Kind::cyclic); }

  /// One period of the step word, starting at column 0.
  std::string word() const {
    const int n = period();
    std::string w;
    w.reserve(2 * n);
    for (int k = 0; k < n; ++k) {
      int rise = area_[k] - area_[mod(k - 1, n)] + 1;
      w.append(rise, 'h');
      w.push_back('v');
    }
    return w;
  }

  bool operator==(const PeriodicDyckPath&) const = default;

 private:
  explicit PeriodicDyckPath(std::vector<int> area) : area_(std::move(area)) {}
  std::vector<int> area_;
};

/// All local statistics of a (periodic) Dyck path. Peaks, valleys, rises and
/// falls are reported as coordinate pairs; returns, 1-cuts and hills by
/// position, exactly as the definitions state them. For periodic paths all
/// coordinates are residues mod n.
struct PathStats {
  std::vector<std::pair<int, int>> peaks;
  std::vector<std::pair<int, int>> valleys;
  std::vector<std::pair<int, int>> one_rises;
  std::vector<std::pair<int, int>> double_rises;  // (x, y) midpoint
  std::vector<std::pair<int, int>> double_falls;  // (x, y) midpoint
  std::vector<int> returns;
  std::vector<int> one_cuts;
  std::map<int, std::vector<int>> hills;          // k -> positions of k-hills
  std::vector<std::pair<int, int>> rectangles;    // (i+1, j) as in the definition
  int height = 0;
  bool is_bounce = false;
  std::vector<int> bounce_parts;
};

namespace detail {

// Shared statistic scan over an area sequence. For linear input the vector
// includes the trailing 1 (semilength = size - 1); for cyclic input every
// index is a column.
inline PathStats stats_from_area(std::span<const int> c, Kind kind) {
  PathStats st;
  const int size = static_cast<int>(c.size());
  const int n = kind == Kind::linear ? size - 1 : size;  // number of columns
  const bool cyc = kind == Kind::cyclic;
  std::vector<int> d = cokupisch_entries(c, kind);

  auto cat = [&](int i) { return cyc ? c[mod(i, n)] : c[i]; };
  auto dat = [&](int i) { return cyc ? d[mod(i, n)] : d[i]; };
  auto red = [&](int y) { return cyc ? mod(y, n) : y; };

  if (n == 0) return st;  // empty path

  // Peaks: column i carries a horizontal run iff c_i >= c_{i-1}; for Dyck
  // paths column 0 always does.
  for (int i = 0; i < n; ++i) {
    bool has_h = cyc ? cat(i) >= cat(i - 1) : (i == 0 || c[i] >= c[i - 1]);
    if (has_h) st.peaks.push_back({i, red(i + cat(i) - 1)});
  }

  // Valleys: a v followed by an h, i.e. the v entering a column with a rise.
  for (int i = cyc ? 0 : 1; i < n; ++i)
    if (cat(i) >= cat(i - 1)) st.valleys.push_back({i, red(i + cat(i - 1) - 2)});

  // 1-rises: exactly one h in the column.
  for (int i = 0; i < n; ++i) {
    bool one = cyc ? cat(i) == cat(i - 1) : (i == 0 ? c[0] == 2 : c[i] == c[i - 1]);
    if (one) st.one_rises.push_back({i, red(i + cat(i) - 1)});
  }

  // Double rises (midpoint y = j): d_{j+1} = d_j + 1, excluding j = 0 for
  // Dyck paths where there is no 0-th horizontal step.
  for (int j = cyc ? 0 : 1; j < (cyc ? n : n); ++j)
    if (dat(j + 1) == dat(j) + 1) st.double_rises.push_back({red(j + 1 - dat(j)), j});

  // Double falls (midpoint x = i): c_{i-1} = c_i + 1 with c_i > 1.
  for (int i = cyc ? 0 : 1; i < n; ++i)
    if (cat(i - 1) == cat(i) + 1 && cat(i) > 1) st.double_falls.push_back({i, red(i + cat(i) - 1)});

  // Returns: c_{i-1} = 2 (for Dyck paths this includes the final return at n).
  for (int i = cyc ? 0 : 1; i <= (cyc ? n - 1 : n); ++i)
    if (cat(i - 1) == 2) st.returns.push_back(i);

  // 1-cuts: an h with x-coordinate i and a v with y-coordinate i+1. The v
  // entering column k+1 has height k + c_k - 1.
  {
    std::set<int> vheights;
    for (int k = 0; k < n; ++k) vheights.insert(red(k + cat(k) - 1));
    for (int i = 0; i < n; ++i) {
      bool has_h = cyc ? cat(i) >= cat(i - 1) : (i == 0 || c[i] >= c[i - 1]);
      if (has_h && vheights.count(red(i + 1))) st.one_cuts.push_back(i);
    }
  }

  // k-hills at position p: a touch of the main diagonal at (p,p) followed by
  // c_p = k+1, c_{p+1} = k, ..., c_{p+k-1} = 2. Shifted periodic paths never
  // touch the main diagonal and so have no hills.
  for (int p = 0; p < n; ++p) {
    bool touch = cyc ? cat(p - 1) == 2 : (p == 0 || c[p - 1] == 2);
    if (!touch) continue;
    int k = cat(p) - 1;
    if (k < 1) continue;
    if (!cyc && p + k - 1 > n - 1) continue;
    bool ok = true;
    for (int j = 1; j < k; ++j)
      if (cat(p + j) != k + 1 - j) {
        ok = false;
        break;
      }
    if (ok) st.hills[k].push_back(p);
  }

  // Rectangles: c_{i+1} + 1 = c_i + c_{i+c_i}, reported at (i+1, i+c_i-1).
  for (int i = 0; i < n; ++i) {
    if (!cyc) {
      if (i + 1 > n - 1 || i + c[i] > n) continue;  // both entries must exist
      if (c[i + 1] + 1 == c[i] + c[i + c[i]]) st.rectangles.push_back({i + 1, i + c[i] - 1});
    } else {
      if (cat(i + 1) + 1 == cat(i) + cat(i + c[i]))
        st.rectangles.push_back({red(i + 1), red(i + cat(i) - 1)});
    }
  }

  st.height = *std::max_element(c.begin(), c.end()) - 1;

  // Bounce: every valley lies on the main diagonal, i.e. c_{i-1} = 2 at each
  // valley. Parts are the gaps between consecutive diagonal touches.
  st.is_bounce = true;
  for (auto [i, j] : st.valleys)
    if (cat(i - 1) != 2) st.is_bounce = false;
  if (st.is_bounce) {
    if (!cyc) {
      int prev = 0;
      for (int r : st.returns) {
        st.bounce_parts.push_back(r - prev);
        prev = r;
      }
    } else {
      const auto& rs = st.returns;
      for (size_t t = 0; t < rs.size(); ++t) {
        int next = t + 1 < rs.size() ? rs[t + 1] : rs[0] + n;
        st.bounce_parts.push_back(next - rs[t]);
      }
    }
  }
  return st;
}

}  // namespace detail

inline PathStats path_stats(const DyckPath& D) {
  return detail::stats_from_area(D.area(), Kind::linear);
}

inline PathStats path_stats(const PeriodicDyckPath& D) {
  return detail::stats_from_area(D.area(), Kind::cyclic);
}

inline std::vector<int> area_sequence(const DyckPath& D) { return D.area(); }
inline std::vector<int> area_sequence(const PeriodicDyckPath& D) { return D.area(); }
inline std::vector<int> coarea_sequence(const DyckPath& D) { return D.coarea(); }
inline std::vector<int> coarea_sequence(const PeriodicDyckPath& D) { return D.coarea(); }

/// Height: maximal area entry minus one.
inline int height(const DyckPath& D) {
  return *std::max_element(D.area().begin(), D.area().end()) - 1;
}
inline int height(const PeriodicDyckPath& D) {
  return *std::max_element(D.area().begin(), D.area().end()) - 1;
}

template <class Path>
inline std::pair<bool, std::vector<int>> is_bounce(const Path& D) {
  PathStats st = path_stats(D);
  return {st.is_bounce, st.bounce_parts};
}

/// Statistics of the hatted path: D with an extra h prepended (from (0,-1))
/// and an extra v appended. Used by the double-rise/double-fall description
/// of 1- and 2-regular modules.
struct HattedStats {
  std::set<int> double_rise_y;
  std::set<int> double_fall_x;
  std::set<int> returns;  // positions i with a v landing at (i, i)
};

inline HattedStats hatted_stats(const DyckPath& D) {
  HattedStats hs;
  std::string w = "h" + D.word() + "v";
  int x = 0, y = -1;
  char prev = 0;
  for (char s : w) {
    if (s == 'h') {
      if (prev == 'h') hs.double_rise_y.insert(y);  // midpoint of the two h's
      ++y;
    } else {
      if (prev == 'v') hs.double_fall_x.insert(x);
      ++x;
      if (x == y) hs.returns.insert(x);
    }
    prev = s;
  }
  return hs;
}

}  // namespace nakayama

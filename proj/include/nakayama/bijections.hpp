#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nakayama/dyck.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"

namespace nakayama {

struct OutOfDomain : std::domain_error {
  explicit OutOfDomain(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

inline std::vector<int> double_rise_ys(const PathStats& st) {
  std::vector<int> r;
  for (auto [x, y] : st.double_rises) r.push_back(y);
  std::sort(r.begin(), r.end());
  return r;
}

inline std::vector<int> double_fall_xs(const PathStats& st) {
  std::vector<int> u;
  for (auto [x, y] : st.double_falls) u.push_back(x);
  std::sort(u.begin(), u.end());
  return u;
}

/// The unique Dyck path of semilength n with the given valleys
/// (x and y coordinates strictly increasing, y_t >= x_t).
inline DyckPath path_from_valleys(const std::vector<std::pair<int, int>>& valleys, int n) {
  std::string w;
  int x = 0, y = 0;
  for (auto [vx, vy] : valleys) {
    w.append(vy - y, 'h');
    w.append(vx - x, 'v');
    x = vx;
    y = vy;
  }
  w.append(n - y, 'h');
  w.append(n - x, 'v');
  return DyckPath::from_word(w);
}

}  // namespace detail

/// The Lalanne-Kreweras involution. Mirroring the path, the vertical lines
/// emanate from the double falls and the horizontal lines from the double
/// rises; marking the intersection of the i-th vertical with the i-th
/// horizontal line places a valley of the image at (r_i, u_i), where r_i is
/// the i-th smallest double-rise y-coordinate and u_i the i-th smallest
/// double-fall x-coordinate.
inline DyckPath lk(const DyckPath& D) {
  PathStats st = path_stats(D);
  std::vector<int> rs = detail::double_rise_ys(st);
  std::vector<int> us = detail::double_fall_xs(st);
  if (rs.size() != us.size()) throw std::logic_error("double rise/fall counts differ");
  std::vector<std::pair<int, int>> valleys;
  for (size_t t = 0; t < rs.size(); ++t) valleys.push_back({rs[t], us[t]});
  return detail::path_from_valleys(valleys, D.semilength());
}

/// The crosses of the Billey-Jockusch-Stanley construction, as a bijection
/// from rows 0..n-1 to columns 1..n. A valley of D at (x, y) puts a cross in
/// the cell (row y, column x); the remaining columns receive crosses in the
/// free rows, both taken in increasing order. Crosses with column >= row + 1
/// lie above the main diagonal and are exactly the peaks of lk(D).
struct BjsCrosses {
  std::vector<int> col_of_row;  // size n, values 1..n
  std::vector<int> row_of_col;  // index 1..n (entry 0 unused)
};

inline BjsCrosses bjs_crosses(const DyckPath& D) {
  const int n = D.semilength();
  PathStats st = path_stats(D);
  BjsCrosses b;
  b.col_of_row.assign(n, 0);
  b.row_of_col.assign(n + 1, -1);
  for (auto [vx, vy] : st.valleys) {
    b.col_of_row[vy] = vx;
    b.row_of_col[vx] = vy;
  }
  std::vector<int> free_rows, free_cols;
  for (int a = 0; a < n; ++a)
    if (b.col_of_row[a] == 0) free_rows.push_back(a);
  for (int c = 1; c <= n; ++c)
    if (b.row_of_col[c] < 0) free_cols.push_back(c);
  for (size_t t = 0; t < free_rows.size(); ++t) {
    b.col_of_row[free_rows[t]] = free_cols[t];
    b.row_of_col[free_cols[t]] = free_rows[t];
  }
  return b;
}

/// The 321-avoiding permutation in one-line notation (1-based). The cross
/// matrix is the permutation matrix of the reverse complement of the result.
inline std::vector<int> bjs(const DyckPath& D) {
  const int n = D.semilength();
  BjsCrosses b = bjs_crosses(D);
  std::vector<int> pi(n);
  for (int i = 1; i <= n; ++i) pi[i - 1] = n + 1 - b.col_of_row[n - i];
  return pi;
}

/// Configuration of the two lines meeting the main diagonal at each position
/// of the cycle diagram of the BJS crosses.
enum class DiagConfig {
  one_cut,    // both lines in the upper left
  skip,       // horizontal upper left, vertical lower right
  delimiter,  // horizontal lower right, vertical upper left
  counted,    // both lines in the lower right
};

struct CycleDiagram {
  std::vector<DiagConfig> config;  // indexed by diagonal position 0..n-1
  std::vector<int> alpha;          // the composition read off the delimiters
  std::vector<int> one_cuts;
  std::vector<int> delimiters;
};

inline CycleDiagram cycle_diagram(const BjsCrosses& b) {
  const int n = static_cast<int>(b.col_of_row.size());
  CycleDiagram cd;
  cd.config.reserve(n);
  int since_delim = 0;
  for (int k = 0; k < n; ++k) {
    bool row_ul = b.col_of_row[k] >= k + 1;   // cross in row k above the diagonal
    bool col_ul = b.row_of_col[k + 1] <= k;   // cross in column k+1 above the diagonal
    DiagConfig cfg = row_ul ? (col_ul ? DiagConfig::one_cut : DiagConfig::skip)
                            : (col_ul ? DiagConfig::delimiter : DiagConfig::counted);
    cd.config.push_back(cfg);
    switch (cfg) {
      case DiagConfig::one_cut:
        cd.one_cuts.push_back(k);
        break;
      case DiagConfig::delimiter:
        cd.delimiters.push_back(k);
        cd.alpha.push_back(since_delim);
        since_delim = 0;
        break;
      case DiagConfig::counted:
        ++since_delim;
        break;
      case DiagConfig::skip:
        break;
    }
  }
  if (since_delim != 0) throw std::logic_error("counted configuration after the last delimiter");
  return cd;
}

struct PhiResult {
  DyckPath image;
  std::vector<int> alpha;
  std::vector<int> one_cuts;
};

/// The bijection phi = psi o lk: the image has peaks at the same
/// x-coordinates as lk(D), a single horizontal step wherever lk(D) has a
/// 1-cut, and runs of alpha_i + 2 horizontal steps on the remaining peak
/// columns, parts taken left to right.
inline PhiResult phi(const DyckPath& D) {
  const int n = D.semilength();
  if (n == 0) return {DyckPath::from_word(""), {}, {}};
  BjsCrosses b = bjs_crosses(D);
  CycleDiagram cd = cycle_diagram(b);
  std::vector<int> peak_cols;  // peak x-coordinates of lk(D)
  for (int a = 0; a < n; ++a)
    if (b.col_of_row[a] >= a + 1) peak_cols.push_back(a);
  std::set<int> cuts(cd.one_cuts.begin(), cd.one_cuts.end());
  if (peak_cols.size() != cuts.size() + cd.alpha.size())
    throw std::logic_error("cycle diagram inconsistent with peak count");
  std::vector<int> rise(n, 0);
  size_t part = 0;
  for (int q : peak_cols) rise[q] = cuts.count(q) ? 1 : cd.alpha[part++] + 2;
  std::string w;
  for (int x = 0; x < n; ++x) {
    w.append(rise[x], 'h');
    w.push_back('v');
  }
  return {DyckPath::from_word(w), cd.alpha, cd.one_cuts};
}

// ---------------------------------------------------------------------------
// Periodic Lalanne-Kreweras
// ---------------------------------------------------------------------------

/// DyckP_n: global shift 0 and non-constant area sequence.
inline bool in_dyck_p(const PeriodicDyckPath& D) {
  const auto& a = D.area();
  return D.shift() == 0 &&
         !std::all_of(a.begin(), a.end(), [&](int x) { return x == a[0]; });
}

/// DyckH_n: the path has a rectangle.
inline bool in_dyck_h(const PeriodicDyckPath& D) {
  return !path_stats(D).rectangles.empty();
}

namespace detail {

/// Core of the periodic Lalanne-Kreweras maps: pair the i-th double rise
/// after `start` with the i-th double fall after `start` (cyclic traversal
/// order, `start` itself included) and rebuild the path from those valleys.
inline PeriodicDyckPath lk_periodic_core(const PeriodicDyckPath& D, int start) {
  const int n = D.period();
  PathStats st = path_stats(D);
  std::vector<int> rs = double_rise_ys(st);
  std::vector<int> us = double_fall_xs(st);
  if (rs.empty() || rs.size() != us.size())
    throw std::logic_error("periodic LK needs matching double rises and falls");
  auto window = [&](std::vector<int> v) {
    for (int& x : v) x = start + mod(x - start, n);
    std::sort(v.begin(), v.end());
    return v;
  };
  rs = window(std::move(rs));
  us = window(std::move(us));
  const int m = static_cast<int>(rs.size());
  for (int t = 0; t < m; ++t)
    if (us[t] < rs[t]) throw std::logic_error("periodic LK produced an inverted valley");
  // Valleys (rs[t], us[t]) determine the area: between consecutive valley
  // x-coordinates the path descends from the next valley height.
  std::vector<int> area(n, 0);
  for (int t = 0; t < m; ++t) {
    int x0 = rs[t];
    int x1 = t + 1 < m ? rs[t + 1] : rs[0] + n;
    int y1 = t + 1 < m ? us[t + 1] : us[0] + n;
    for (int x = x0; x < x1; ++x) area[mod(x, n)] = y1 - x + 1;
  }
  return PeriodicDyckPath::from_area(std::move(area));
}

}  // namespace detail

/// LKP on DyckP_n, anchored at the return at position `p`.
inline PeriodicDyckPath lkp_at_return(const PeriodicDyckPath& D, int p) {
  return detail::lk_periodic_core(D, p);
}

/// LKH on DyckH_n, anchored at a rectangle with y-coordinate `j`; the image
/// has a return at j+1.
inline PeriodicDyckPath lkh_at_rectangle(const PeriodicDyckPath& D, int j) {
  return detail::lk_periodic_core(D, mod(j + 1, D.period()));
}

/// The generalized Lalanne-Kreweras involution on DyckP_n U DyckH_n:
/// LKP on DyckP_n (anchored at any return), LKH on DyckH_n (anchored at any
/// rectangle); the choice of anchor does not matter.
inline PeriodicDyckPath lk_periodic(const PeriodicDyckPath& D) {
  if (in_dyck_p(D)) {
    PathStats st = path_stats(D);
    return lkp_at_return(D, st.returns.front());
  }
  PathStats st = path_stats(D);
  if (!st.rectangles.empty()) {
    int j = st.rectangles.front().second;
    return lkh_at_rectangle(D, j);
  }
  throw OutOfDomain("path lies in neither DyckP nor DyckH");
}

/// The alternative shift-preserving extension discussed alongside the
/// periodic involution: subtract the global shift, apply the involution to
/// the reduced path (which must lie in DyckP n DyckH), and add the shift
/// back. It preserves the shift but differs from lk_periodic away from
/// DyckP n DyckH and does not transport regularity statistics.
inline PeriodicDyckPath lk_shift_preserving(const PeriodicDyckPath& D) {
  int c = D.shift();
  std::vector<int> reduced = D.area();
  for (int& a : reduced) a -= c;
  PeriodicDyckPath R = PeriodicDyckPath::from_area(std::move(reduced));
  if (!(in_dyck_p(R) && in_dyck_h(R)))
    throw OutOfDomain("reduced path must lie in DyckP n DyckH");
  PeriodicDyckPath E = lk_periodic(R);
  std::vector<int> lifted = E.area();
  for (int& a : lifted) a += c;
  return PeriodicDyckPath::from_area(std::move(lifted));
}

// ---------------------------------------------------------------------------
// Zeta map
// ---------------------------------------------------------------------------

struct ZetaResult {
  DyckPath image;
  std::vector<int> labels;  // labels[j-1] = k(j) for 1 <= j <= n
};

/// The zeta map: build the bounce path from the value distribution of the
/// coarea sequence (d_0..d_n) and fill the rectangles between consecutive
/// bounce peaks by scanning the coarea sequence, drawing a vertical step on
/// each k+1 and a horizontal step on each k+2. The vertical step drawn for
/// d_j has initial x-coordinate
///   k(j) = #{0 <= i <= n : d_i < d_j} + #{0 <= i < j : d_i = d_j} - 1.
inline ZetaResult zeta(const DyckPath& D) {
  const int n = D.semilength();
  std::vector<int> d = D.coarea();
  int hi = *std::max_element(d.begin(), d.end());
  std::string w;
  for (int k = 0; k + 1 <= hi; ++k) {
    for (int i = 0; i <= n; ++i) {
      if (d[i] == k + 1 && k > 0)
        w.push_back('v');  // the single entry d_0 = 1 draws no step
      else if (d[i] == k + 2)
        w.push_back('h');
    }
  }
  ZetaResult z{DyckPath::from_word(w), {}};
  z.labels.resize(n);
  for (int j = 1; j <= n; ++j) {
    int kj = -1;
    for (int i = 0; i <= n; ++i) {
      if (d[i] < d[j]) ++kj;
      if (i < j && d[i] == d[j]) ++kj;
    }
    z.labels[j - 1] = kj;
  }
  return z;
}

// ---------------------------------------------------------------------------
// Global dimension two and subsets
// ---------------------------------------------------------------------------

/// Linear algebras of global dimension <= 2 correspond to subsets of
/// {1..n} (n the semilength) of even cardinality: each simple of projective
/// dimension two at vertex i contributes the pair {i+1, i+c_i}.
inline std::vector<int> gd2_to_subset(const KupischSeries& K) {
  if (K.cyclic()) throw std::invalid_argument("subset bijection is stated for linear series");
  auto g = global_dimension(K);
  if (!g || *g > 2) throw NotGd2();
  std::vector<int> s;
  const auto& c = K.entries();
  for (int i = 0; i + 1 < K.rank(); ++i)
    if (pdim_two_criterion(K, i)) {
      s.push_back(i + 1);
      s.push_back(i + c[i]);  // = j + 1 for the rectangle (i+1, j)
    }
  return s;
}

/// Inverse map: the sorted even-cardinality subset {s_1 < ... < s_{2l}} of
/// {1..n} determines the rank-(n+1) series with c_i = c_{i+1} + 1 except at
/// the jump positions i = s_{2m-1} - 1, where c_i = s_{2m} - s_{2m-1} + 1.
inline KupischSeries subset_to_gd2(const std::vector<int>& subset, int n) {
  if (subset.size() % 2 != 0) throw std::invalid_argument("subset must have even cardinality");
  if (!std::is_sorted(subset.begin(), subset.end()))
    throw std::invalid_argument("subset must be sorted");
  for (size_t t = 0; t < subset.size(); ++t) {
    if (subset[t] < 1 || subset[t] > n) throw std::invalid_argument("subset element out of range");
    if (t > 0 && subset[t] == subset[t - 1]) throw std::invalid_argument("repeated element");
  }
  std::vector<int> jump_value(n + 1, 0);
  for (size_t m = 0; m + 1 < subset.size() + 1 && m < subset.size(); m += 2)
    jump_value[subset[m] - 1] = subset[m + 1] - subset[m] + 1;
  std::vector<int> c(n + 1);
  c[n] = 1;
  for (int i = n - 1; i >= 0; --i) c[i] = jump_value[i] > 0 ? jump_value[i] : c[i + 1] + 1;
  KupischSeries K = KupischSeries::make(std::move(c), Kind::linear);
  auto g = global_dimension(K);
  if (!g || *g > 2) throw std::logic_error("subset reconstruction left global dimension 2");
  return K;
}

}  // namespace nakayama

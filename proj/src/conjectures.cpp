#include "svyt/conjectures.hpp"

#include <map>
#include <stdexcept>

#include "svyt/counting.hpp"
#include "svyt/parallel.hpp"
#include "svyt/prograph.hpp"
#include "svyt/tableau.hpp"

namespace svyt {

Int quarter_plane_walks(int n, int k) {
  if (n < 0 || k < 2) throw std::invalid_argument("need n >= 0 and k >= 2");
  long long steps = static_cast<long long>(k + 1) * n;
  long long max_x = static_cast<long long>(k - 1) * n;
  long long max_y = max_x;
  auto idx = [&](long long x, long long y) { return x * (max_y + 1) + y; };
  std::vector<Int> cur((max_x + 1) * (max_y + 1), Int(0));
  cur[idx(0, 0)] = 1;
  std::vector<Int> next(cur.size());
  for (long long s = 0; s < steps; ++s) {
    for (auto& v : next) v = 0;
    for (long long x = 0; x <= max_x; ++x)
      for (long long y = 0; y <= max_y; ++y) {
        const Int& ways = cur[idx(x, y)];
        if (ways == 0) continue;
        if (y + k - 1 <= max_y) next[idx(x, y + k - 1)] += ways;
        if (x + 1 <= max_x && y >= 1) next[idx(x + 1, y - 1)] += ways;
        if (x >= k - 1) next[idx(x - k + 1, y)] += ways;
      }
    std::swap(cur, next);
  }
  return cur[idx(0, 0)];
}

Lattice3dConfig Lattice3dConfig::conjectured(int n, int k) {
  Lattice3dConfig c;
  c.endpoint = {static_cast<long long>(k - 1) * n, n,
                static_cast<long long>(k - 1) * n};
  c.predicate = [k](long long x, long long y, long long z) {
    return (k - 1) * x >= y && y >= (k - 1) * z;
  };
  return c;
}

Int lattice_paths_3d(const Lattice3dConfig& config) {
  auto [ex, ey, ez] = config.endpoint;
  if (ex < 0 || ey < 0 || ez < 0)
    throw std::invalid_argument("endpoint must be nonnegative");
  auto ok = [&](long long x, long long y, long long z) {
    return !config.predicate || config.predicate(x, y, z);
  };
  if (!ok(0, 0, 0)) return Int(0);
  std::vector<Int> dp((ex + 1) * (ey + 1) * (ez + 1), Int(0));
  auto idx = [&](long long x, long long y, long long z) {
    return (x * (ey + 1) + y) * (ez + 1) + z;
  };
  dp[idx(0, 0, 0)] = 1;
  for (long long x = 0; x <= ex; ++x)
    for (long long y = 0; y <= ey; ++y)
      for (long long z = 0; z <= ez; ++z) {
        const Int& ways = dp[idx(x, y, z)];
        if (ways == 0) continue;
        if (x + 1 <= ex && ok(x + 1, y, z)) dp[idx(x + 1, y, z)] += ways;
        if (y + 1 <= ey && ok(x, y + 1, z)) dp[idx(x, y + 1, z)] += ways;
        if (z + 1 <= ez && ok(x, y, z + 1)) dp[idx(x, y, z + 1)] += ways;
      }
  return dp[idx(ex, ey, ez)];
}

Int lattice_paths_3d(int n, int k) {
  return lattice_paths_3d(Lattice3dConfig::conjectured(n, k));
}

Int sloped_motzkin(int n, int k) {
  if (n < 0 || k < 2) throw std::invalid_argument("need n >= 0 and k >= 2");
  long long max_h = static_cast<long long>(k - 1) * n;
  std::vector<Int> cur(max_h + 1, Int(0)), next(max_h + 1);
  cur[0] = 1;
  for (int s = 0; s < n; ++s) {
    for (auto& v : next) v = 0;
    for (long long h = 0; h <= max_h; ++h) {
      const Int& ways = cur[h];
      if (ways == 0) continue;
      if (h + k - 1 <= max_h) next[h + k - 1] += ways;
      if (h >= 1) next[h - 1] += ways;
      next[h] += ways;
    }
    std::swap(cur, next);
  }
  return cur[0];
}

Int bounded_row_tableaux_total(int n, int k) {
  if (n < 0 || k < 2) throw std::invalid_argument("need n >= 0 and k >= 2");
  if (n == 0) return Int(1);  // the empty tableau
  Int total = 0;
  EnumLimits limits{n};
  // One row: density (1), so a = n.
  total += count_svt(SkewShape(Shape({n})), Density({1}), limits);
  // Two rows: density (1,k-1), entries a + b(k-1).
  for (int b = 1; b * (k - 1) + b <= n; ++b) {
    int a = n - b * (k - 1);
    if (a < b) continue;
    total += count_svt(SkewShape(Shape({a, b})), Density({1, k - 1}), limits);
  }
  // Three rows: density (1,k-1,1), entries a + b(k-1) + c.
  for (int b = 1; b <= n; ++b)
    for (int c = 1; c <= b; ++c) {
      int a = n - b * (k - 1) - c;
      if (a < b) continue;
      total += count_svt(SkewShape(Shape({a, b, c})), density_1k1(k), limits);
    }
  return total;
}

bool ConjectureReport::all_agree() const {
  for (const auto& p : points)
    if (!p.agree()) return false;
  return true;
}

nlohmann::ordered_json ConjectureReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["grid"] = grid;
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    nlohmann::ordered_json pt;
    pt["params"] = p.params;
    pt["lhs"] = p.lhs.get_str();
    pt["rhs"] = p.rhs.get_str();
    pt["verdict"] = p.agree() ? "AGREE" : "DISAGREE";
    j["points"].push_back(pt);
  }
  j["overall"] = all_agree() ? "AGREE" : "DISAGREE";
  return j;
}

std::string ConjectureReport::table_text() const {
  std::string out = claim + " over " + grid + "\n";
  for (const auto& p : points)
    out += "  " + p.params + ": lhs=" + p.lhs.get_str() +
           " rhs=" + p.rhs.get_str() + " " +
           (p.agree() ? "AGREE" : "DISAGREE") + "\n";
  out += all_agree() ? "overall: AGREE\n" : "overall: DISAGREE\n";
  return out;
}

ConjecturePoint conjecture6_check(int k, int x, int n, int m) {
  if (k < 3) throw std::invalid_argument("need k >= 3 for 2 <= a <= k-1");
  int a = x % (k - 1) == 0 ? k - 1 : x % (k - 1);
  if (a == 1)
    throw std::invalid_argument(
        "x = 1 mod (k-1) has an exact bijection; use the verify suites");
  if (n < 1 || m < 1) throw std::invalid_argument("need n, m >= 1");
  output_strand_count(k, n, m, x);
  int q = (x + k - a - 1) / (k - 1);

  ConjecturePoint point;
  point.params = "k=" + std::to_string(k) + ",x=" + std::to_string(x) +
                 ",n=" + std::to_string(n) + ",m=" + std::to_string(m);
  point.lhs = count_prographs(k, n, m, x);

  SkewShape shape(Shape({n + q, n + q, m}), Shape({q, 0, 0}));
  // When the i-th product fires it consumes the k rightmost free strands;
  // the k-a pass-through strands survive it exactly when at least
  // (k-1)i + (k-a) middle entries precede c_i.  That bound, over every
  // product 1 <= i <= m, carves out the image.
  point.rhs = 0;
  for_each_svt(shape, density_1k1(k), [&](const SetValuedTableau& t) {
    std::vector<int> middle, bottom;
    for (int col = 0; col < n + q; ++col)
      for (int v : t.cell(1, col)) middle.push_back(v);
    for (int col = 0; col < m; ++col) bottom.push_back(t.cell(2, col)[0]);
    for (int i = 1; i <= k - a; ++i)
      if (i > static_cast<int>(middle.size()) || middle[i - 1] != i)
        return true;
    for (int i = 1; i <= m; ++i) {
      long long need = static_cast<long long>(k - 1) * i + (k - a);
      long long below = 0;
      for (int v : middle)
        if (v < bottom[i - 1]) ++below;
      if (below < need) return true;
    }
    point.rhs += 1;
    return true;
  });
  return point;
}

namespace {

ConjectureReport run_points(
    const std::string& claim, const std::string& grid,
    const std::vector<std::function<ConjecturePoint()>>& tasks, int jobs) {
  ConjectureReport report;
  report.claim = claim;
  report.grid = grid;
  report.points = parallel_index_map(tasks.size(), jobs,
                                     [&](size_t i) { return tasks[i](); });
  return report;
}

}  // namespace

ConjectureReport conjecture6_sweep(int k_max, int nm_max, int jobs) {
  std::vector<std::function<ConjecturePoint()>> tasks;
  for (int k = 3; k <= k_max; ++k)
    for (int a = 2; a <= k - 1; ++a)
      for (int n = 1; n <= nm_max - 1; ++n)
        for (int m = 1; n + m <= nm_max; ++m) {
          int x = a;
          if ((n - m) * (k - 1) + x < 1) continue;
          tasks.push_back([k, x, n, m]() { return conjecture6_check(k, x, n, m); });
        }
  return run_points("conjecture6", "k<=" + std::to_string(k_max) +
                    ",n+m<=" + std::to_string(nm_max) + ",x=a", tasks, jobs);
}

ConjectureReport walks_sweep(int k_max, int n_max, int jobs) {
  std::vector<std::function<ConjecturePoint()>> tasks;
  for (int k = 2; k <= k_max; ++k)
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([k, n]() {
        ConjecturePoint p;
        p.params = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
        p.lhs = quarter_plane_walks(n, k);
        p.rhs = count_1k1(n, n, n, k);
        return p;
      });
  return run_points("quarter_plane_walks == C^k_{3,n}",
                    "k<=" + std::to_string(k_max) + ",n<=" +
                        std::to_string(n_max),
                    tasks, jobs);
}

ConjectureReport lattice3d_sweep(int k_max, int n_max, int jobs) {
  std::vector<std::function<ConjecturePoint()>> tasks;
  for (int k = 2; k <= k_max; ++k)
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([k, n]() {
        ConjecturePoint p;
        p.params = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
        p.lhs = lattice_paths_3d(n, k);
        p.rhs = count_1k1(n, n, n, k);
        return p;
      });
  return run_points("lattice_paths_3d (as conjectured) == C^k_{3,n}",
                    "k<=" + std::to_string(k_max) + ",n<=" +
                        std::to_string(n_max),
                    tasks, jobs);
}

ConjectureReport motzkin_sweep(int k_max, int n_max, int jobs) {
  std::vector<std::function<ConjecturePoint()>> tasks;
  for (int k = 2; k <= k_max; ++k)
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([k, n]() {
        ConjecturePoint p;
        p.params = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
        p.lhs = sloped_motzkin(n, k);
        p.rhs = bounded_row_tableaux_total(n, k);
        return p;
      });
  return run_points("sloped_motzkin == bounded_row_tableaux_total",
                    "k<=" + std::to_string(k_max) + ",n<=" +
                        std::to_string(n_max),
                    tasks, jobs);
}

}  // namespace svyt

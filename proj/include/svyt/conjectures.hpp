#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "svyt/numeric.hpp"

namespace svyt {

// Walks in the first quadrant from (0,0) back to (0,0) using (k+1)n steps
// from {(0,k-1),(1,-1),(-k+1,0)}.
Int quarter_plane_walks(int n, int k);

// Monotone lattice paths from the origin to `endpoint` using unit steps,
// constrained by a predicate on every visited point.
struct Lattice3dConfig {
  std::array<long long, 3> endpoint{0, 0, 0};
  std::function<bool(long long, long long, long long)> predicate;
  // The conjectured generalization: endpoint ((k-1)n, n, (k-1)n),
  // predicate (k-1)x >= y >= (k-1)z.  At k=2 this is the classical
  // x >= y >= z count.
  static Lattice3dConfig conjectured(int n, int k);
};
Int lattice_paths_3d(const Lattice3dConfig& config);
Int lattice_paths_3d(int n, int k);

// Paths (0,0) -> (n,0) over steps {(1,k-1),(1,-1),(1,0)} staying weakly
// above the x-axis.
Int sloped_motzkin(int n, int k);

// Total number of standard set-valued tableaux over all shapes with at most
// three rows, row densities (1,k-1,1) by row index, and exactly n entries.
Int bounded_row_tableaux_total(int n, int k);

struct ConjecturePoint {
  std::string params;
  Int lhs = 0;
  Int rhs = 0;
  bool agree() const { return lhs == rhs; }
};

struct ConjectureReport {
  std::string claim;
  std::string grid;
  std::vector<ConjecturePoint> points;
  bool all_agree() const;
  nlohmann::ordered_json to_json() const;
  std::string table_text() const;
};

// One instance of the section-5.1 conjecture: |PC^k_x(n,m)| against the
// number of skew tableaux whose middle row starts 1..k-a and whose bottom
// entries clear the derived middle-row thresholds.  Requires
// x = a mod (k-1) with 2 <= a <= k-1.
ConjecturePoint conjecture6_check(int k, int x, int n, int m);

ConjectureReport conjecture6_sweep(int k_max, int nm_max, int jobs = 1);
ConjectureReport walks_sweep(int k_max, int n_max, int jobs = 1);
ConjectureReport lattice3d_sweep(int k_max, int n_max, int jobs = 1);
ConjectureReport motzkin_sweep(int k_max, int n_max, int jobs = 1);

}  // namespace svyt

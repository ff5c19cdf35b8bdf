#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "svyt/numeric.hpp"
#include "svyt/shape.hpp"

namespace svyt {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A (skew) set-valued Young tableau: each existing cell carries a sorted set
// of positive integers.  Construction checks structure only; standardness is
// a separate query so that malformed fillings can be inspected.
class SetValuedTableau {
 public:
  SetValuedTableau() = default;
  // rows[i][j] holds the entries of the cell in row i at absolute column
  // inner[i] + j (0-based).
  SetValuedTableau(SkewShape shape, Density density,
                   std::vector<std::vector<std::vector<int>>> rows);

  const SkewShape& shape() const { return shape_; }
  const Density& density() const { return density_; }
  int rows() const { return shape_.rows(); }
  const std::vector<int>& cell(int row, int col) const;  // absolute column
  const std::vector<std::vector<std::vector<int>>>& row_cells() const {
    return rows_;
  }
  long long entry_count() const { return total_entries(shape_, density_); }

  friend bool operator==(const SetValuedTableau&,
                         const SetValuedTableau&) = default;

 private:
  SkewShape shape_;
  Density density_;
  std::vector<std::vector<std::vector<int>>> rows_;
};

// Reason the tableau is not standard, or nullopt.  Checks the full invariant
// set: per-cell entry counts, the entries being exactly {1..M}, sortedness,
// and row/column standardness.  Zero-density rows are transparent: a cell is
// compared against the nearest entry-bearing cell below it in its column, so
// the degenerate k=1 densities reduce to fewer-row tableaux.
std::optional<std::string> standardness_violation(const SetValuedTableau& t);
bool is_standard(const SetValuedTableau& t);

struct EnumLimits {
  long long max_entries = 24;
};

// Streams every standard tableau of the given shape and density exactly once,
// in lexicographic order of the cell-placement word of 1..M.  The visitor
// returns false to stop early.
void for_each_svt(const SkewShape& shape, const Density& density,
                  const std::function<bool(const SetValuedTableau&)>& visit,
                  const EnumLimits& limits = {});
std::vector<SetValuedTableau> all_svt(const SkewShape& shape,
                                      const Density& density,
                                      const EnumLimits& limits = {});
Int count_svt(const SkewShape& shape, const Density& density,
              const EnumLimits& limits = {});

// Set-valued Schutzenberger involution: 180-degree rotation of a rectangular
// straight-shape tableau with entries renumbered a -> M-a+1.  The output
// density is the reverse of the input's.
SetValuedTableau schutzenberger(const SetValuedTableau& t);

// Skew extension for shapes (n,n,n-a)/(b,0,0) with density (1,k-1,1): rotate
// 180 degrees and reverse entries; the output shape is (n,n,n-b)/(a,0,0).
SetValuedTableau skew_schutzenberger(const SetValuedTableau& t);

// Canonical text form: rows joined by ';', cells by '|', entries by ','.
// Absent (inner) cells render as '_'; an existing cell of a zero-density row
// renders as an empty field.
std::string to_text(const SetValuedTableau& t);
SetValuedTableau tableau_from_text(const std::string& text);

nlohmann::ordered_json to_json(const SetValuedTableau& t);
SetValuedTableau tableau_from_json(const nlohmann::ordered_json& j);

}  // namespace svyt

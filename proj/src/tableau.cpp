#include "svyt/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace svyt {

SetValuedTableau::SetValuedTableau(
    SkewShape shape, Density density,
    std::vector<std::vector<std::vector<int>>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (density.rows() < shape_.rows())
    throw std::invalid_argument("density does not cover every row");
  std::vector<int> d(density.per_row().begin(),
                     density.per_row().begin() + shape_.rows());
  density_ = Density(d);
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("row count does not match shape");
  for (int i = 0; i < shape_.rows(); ++i) {
    int width = shape_.row_end(i) - shape_.row_begin(i);
    if (static_cast<int>(rows_[i].size()) != width)
      throw std::invalid_argument("cell count does not match shape in row " +
                                  std::to_string(i));
  }
}

const std::vector<int>& SetValuedTableau::cell(int row, int col) const {
  if (!shape_.cell_exists(row, col))
    throw std::out_of_range("no cell at that position");
  return rows_[row][col - shape_.row_begin(row)];
}

namespace {

// Nearest row above `row` whose column-`col` cell exists and carries entries,
// or -1.  Zero-density rows are skipped.
int up_reference(const SkewShape& s, const Density& d, int row, int col) {
  for (int i = row - 1; i >= 0; --i) {
    if (!s.cell_exists(i, col)) return -1;  // columns are contiguous
    if (d.at(i) > 0) return i;
  }
  return -1;
}

}  // namespace

std::optional<std::string> standardness_violation(const SetValuedTableau& t) {
  const SkewShape& s = t.shape();
  const Density& d = t.density();
  long long m = t.entry_count();
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  for (int i = 0; i < s.rows(); ++i) {
    for (int col = s.row_begin(i); col < s.row_end(i); ++col) {
      const auto& cell = t.cell(i, col);
      if (static_cast<int>(cell.size()) != d.at(i))
        return "cell (" + std::to_string(i) + "," + std::to_string(col) +
               ") has " + std::to_string(cell.size()) + " entries, expected " +
               std::to_string(d.at(i));
      for (size_t e = 0; e < cell.size(); ++e) {
        int v = cell[e];
        if (v < 1 || v > m)
          return "entry " + std::to_string(v) + " outside 1.." +
                 std::to_string(m);
        if (seen[v]) return "entry " + std::to_string(v) + " repeated";
        seen[v] = 1;
        if (e > 0 && cell[e - 1] >= v)
          return "cell (" + std::to_string(i) + "," + std::to_string(col) +
                 ") is not strictly increasing";
      }
    }
  }
  for (int i = 0; i < s.rows(); ++i) {
    if (d.at(i) == 0) continue;
    for (int col = s.row_begin(i); col + 1 < s.row_end(i); ++col) {
      if (t.cell(i, col).back() >= t.cell(i, col + 1).front())
        return "row " + std::to_string(i) + " not standard at column " +
               std::to_string(col);
    }
    for (int col = s.row_begin(i); col < s.row_end(i); ++col) {
      int up = up_reference(s, d, i, col);
      if (up >= 0 && t.cell(up, col).back() >= t.cell(i, col).front())
        return "column " + std::to_string(col) + " not standard between rows " +
               std::to_string(up) + " and " + std::to_string(i);
    }
  }
  return std::nullopt;
}

bool is_standard(const SetValuedTableau& t) {
  return !standardness_violation(t).has_value();
}

namespace {

struct CellRef {
  int row;
  int col;  // absolute
  int capacity;
  int left = -1;  // index into cells, or -1
  int up = -1;
};

}  // namespace

void for_each_svt(const SkewShape& shape, const Density& density,
                  const std::function<bool(const SetValuedTableau&)>& visit,
                  const EnumLimits& limits) {
  long long m = total_entries(shape, density);
  if (m > limits.max_entries)
    throw BudgetExceeded("instance too large: " + std::to_string(m) +
                         " entries exceeds cap of " +
                         std::to_string(limits.max_entries));

  // Entry-bearing cells in row-major order, with left/up references for the
  // pruning rule: a cell may receive its first value only once the cell to
  // its left and the nearest entry-bearing cell above are full.
  std::vector<CellRef> cells;
  std::vector<std::vector<int>> cell_index(shape.rows());
  for (int i = 0; i < shape.rows(); ++i) {
    cell_index[i].assign(shape.outer().part(i), -1);
    if (density.at(i) == 0) continue;
    for (int col = shape.row_begin(i); col < shape.row_end(i); ++col) {
      CellRef ref;
      ref.row = i;
      ref.col = col;
      ref.capacity = density.at(i);
      if (col > shape.row_begin(i))
        ref.left = cell_index[i][col - 1];
      int up = up_reference(shape, density, i, col);
      if (up >= 0) ref.up = cell_index[up][col];
      cell_index[i][col] = static_cast<int>(cells.size());
      cells.push_back(ref);
    }
  }

  std::vector<std::vector<int>> contents(cells.size());
  bool stopped = false;

  auto emit = [&]() {
    std::vector<std::vector<std::vector<int>>> rows(shape.rows());
    for (int i = 0; i < shape.rows(); ++i)
      rows[i].resize(shape.row_end(i) - shape.row_begin(i));
    for (size_t c = 0; c < cells.size(); ++c)
      rows[cells[c].row][cells[c].col - shape.row_begin(cells[c].row)] =
          contents[c];
    if (!visit(SetValuedTableau(shape, density, std::move(rows))))
      stopped = true;
  };

  std::function<void(int)> place = [&](int value) {
    if (stopped) return;
    if (value > m) {
      emit();
      return;
    }
    for (size_t c = 0; c < cells.size() && !stopped; ++c) {
      const CellRef& ref = cells[c];
      int filled = static_cast<int>(contents[c].size());
      if (filled == ref.capacity) continue;
      if (filled == 0) {
        if (ref.left >= 0 &&
            static_cast<int>(contents[ref.left].size()) <
                cells[ref.left].capacity)
          continue;
        if (ref.up >= 0 && static_cast<int>(contents[ref.up].size()) <
                               cells[ref.up].capacity)
          continue;
      }
      contents[c].push_back(value);
      place(value + 1);
      contents[c].pop_back();
    }
  };

  place(1);
}

std::vector<SetValuedTableau> all_svt(const SkewShape& shape,
                                      const Density& density,
                                      const EnumLimits& limits) {
  std::vector<SetValuedTableau> out;
  for_each_svt(
      shape, density,
      [&](const SetValuedTableau& t) {
        out.push_back(t);
        return true;
      },
      limits);
  return out;
}

Int count_svt(const SkewShape& shape, const Density& density,
              const EnumLimits& limits) {
  Int n = 0;
  for_each_svt(
      shape, density,
      [&](const SetValuedTableau&) {
        n += 1;
        return true;
      },
      limits);
  return n;
}

namespace {

SetValuedTableau rotate_180(const SetValuedTableau& t) {
  const SkewShape& s = t.shape();
  int r = s.rows();
  if (r == 0) return t;
  int width = s.outer().part(0);
  long long m = t.entry_count();
  std::vector<int> outer(r), inner(r), dens(r);
  for (int i = 0; i < r; ++i) {
    outer[i] = width - s.inner().part(r - 1 - i);
    inner[i] = width - s.outer().part(r - 1 - i);
    dens[i] = t.density().at(r - 1 - i);
  }
  SkewShape shape(Shape{std::move(outer)}, Shape{std::move(inner)});
  std::vector<std::vector<std::vector<int>>> rows(r);
  for (int i = 0; i < r; ++i) {
    rows[i].resize(shape.row_end(i) - shape.row_begin(i));
    for (int col = shape.row_begin(i); col < shape.row_end(i); ++col) {
      const auto& src = t.cell(r - 1 - i, width - 1 - col);
      std::vector<int> entries(src.size());
      for (size_t e = 0; e < src.size(); ++e)
        entries[e] = static_cast<int>(m) + 1 - src[src.size() - 1 - e];
      rows[i][col - shape.row_begin(i)] = std::move(entries);
    }
  }
  return SetValuedTableau(shape, Density(dens), std::move(rows));
}

}  // namespace

SetValuedTableau schutzenberger(const SetValuedTableau& t) {
  if (!t.shape().straight() || !t.shape().outer().rectangular())
    throw std::invalid_argument(
        "schutzenberger is defined for straight rectangular shapes only");
  if (auto why = standardness_violation(t))
    throw std::invalid_argument("input tableau not standard: " + *why);
  SetValuedTableau out = rotate_180(t);
  if (auto why = standardness_violation(out))
    throw std::logic_error("schutzenberger image not standard: " + *why);
  return out;
}

SetValuedTableau skew_schutzenberger(const SetValuedTableau& t) {
  const SkewShape& s = t.shape();
  if (s.rows() < 2 || s.rows() > 3)
    throw std::invalid_argument("shape not of the (n,n,n-a)/(b,0,0) family");
  int n = s.outer().part(0);
  bool family = s.outer().part(1) == n && s.inner().part(1) == 0 &&
                s.inner().part(2) == 0 && s.inner().part(0) < n;
  if (s.rows() == 3) family = family && s.outer().part(2) >= 1;
  if (!family)
    throw std::invalid_argument("shape not of the (n,n,n-a)/(b,0,0) family");
  if (t.density().at(0) != 1 || (s.rows() == 3 && t.density().at(2) != 1))
    throw std::invalid_argument("density not of the (1,k-1,1) family");
  if (auto why = standardness_violation(t))
    throw std::invalid_argument("input tableau not standard: " + *why);
  SetValuedTableau out = rotate_180(t);
  if (auto why = standardness_violation(out))
    throw std::logic_error("skew schutzenberger image not standard: " + *why);
  return out;
}

std::string to_text(const SetValuedTableau& t) {
  std::string out;
  for (int i = 0; i < t.rows(); ++i) {
    if (i) out += ';';
    for (int col = 0; col < t.shape().outer().part(i); ++col) {
      if (col) out += '|';
      if (col < t.shape().row_begin(i)) {
        out += '_';
        continue;
      }
      const auto& cell = t.cell(i, col);
      for (size_t e = 0; e < cell.size(); ++e) {
        if (e) out += ',';
        out += std::to_string(cell[e]);
      }
    }
  }
  return out;
}

namespace {

// Split keeping empty fields, including a trailing one.
std::vector<std::string> split_fields(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

SetValuedTableau tableau_from_text(const std::string& text) {
  std::vector<std::vector<std::string>> grid;
  if (!text.empty())
    for (const std::string& row : split_fields(text, ';'))
      grid.push_back(split_fields(row, '|'));
  int r = static_cast<int>(grid.size());
  std::vector<int> outer(r), inner(r), dens(r, 0);
  std::vector<std::vector<std::vector<int>>> rows(r);
  for (int i = 0; i < r; ++i) {
    outer[i] = static_cast<int>(grid[i].size());
    int lead = 0;
    while (lead < outer[i] && grid[i][lead] == "_") ++lead;
    inner[i] = lead;
    for (int col = lead; col < outer[i]; ++col) {
      if (grid[i][col] == "_")
        throw std::invalid_argument("absent cell after present cells in row " +
                                    std::to_string(i));
      std::vector<int> entries;
      if (!grid[i][col].empty()) {
        std::stringstream cin(grid[i][col]);
        std::string item;
        while (std::getline(cin, item, ',')) entries.push_back(std::stoi(item));
      }
      if (col == lead)
        dens[i] = static_cast<int>(entries.size());
      else if (static_cast<int>(entries.size()) != dens[i])
        throw std::invalid_argument("uneven cell sizes in row " +
                                    std::to_string(i));
      rows[i].push_back(std::move(entries));
    }
  }
  return SetValuedTableau(SkewShape(Shape(outer), Shape(inner)), Density(dens),
                          std::move(rows));
}

nlohmann::ordered_json to_json(const SetValuedTableau& t) {
  nlohmann::ordered_json j;
  j["outer"] = t.shape().outer().parts();
  j["inner"] = std::vector<int>(t.shape().inner().parts());
  j["density"] = t.density().per_row();
  j["cells"] = t.row_cells();
  return j;
}

SetValuedTableau tableau_from_json(const nlohmann::ordered_json& j) {
  SkewShape shape(Shape(j.at("outer").get<std::vector<int>>()),
                  Shape(j.at("inner").get<std::vector<int>>()));
  Density density(j.at("density").get<std::vector<int>>());
  auto cells = j.at("cells").get<std::vector<std::vector<std::vector<int>>>>();
  return SetValuedTableau(shape, density, std::move(cells));
}

}  // namespace svyt

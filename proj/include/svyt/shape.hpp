#pragma once

#include <string>
#include <vector>

namespace svyt {

// Integer partition read top row first.  Trailing zeros are stripped on
// construction; parts must be weakly decreasing.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);
  static Shape parse(const std::string& text);  // "3,3,1"

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int row) const {
    return row >= 0 && row < rows() ? parts_[row] : 0;
  }
  long long cell_count() const;
  bool rectangular() const;
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> parts_;
};

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Shape outer, Shape inner);
  explicit SkewShape(Shape outer) : SkewShape(std::move(outer), Shape()) {}

  const Shape& outer() const { return outer_; }
  const Shape& inner() const { return inner_; }
  int rows() const { return outer_.rows(); }
  bool straight() const { return inner_.rows() == 0; }
  // 0-based row, 0-based absolute column.
  bool cell_exists(int row, int col) const {
    return row >= 0 && row < rows() && col >= inner_.part(row) &&
           col < outer_.part(row);
  }
  int row_begin(int row) const { return inner_.part(row); }
  int row_end(int row) const { return outer_.part(row); }
  long long cell_count() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Shape outer_, inner_;
};

// Entries per cell, by row.  Zero is allowed: the cells of a zero-density row
// exist but hold no entries.
class Density {
 public:
  Density() = default;
  explicit Density(std::vector<int> per_row);
  static Density parse(const std::string& text);  // "1,2,1"

  const std::vector<int>& per_row() const { return per_row_; }
  int rows() const { return static_cast<int>(per_row_.size()); }
  int at(int row) const {
    return row >= 0 && row < rows() ? per_row_[row] : 0;
  }
  // First `rows` entries in reverse order (the Schutzenberger image).
  Density reversed(int rows) const;
  std::string to_string() const;

  friend bool operator==(const Density&, const Density&) = default;

 private:
  std::vector<int> per_row_;
};

// Total number of entries M.  Throws if the density does not cover every row.
long long total_entries(const SkewShape& shape, const Density& density);

}  // namespace svyt

#include "svyt/shape.hpp"

#include <sstream>
#include <stdexcept>

namespace svyt {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty item in list: " + text);
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string join_int_list(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("negative shape part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("shape parts must be weakly decreasing");
  }
}

Shape Shape::parse(const std::string& text) { return Shape(parse_int_list(text)); }

long long Shape::cell_count() const {
  long long n = 0;
  for (int p : parts_) n += p;
  return n;
}

bool Shape::rectangular() const {
  for (int p : parts_)
    if (p != parts_[0]) return false;
  return true;
}

std::string Shape::to_string() const { return join_int_list(parts_); }

SkewShape::SkewShape(Shape outer, Shape inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.rows() > outer_.rows())
    throw std::invalid_argument("inner shape has more rows than outer");
  for (int i = 0; i < inner_.rows(); ++i)
    if (inner_.part(i) > outer_.part(i))
      throw std::invalid_argument("inner shape not contained in outer");
}

long long SkewShape::cell_count() const {
  long long n = 0;
  for (int i = 0; i < rows(); ++i) n += outer_.part(i) - inner_.part(i);
  return n;
}

Density::Density(std::vector<int> per_row) : per_row_(std::move(per_row)) {
  for (int d : per_row_)
    if (d < 0) throw std::invalid_argument("negative density");
}

Density Density::parse(const std::string& text) {
  return Density(parse_int_list(text));
}

Density Density::reversed(int rows) const {
  std::vector<int> out(rows, 0);
  for (int i = 0; i < rows; ++i) out[i] = at(rows - 1 - i);
  return Density(out);
}

std::string Density::to_string() const { return join_int_list(per_row_); }

long long total_entries(const SkewShape& shape, const Density& density) {
  if (density.rows() < shape.rows())
    throw std::invalid_argument("density does not cover every row of the shape");
  long long m = 0;
  for (int i = 0; i < shape.rows(); ++i)
    m += static_cast<long long>(shape.row_end(i) - shape.row_begin(i)) *
         density.at(i);
  return m;
}

}  // namespace svyt

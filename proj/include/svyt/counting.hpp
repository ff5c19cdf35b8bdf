#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "svyt/numeric.hpp"
#include "svyt/shape.hpp"
#include "svyt/tableau.hpp"

namespace svyt {

// Number of standard Young tableaux of the given shape (hook-length formula).
Int hook_length_count(const Shape& s);

// n-th d-dimensional Catalan number = |SYT(n^d)|.
Int catalan_d(int d, int n);

// k-Catalan number (kn)! / ((kn-n+1)! n!).
Int k_catalan(int n, int k);

// |SVT((arm,1,...,1), rho)| for the (1,k-1,1)-style hook fillings, with
// 0 <= legs <= 2 rows below the arm.  A single binomial.
Int hook_shape_count(int arm, int legs, int k);

enum class DensityFamily { OneKm1One, Km1OneOne };

Density density_1k1(int k);
Density density_k11(int k);
Density density_xi1(int k);  // (1,k-1,k-1,1)
Density density_xi2(int k);  // (k-1,1,1,1)

// Memo for the three-row recurrences, keyed by (family, a, b, c, k).
// Deterministic values make concurrent last-writer-wins insertion benign.
class CountCache {
 public:
  std::optional<Int> lookup(DensityFamily f, int a, int b, int c, int k) const;
  void insert(DensityFamily f, int a, int b, int c, int k, const Int& value);
  size_t size() const;
  void clear();
  // Plain-text persistence, one entry per line, written under an exclusive
  // advisory lock.  Loading merges.
  void load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  using Key = std::tuple<int, int, int, int, int>;
  mutable std::mutex mu_;
  std::map<Key, Int> memo_;
};

CountCache& global_count_cache();

// |SVT((a,b,c), (1,k-1,1))| by the two-branch corner-removal recurrence.
// Shapes are read top row first with a >= b >= c >= 0; k >= 1 (the k = 1
// degenerate density (1,0,1) is supported).  Invalid triples count 0.
Int count_1k1(int a, int b, int c, int k, CountCache* cache = nullptr);

// |SVT((a,b,c), (k-1,1,1))| by the three-branch recurrence.  Its
// a = b > c branch sums from i = 0, which the k = 2 reduction to plain
// standard Young tableaux pins down.
Int count_k11(int a, int b, int c, int k, CountCache* cache = nullptr);

// Number of standard skew Young tableaux of the two-row shape (b,c)/(i,j),
// computed both by corner-removal recursion and by the determinant of
// binomial reciprocals; the two routes must agree.
Int skew_two_row_syt_count(int b, int c, int i, int j);

// Closed-form polynomials for the rectangular families, evaluated exactly.
Int closed_form_1k1(int n, int k);  // n in 2..5
Int closed_form_k11(int n, int k);  // n in 2..4

struct ExactPolynomial {
  std::vector<Rat> coeffs;  // ascending degree, exact rationals
  int degree() const;
  Rat eval(long long k) const;
  // Exact fraction coefficient list, constant term first.
  std::string to_string() const;
  friend bool operator==(const ExactPolynomial&,
                         const ExactPolynomial&) = default;
};

struct DegreeBoundViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interpolates |SVT((a,b,c),(1,k-1,1))| as a polynomial in k by exact
// Lagrange interpolation at k = 1..D+1, where D is the degree bound
// (a+c-2 when a=b=c, a+c-1 when a>c).  One guard sample is checked; a
// mismatch raises DegreeBoundViolated.  Outside the bound's hypotheses the
// sample count falls back to a+c+2 and the measured degree is reported.
ExactPolynomial interpolate_polynomial(int a, int b, int c,
                                       DensityFamily family =
                                           DensityFamily::OneKm1One,
                                       CountCache* cache = nullptr);

// Brute-force count via tableau enumeration.
Int count_explicit(const Shape& s, const Density& d,
                   const EnumLimits& limits = {});

// Reference-table reproduction over a (k, n) grid.  A cell has no value
// when the brute-force instance exceeds the entry budget.
struct TableCell {
  int k = 0;
  int n = 0;
  std::optional<Int> value;
};

enum class TableFamily { OneKm1One, Km1OneOne, Xi1, Xi2 };

std::vector<TableCell> table_cells(TableFamily family, int k_min, int k_max,
                                   int n_min, int n_max,
                                   const EnumLimits& limits = {},
                                   int jobs = 1);
std::string table_csv(const std::vector<TableCell>& cells);
nlohmann::ordered_json table_json(TableFamily family,
                                  const std::vector<TableCell>& cells);

}  // namespace svyt

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "svyt/bijections.hpp"
#include "svyt/counting.hpp"
#include "svyt/prograph.hpp"
#include "svyt/tableau.hpp"

using namespace svyt;

TEST_CASE("tableau text form round-trips across assorted families") {
  struct Case {
    SkewShape shape;
    Density density;
  };
  std::vector<Case> cases = {
      {SkewShape(Shape({3, 3})), Density({2, 1})},
      {SkewShape(Shape({2, 2, 2})), Density({1, 2, 1})},
      {SkewShape(Shape({3, 3, 1}), Shape({1})), Density({1, 2, 1})},
      {SkewShape(Shape({2, 2, 2})), Density({1, 0, 1})},
  };
  for (const auto& c : cases)
    for_each_svt(c.shape, c.density, [&](const SetValuedTableau& t) {
      std::string text = to_text(t);
      SetValuedTableau back = tableau_from_text(text);
      CHECK(back == t);
      CHECK(to_text(back) == text);
      return true;
    });
}

TEST_CASE("tableau text form matches the documented example") {
  auto t = tableau_from_text("1|5;2,3,4|7,8,9;6|10");
  CHECK(t.shape() == SkewShape(Shape({2, 2, 2})));
  CHECK(t.density() == Density({1, 3, 1}));
  CHECK(to_text(t) == "1|5;2,3,4|7,8,9;6|10");
}

TEST_CASE("tableau text parse errors") {
  CHECK_THROWS_AS(tableau_from_text("1|_;2|3"), std::invalid_argument);
  CHECK_THROWS_AS(tableau_from_text("1|2,3;4|5"), std::invalid_argument);
  CHECK_THROWS_AS(tableau_from_text("1|2|3;4|5|6|7"), std::invalid_argument);
}

TEST_CASE("tableau json form round-trips bit-exactly") {
  for_each_svt(SkewShape(Shape({3, 3, 1}), Shape({1})), Density({1, 2, 1}),
               [&](const SetValuedTableau& t) {
                 auto j = to_json(t);
                 CHECK(tableau_from_json(j) == t);
                 CHECK(to_json(tableau_from_json(j)).dump() == j.dump());
                 return true;
               });
  auto j = to_json(tableau_from_text("1,2|4,5|6,7;3|8|9"));
  CHECK(j["outer"] == std::vector<int>{3, 3});
  CHECK(j["density"] == std::vector<int>{2, 1});
}

TEST_CASE("prograph text form round-trips across a family") {
  for (auto [k, n, m, x] : std::vector<std::array<int, 4>>{
           {2, 2, 2, 1}, {3, 2, 1, 3}, {4, 1, 1, 2}})
    for_each_prograph(k, n, m, x, [&](const Prograph& g) {
      CHECK(prograph_from_text(to_text(g)) == g);
      return true;
    });
}

TEST_CASE("deterministic artifact bytes across repeated and parallel runs") {
  auto cells1 = table_cells(TableFamily::OneKm1One, 1, 4, 1, 4);
  auto cells2 = table_cells(TableFamily::OneKm1One, 1, 4, 1, 4, {}, 3);
  CHECK(table_csv(cells1) == table_csv(cells2));
  CHECK(table_json(TableFamily::OneKm1One, cells1).dump() ==
        table_json(TableFamily::OneKm1One, cells2).dump());

  auto r1 = verify_cardinality(3, 2).to_json().dump();
  auto r2 = verify_cardinality(3, 2).to_json().dump();
  CHECK(r1 == r2);
}

TEST_CASE("cache misses and hits give identical values") {
  CountCache warm;
  auto cells = table_cells(TableFamily::OneKm1One, 1, 3, 1, 3);
  Int direct = count_1k1(3, 3, 3, 3, &warm);
  Int again = count_1k1(3, 3, 3, 3, &warm);
  CHECK(direct == again);
  CountCache cold;
  CHECK(count_1k1(3, 3, 3, 3, &cold) == direct);
  for (const auto& cell : cells)
    if (cell.k == 3 && cell.n == 3) CHECK(*cell.value == direct);
}

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hosoya/geometry.hpp"

using namespace hosoya;

namespace {

std::vector<long long> values_of(const PointSet& s) {
  std::vector<long long> out;
  for (const auto& p : s.points) out.push_back(p.value.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("vertical runs") {
  FibTable tab;
  CHECK(values_of(vertical_run(GridPoint(2, 1), 3, tab)) == std::vector<long long>{1, 1, 4});
  CHECK(values_of(vertical_run(GridPoint(3, 0), 1, tab)) == std::vector<long long>{0});
  CHECK(values_of(vertical_run(GridPoint(4, 1), 2, tab)) == std::vector<long long>{2, 3});

  // all points share one rendered x-coordinate: 2k - r is constant
  const auto run = layout::vertical_run(GridPoint(9, 4), 12);
  for (const auto& p : run) CHECK(2 * p.pos - p.row == -1);
}

TEST_CASE("point-set values always match the closed form") {
  FibTable tab;
  for (const PointSet& s :
       {vertical_run(GridPoint(5, 2), 6, tab), horizontal_rung(GridPoint(9, 1), 7, tab),
        zigzag_6k5(GridPoint(8, 3), 2, tab), hockey_stick(4, 5, Side::Right, tab),
        rhombus(7, 3, tab), braid_terms(10, 4, 3, tab)}) {
    for (const auto& p : s.points) CHECK(p.value == entry(p.at, tab));
  }
}

TEST_CASE("oblique ladder rungs and lengths") {
  FibTable tab;
  const auto ladder = oblique_ladder(2, 3, tab);
  REQUIRE(ladder.size() == 3);
  CHECK(values_of(PointSet{ladder[0].points}) == std::vector<long long>{2, 1});
  CHECK(values_of(PointSet{ladder[1].points}) == std::vector<long long>{2, 2});
  CHECK(values_of(PointSet{ladder[2].points}) == std::vector<long long>{4, 3});
  CHECK(ladder[0].length == -1);
  CHECK(ladder[0].absolute_length == 1);
  CHECK(ladder[2].sum() == 7);

  const auto first = oblique_ladder(1, 1, tab);
  CHECK(values_of(PointSet{first[0].points}) == std::vector<long long>{1, 1});

  CHECK_THROWS_AS(oblique_ladder(0, 3, tab), ParamDomainError);
  CHECK_THROWS_AS(oblique_ladder(2, 0, tab), ParamDomainError);
}

TEST_CASE("ladder rung sums obey the second-order recurrence") {
  FibTable tab;
  for (long long d : {1, 2, 3, 6}) {
    const auto ladder = oblique_ladder(d, 20, tab);
    for (std::size_t t = 0; t + 2 < ladder.size(); ++t) {
      CHECK(ladder[t + 2].sum() == ladder[t + 1].sum() + ladder[t].sum());
    }
  }
}

TEST_CASE("ladder sequences") {
  FibTable tab;
  auto seq = [&](long long d, long long n) {
    std::vector<long long> out;
    for (const auto& v : ladder_sequence(d, n, tab)) out.push_back(v.convert_to<long long>());
    return out;
  };
  CHECK(seq(2, 6) == std::vector<long long>{2, 1, 3, 4, 7, 11});
  CHECK(seq(1, 5) == std::vector<long long>{1, 1, 2, 3, 5});
  CHECK(seq(6, 5) == std::vector<long long>{13, 8, 21, 29, 50});
  CHECK(seq(3, 8) == std::vector<long long>{3, 2, 5, 7, 12, 19, 31, 50});
  CHECK_THROWS_AS(ladder_sequence(2, 1, tab), ParamDomainError);
}

TEST_CASE("long zigzag walks") {
  FibTable tab;
  CHECK(values_of(long_zigzag(GridPoint(3, 1), 3, RunDirection::Slash, tab)) ==
        std::vector<long long>{1, 2, 3});
  CHECK(values_of(long_zigzag(GridPoint(3, 1), 5, RunDirection::Slash, tab)) ==
        std::vector<long long>{1, 2, 3, 3, 6});
  CHECK_THROWS_AS(long_zigzag(GridPoint(3, 1), 2, RunDirection::Slash, tab),
                  ParamDomainError);

  const auto s = long_zigzag(GridPoint(5, 2), 7, RunDirection::Backslash, tab);
  CHECK(s.points.front().role == "p1");
  CHECK(s.points.back().role == "p7");
}

TEST_CASE("every long-zigzag triple satisfies the defining recursion") {
  FibTable tab;
  for (long long r = 0; r <= 25; ++r) {
    for (long long c = 0; c <= r; ++c) {
      for (long long n : {3, 5, 7, 9, 11}) {
        for (auto dir : {RunDirection::Slash, RunDirection::Backslash}) {
          const auto pts = layout::long_zigzag(GridPoint(r, c), n, dir);
          for (std::size_t t = 0; t + 2 < pts.size(); t += 2) {
            REQUIRE(entry(pts[t + 2], tab) ==
                    entry(pts[t + 1], tab) + entry(pts[t], tab));
          }
        }
      }
    }
  }
}

TEST_CASE("zigzag 6k+5 head and columns") {
  FibTable tab;
  const auto z = zigzag_6k5(GridPoint(4, 2), 1, tab);
  REQUIRE(z.points.size() == 11);  // 6k+5
  CHECK(values_of(z).front() == 0);
  // p1 + p2 = p3 + p4 = p5
  const auto v = values_of(z);
  CHECK(v[0] + v[1] == v[4]);
  CHECK(v[2] + v[3] == v[4]);

  const auto zz = layout::zigzag_6k5(GridPoint(6, 3), 1);
  BigInt left = 0, right = 0;
  for (const auto& p : zz.left) left += entry(p, tab);
  for (const auto& p : zz.right) right += entry(p, tab);
  CHECK(left == right);
  CHECK(left == 21);

  CHECK_THROWS_AS(zigzag_6k5(GridPoint(3, 1), 1, tab), OutOfTriangleError);
  CHECK_THROWS_AS(zigzag_6k5(GridPoint(6, 3), 0, tab), ParamDomainError);
}

TEST_CASE("zigzag head property holds at every in-triangle apex") {
  FibTable tab;
  for (long long r = 4; r <= 40; ++r) {
    for (long long c = 2; c + 2 <= r; ++c) {
      const auto z = layout::zigzag_6k5(GridPoint(r, c), 1);
      const BigInt apex = entry(z.head[4], tab);
      REQUIRE(entry(z.head[0], tab) + entry(z.head[1], tab) == apex);
      REQUIRE(entry(z.head[2], tab) + entry(z.head[3], tab) == apex);
    }
  }
}

TEST_CASE("hockey sticks") {
  FibTable tab;
  const auto left2 = hockey_stick(3, 2, Side::Left, tab);
  CHECK(values_of(left2) == std::vector<long long>{1, 2, 3});
  CHECK(left2.points.back().role == "blade_L");
  CHECK(left2.points.back().at == GridPoint(6, 2));

  const auto left3 = hockey_stick(3, 3, Side::Left, tab);
  CHECK(values_of(left3) == std::vector<long long>{1, 2, 6, 9});
  CHECK(left3.points.back().role == "blade_R");
  CHECK(left3.points.back().at == GridPoint(8, 4));

  const auto center = hockey_stick(2, 3, Side::Left, tab);
  CHECK(values_of(center) == std::vector<long long>{1, 1, 4, 6});
  CHECK(entry(7, 3, tab) == entry(7, 4, tab));  // both blade candidates agree

  const auto right2 = hockey_stick(3, 2, Side::Right, tab);
  CHECK(values_of(right2) == std::vector<long long>{1, 2, 3});
  CHECK(right2.points.back().role == "blade_R");
  CHECK(right2.points.back().at == GridPoint(6, 4));

  CHECK_THROWS_AS(hockey_stick(1, 2, Side::Left, tab), ParamDomainError);
  CHECK_THROWS_AS(hockey_stick(3, 0, Side::Left, tab), ParamDomainError);
}

TEST_CASE("rhombus windows") {
  FibTable tab;
  CHECK(values_of(rhombus(4, 1, tab)) == std::vector<long long>{2, 1, 3, 2});
  CHECK(values_of(rhombus(2, 0, tab)) == std::vector<long long>{0, 1, 0, 1});
  CHECK(values_of(rhombus(5, 2, tab)) == std::vector<long long>{2, 2, 3, 4});
  CHECK_THROWS_AS(rhombus(4, 4, tab), ParamDomainError);
}

TEST_CASE("triangle configurations") {
  FibTable tab;
  CHECK(values_of(triangle_config(5, 2, Side::Left, tab)) == std::vector<long long>{5, 2, 6});
  CHECK(values_of(triangle_config(4, 2, Side::Left, tab)) == std::vector<long long>{3, 1, 4});
  CHECK(values_of(triangle_config(5, 3, Side::Left, tab)) == std::vector<long long>{3, 2, 6});
  // mirror has identical values by row symmetry
  CHECK(values_of(triangle_config(5, 2, Side::Right, tab)) ==
        values_of(triangle_config(5, 2, Side::Left, tab)));
  CHECK_THROWS_AS(triangle_config(5, 0, Side::Left, tab), ParamDomainError);
  CHECK_THROWS_AS(triangle_config(5, 6, Side::Left, tab), ParamDomainError);
}

TEST_CASE("braid term sets") {
  FibTable tab;
  const auto s = braid_terms(6, 3, 2, tab);
  REQUIRE(s.points.size() == 10);  // 2(l+1) + 2l
  CHECK(s.points[0].at == GridPoint(6, 3));
  CHECK(s.points[0].role == "left[0]+");
  CHECK(s.points[4].role == "left[2]+");
  CHECK_THROWS_AS(braid_terms(6, 3, 4, tab), ParamDomainError);
  CHECK_THROWS_AS(braid_terms(3, 5, 0, tab), ParamDomainError);
}

TEST_CASE("config specs parse and materialize") {
  FibTable tab;
  const auto run = materialize(parse_config_spec("VERTICAL_RUN@2,1:count=3"), tab);
  CHECK(values_of(run) == std::vector<long long>{1, 1, 4});

  const auto stick = materialize(parse_config_spec("HOCKEY_STICK:k=3,n=2,side=left"), tab);
  CHECK(values_of(stick) == std::vector<long long>{1, 2, 3});

  const auto ladder = materialize(parse_config_spec("OBLIQUE_LADDER:d=2,rungs=2"), tab);
  CHECK(values_of(ladder) == std::vector<long long>{2, 1, 2, 2});

  const auto diag = materialize(parse_config_spec("DIAGONAL:d=3,len=6"), tab);
  CHECK(values_of(diag) == std::vector<long long>{0, 2, 2, 4, 6, 10});

  const auto zig = parse_config_spec("LONG_ZIGZAG@3,1:points=5,first=slash");
  CHECK(values_of(materialize(zig, tab)) == std::vector<long long>{1, 2, 3, 3, 6});

  CHECK_THROWS_AS(parse_config_spec("NOT_A_KIND:x=1"), ParamDomainError);
  CHECK_THROWS_AS(parse_config_spec("VERTICAL_RUN@2:count=3"), ParamDomainError);
  CHECK_THROWS_AS(parse_config_spec("VERTICAL_RUN@2,1:count=x"), ParamDomainError);
  CHECK_THROWS_AS(materialize(parse_config_spec("VERTICAL_RUN@2,1"), tab), ParamDomainError);

  const auto round = parse_config_spec(config_spec_to_string(zig));
  CHECK(round.kind == ConfigKind::LongZigzag);
  CHECK(round.anchor->row == 3);
  CHECK(round.parameters.at("points") == 5);
}

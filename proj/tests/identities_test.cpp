#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "hosoya/identities.hpp"

using namespace hosoya;

namespace {

std::vector<long long> members_of(const IdentityReport& rep) {
  std::vector<long long> out;
  for (const auto& m : rep.members) out.push_back(m.convert_to<long long>());
  return out;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("catalog covers every id exactly once") {
  CHECK(catalog().size() == 23);
  for (const auto& row : catalog()) {
    CHECK(find_identity(row.name) == row.id);
    CHECK(&info(row.id) == &row);
  }
  CHECK(!find_identity("NOT_AN_IDENTITY"));
}

TEST_CASE("classic identities verify") {
  FibTable tab;
  auto cassini = verify(IdentityId::Cassini, {{"k", 3}}, tab);
  CHECK(members_of(cassini) == std::vector<long long>{1, 1});
  CHECK(cassini.holds);

  auto catalan_deg = verify(IdentityId::Catalan, {{"k", 5}, {"j", 5}}, tab);
  CHECK(catalan_deg.holds);  // k = j degenerates to H(2j,j) = H(2j,j)

  auto catalan = verify(IdentityId::Catalan, {{"k", 5}, {"j", 2}}, tab);
  CHECK(members_of(catalan) == std::vector<long long>{-1, -1});

  auto docagne = verify(IdentityId::Docagne, {{"k", 5}, {"j", 2}}, tab);
  CHECK(members_of(docagne) == std::vector<long long>{2, 2});

  auto johnson =
      verify(IdentityId::Johnson, {{"k", 5}, {"j", 3}, {"r", 6}, {"i", 2}, {"l", 1}}, tab);
  CHECK(members_of(johnson) == std::vector<long long>{2, 2, 2});

  auto rung = verify(IdentityId::RungSum, {{"k", 5}, {"j", 2}}, tab);
  CHECK(members_of(rung) == std::vector<long long>{8, 8});
}

TEST_CASE("rectangle shift: corrected exponent, recorded divergence") {
  FibTable tab;
  auto rep = verify(IdentityId::RectangleShift,
                    {{"k", 6}, {"j", 1}, {"i", 1}, {"r", 1}}, tab);
  CHECK(members_of(rep) == std::vector<long long>{2, 2});
  CHECK(rep.holds);
  CHECK(contains(rep.note, "paper-stated form fails here: 2 | -2"));

  auto paper = verify(IdentityId::RectangleShift,
                      {{"k", 6}, {"j", 1}, {"i", 1}, {"r", 1}}, tab, Form::PaperStated);
  CHECK(members_of(paper) == std::vector<long long>{2, -2});
  CHECK(!paper.holds);

  // at r = 0 the stated exponent forces D = -D
  auto paper0 = verify(IdentityId::RectangleShift,
                       {{"k", 6}, {"j", 1}, {"i", 1}, {"r", 0}}, tab, Form::PaperStated);
  CHECK(!paper0.holds);
}

TEST_CASE("rectangle closed form") {
  FibTable tab;
  auto rep = verify(IdentityId::RectangleClosed, {{"k", 6}, {"j", 1}, {"i", 1}}, tab);
  CHECK(members_of(rep) == std::vector<long long>{2, 2});
  CHECK(rep.holds);

  auto paper = verify(IdentityId::RectangleClosed, {{"k", 6}, {"j", 1}, {"i", 1}}, tab,
                      Form::PaperStated);
  CHECK(members_of(paper) == std::vector<long long>{2, -2});
  CHECK(!paper.holds);

  // j = 0: difference of an edge pair, exponent -1 on both forms
  auto edge = verify(IdentityId::RectangleClosed, {{"k", 6}, {"j", 0}, {"i", 2}}, tab);
  CHECK(members_of(edge) == std::vector<long long>{-3, -3});
}

TEST_CASE("odd run length: parity of the hypothesis is the correction") {
  FibTable tab;
  auto rep = verify(IdentityId::OddRunLength, {{"k", 4}, {"j", 0}, {"n", 1}, {"i", 2}}, tab);
  CHECK(members_of(rep) == std::vector<long long>{8, 8, 8});
  CHECK(rep.holds);

  auto paper = verify(IdentityId::OddRunLength, {{"k", 4}, {"j", 0}, {"n", 1}, {"i", 1}},
                      tab, Form::PaperStated);
  CHECK(members_of(paper) == std::vector<long long>{5, 1, 5});
  CHECK(!paper.holds);

  CHECK_THROWS_AS(
      verify(IdentityId::OddRunLength, {{"k", 4}, {"j", 0}, {"n", 1}, {"i", 1}}, tab),
      ParamDomainError);
  CHECK_THROWS_AS(verify(IdentityId::OddRunLength, {{"k", 4}, {"j", 0}, {"n", 1}, {"i", 2}},
                         tab, Form::PaperStated),
                  ParamDomainError);
}

TEST_CASE("zigzag parallel: corrected hypothesis is odd j") {
  FibTable tab;
  auto odd = verify(IdentityId::ZigzagParallel, {{"a", 2}, {"b", 3}, {"j", 1}}, tab);
  CHECK(members_of(odd) == std::vector<long long>{-2, -2});
  CHECK(odd.holds);

  auto paper = verify(IdentityId::ZigzagParallel, {{"a", 2}, {"b", 3}, {"j", 2}}, tab,
                      Form::PaperStated);
  CHECK(members_of(paper) == std::vector<long long>{-4, -6});
  CHECK(!paper.holds);

  CHECK_THROWS_AS(verify(IdentityId::ZigzagParallel, {{"a", 2}, {"b", 3}, {"j", 2}}, tab),
                  ParamDomainError);
}

TEST_CASE("long zigzag alternating sum") {
  FibTable tab;
  auto rep = verify(IdentityId::LongZigzagAlt,
                    {{"r", 3}, {"c", 1}, {"n", 5}, {"first_run", 0}}, tab);
  CHECK(members_of(rep) == std::vector<long long>{5, 5});
  CHECK(rep.holds);
  CHECK_THROWS_AS(verify(IdentityId::LongZigzagAlt,
                         {{"r", 3}, {"c", 1}, {"n", 4}, {"first_run", 0}}, tab),
                  ParamDomainError);
}

TEST_CASE("long zigzag alternating sum holds for every zigzag within rows <= 200") {
  FibTable tab;
  long long checked = 0, bad = 0;
  Params p{{"r", 0}, {"c", 0}, {"n", 0}, {"first_run", 0}};
  for (long long n = 3; n <= 41; n += 2) {
    p["n"] = n;
    for (long long r = 0; r + n - 1 <= 200; ++r) {
      p["r"] = r;
      for (long long c = 0; c <= r; ++c) {
        p["c"] = c;
        for (long long f : {0, 1}) {
          p["first_run"] = f;
          const auto m = eval_members(IdentityId::LongZigzagAlt, p, tab);
          ++checked;
          if (m[0] != m[1]) ++bad;
        }
      }
    }
  }
  CHECK(bad == 0);
  CHECK(checked > 500000);
}

TEST_CASE("zigzag column sums and the re-derived closed form") {
  FibTable tab;
  auto rep = verify(IdentityId::ZigzagColumnSum,
                    {{"a", 1}, {"b", 2}, {"c", 2}, {"d", 1}, {"k", 1}}, tab);
  CHECK(members_of(rep) == std::vector<long long>{3, 3, 3});
  CHECK(rep.holds);

  auto paper = verify(IdentityId::ZigzagColumnSum,
                      {{"a", 1}, {"b", 2}, {"c", 2}, {"d", 1}, {"k", 1}}, tab,
                      Form::PaperStated);
  CHECK(members_of(paper) == std::vector<long long>{3, 3, 0});
  CHECK(!paper.holds);

  CHECK_THROWS_AS(verify(IdentityId::ZigzagColumnSum,
                         {{"a", 1}, {"b", 2}, {"c", 2}, {"d", 2}, {"k", 1}}, tab),
                  ParamDomainError);
}

TEST_CASE("zigzag balance") {
  FibTable tab;
  auto rep = verify(IdentityId::ZigzagBalance, {{"r", 6}, {"c", 3}, {"k", 1}}, tab);
  CHECK(members_of(rep) == std::vector<long long>{63, 63});
  CHECK(rep.holds);
  CHECK_THROWS_AS(verify(IdentityId::ZigzagBalance, {{"r", 6}, {"c", 5}, {"k", 1}}, tab),
                  ParamDomainError);
}

TEST_CASE("hockey stick cases") {
  FibTable tab;
  auto even_left = verify(IdentityId::HockeyStick, {{"k", 3}, {"n", 2}, {"side", 0}}, tab);
  CHECK(members_of(even_left) == std::vector<long long>{3, 3});
  CHECK(even_left.holds);

  auto odd_left = verify(IdentityId::HockeyStick, {{"k", 3}, {"n", 3}, {"side", 0}}, tab);
  CHECK(members_of(odd_left) == std::vector<long long>{9, 9});

  // center: both blade candidates appear in the chain
  auto center = verify(IdentityId::HockeyStick, {{"k", 2}, {"n", 3}, {"side", 0}}, tab);
  CHECK(members_of(center) == std::vector<long long>{6, 6, 6});

  auto right = verify(IdentityId::HockeyStick, {{"k", 3}, {"n", 2}, {"side", 1}}, tab);
  CHECK(right.holds);
}

TEST_CASE("braid identities") {
  FibTable tab;
  auto signed_braid = verify(IdentityId::BraidSigned, {{"n", 6}, {"m", 3}, {"l", 2}}, tab);
  CHECK(members_of(signed_braid) == std::vector<long long>{12, 12});
  CHECK(signed_braid.holds);

  auto norm = verify(IdentityId::BraidNormalized, {{"m", 4}, {"r", 5}, {"l", 2}}, tab);
  CHECK(members_of(norm) == std::vector<long long>{30, 30});
  CHECK(norm.holds);

  auto closed_odd = verify(IdentityId::BraidClosed, {{"m", 2}, {"l", 1}}, tab);
  CHECK(members_of(closed_odd) == std::vector<long long>{-1, -1});
  CHECK(closed_odd.holds);
  auto paper_odd = verify(IdentityId::BraidClosed, {{"m", 2}, {"l", 1}}, tab,
                          Form::PaperStated);
  CHECK(members_of(paper_odd) == std::vector<long long>{-1, 3});
  CHECK(!paper_odd.holds);

  auto closed_even = verify(IdentityId::BraidClosed, {{"m", 3}, {"l", 2}}, tab);
  CHECK(members_of(closed_even) == std::vector<long long>{4, 4});
  auto paper_even = verify(IdentityId::BraidClosed, {{"m", 3}, {"l", 2}}, tab,
                           Form::PaperStated);
  CHECK(members_of(paper_even) == std::vector<long long>{4, 0});
  CHECK(!paper_even.holds);
}

TEST_CASE("rhombus determinant and triangle configuration") {
  FibTable tab;
  auto det = verify(IdentityId::RhombusDet, {{"n", 4}, {"r", 1}}, tab);
  CHECK(members_of(det) == std::vector<long long>{1, 1});
  CHECK(det.holds);

  auto tc = verify(IdentityId::TriangleConfig, {{"n", 5}, {"r", 2}}, tab);
  CHECK(members_of(tc) == std::vector<long long>{1, 1});

  auto tc_zero = verify(IdentityId::TriangleConfig, {{"n", 4}, {"r", 2}}, tab);
  CHECK(members_of(tc_zero) == std::vector<long long>{0, 0});
  CHECK(tc_zero.holds);
  CHECK(contains(tc_zero.note, "paper-stated form fails here: 0 | 1"));

  auto tc_paper = verify(IdentityId::TriangleConfig, {{"n", 4}, {"r", 2}}, tab,
                         Form::PaperStated);
  CHECK(members_of(tc_paper) == std::vector<long long>{0, 1});
  CHECK(!tc_paper.holds);

  // negafibonacci branch: n < 2r
  auto tc_neg = verify(IdentityId::TriangleConfig, {{"n", 5}, {"r", 3}}, tab);
  CHECK(members_of(tc_neg) == std::vector<long long>{-1, -1});
  CHECK(tc_neg.holds);
  auto tc_neg2 = verify(IdentityId::TriangleConfig, {{"n", 3}, {"r", 3}}, tab);
  CHECK(members_of(tc_neg2) == std::vector<long long>{-2, -2});
  CHECK(tc_neg2.holds);
}

TEST_CASE("generalized ladder recurrence term by term") {
  FibTable tab;
  auto rep = verify(IdentityId::GenFibLadder, {{"d", 2}, {"t", 1}}, tab);
  CHECK(members_of(rep) == std::vector<long long>{3, 3});
  auto rep6 = verify(IdentityId::GenFibLadder, {{"d", 6}, {"t", 3}}, tab);
  CHECK(members_of(rep6) == std::vector<long long>{50, 50});
}

TEST_CASE("domain violations name the constraint") {
  FibTable tab;
  CHECK_THROWS_WITH(verify(IdentityId::Cassini, {{"k", 0}}, tab),
                    Catch::Matchers::ContainsSubstring("requires k >= 1"));
  CHECK_THROWS_WITH(
      verify(IdentityId::Johnson, {{"k", 5}, {"j", 3}, {"r", 7}, {"i", 2}, {"l", 1}}, tab),
      Catch::Matchers::ContainsSubstring("k + j = r + i"));
  CHECK_THROWS_WITH(verify(IdentityId::Cassini, {}, tab),
                    Catch::Matchers::ContainsSubstring("missing parameter 'k'"));
  CHECK_THROWS_WITH(
      verify(IdentityId::BraidSigned, {{"n", 6}, {"m", 3}, {"l", 4}}, tab),
      Catch::Matchers::ContainsSubstring("min(m, n-m)"));
}

TEST_CASE("verify is deterministic") {
  FibTable tab;
  const Params p{{"k", 6}, {"j", 1}, {"i", 1}, {"r", 1}};
  auto a = verify(IdentityId::RectangleShift, p, tab);
  auto b = verify(IdentityId::RectangleShift, p, tab);
  CHECK(a.members == b.members);
  CHECK(a.holds == b.holds);
  CHECK(a.note == b.note);
  CHECK(a.params == b.params);
}

TEST_CASE("sweeps") {
  FibTable tab;
  auto cassini = sweep(IdentityId::Cassini, {{"k", {1, 200}}}, tab);
  CHECK(cassini.instances == 200);
  CHECK(cassini.failure_count == 0);
  CHECK(cassini.failures.empty());
  CHECK(cassini.grid == "k=1..200");

  auto rung = sweep(IdentityId::RungSum, {{"k", {1, 30}}, {"j", {0, 29}}}, tab);
  CHECK(rung.failure_count == 0);
  // domain admits j <= k: sum_{k=1..29}(k+1) plus 30 points for k=30
  CHECK(rung.instances == 494);

  auto tc_paper = sweep(IdentityId::TriangleConfig, {{"n", {2, 30}}, {"r", {1, 30}}}, tab,
                        Form::PaperStated);
  CHECK(tc_paper.failure_count > 0);
  bool witness = false;
  for (const auto& f : tc_paper.failures) {
    if (f.at("n") == 4 && f.at("r") == 2) witness = true;
  }
  CHECK(witness);

  auto empty = sweep(IdentityId::Cassini, {{"k", {5, 4}}}, tab);
  CHECK(empty.instances == 0);
  CHECK(empty.failure_count == 0);

  CHECK_THROWS_AS(sweep(IdentityId::Cassini, {{"q", {1, 2}}}, tab), ParamDomainError);
  CHECK_THROWS_AS(sweep(IdentityId::Cassini, {}, tab), ParamDomainError);
}

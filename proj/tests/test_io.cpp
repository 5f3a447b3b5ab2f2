#include <doctest.h>

#include <random>

#include "dix/fixtures.hpp"
#include "dix/io.hpp"
#include "dix/su_n1.hpp"
#include "support.hpp"

using namespace dix;
using namespace dix::io;

TEST_CASE("polynomial json") {
  const MultiPoly p = MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1);
  CHECK(emit(p, Format::Json) ==
        R"({"vars":2,"terms":[{"exp":[1,0],"coeff":"1"},{"exp":[0,1],"coeff":"-1"}]})");
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const MultiPoly q = testing::random_poly(rng, 3, 4);
    CHECK(poly_from_json(Json::parse(emit(q, Format::Json))) == q);
  }
  CHECK(poly_from_json(Json::parse(R"({"vars":1,"terms":[{"exp":[2],"coeff":"1/2"},{"exp":[2],"coeff":"1/2"}]})")) ==
        pow(MultiPoly::variable(1, 0), 2));
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":2,"terms":[{"exp":[1],"coeff":"1"}]})")), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":1,"terms":[{"exp":[1],"coeff":"x"}]})")), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":[]})")), Error);
}

TEST_CASE("polynomial latex") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK(latex(x * x - Rational(2) * x * y) == "X_{1}^{2} - 2 X_{1} X_{2}");
  CHECK(latex(make_rational(1, 2) * y + MultiPoly::constant(2, -3)) == "\\frac{1}{2} X_{2} - 3");
  CHECK(latex(MultiPoly(2)) == "0");
  CHECK_THROWS_AS(emit(x, Format::Csv), Error);
}

TEST_CASE("virtual modules and families round trip") {
  for (const auto& fx : fixtures::fixture_families(3)) {
    const auto d = build_root_datum(parse_group(fx.group));
    CHECK(family_from_json(Json::parse(emit(fx.family, Format::Json))) == fx.family);
    const auto v = evaluate_index(fx.family, fx.family.base, d);
    CHECK(virtual_from_json(Json::parse(emit(v, Format::Json))) == v);
  }
  CHECK_THROWS_AS(emit(IndexFamily{}, Format::Latex), Error);
}

TEST_CASE("limit reports round trip") {
  auto sl = fixtures::sl2_datum();
  auto fam = fixtures::sl2_family(fixtures::SL2Module::DPlus);
  for (int d = 0; d <= 2; ++d) {
    const auto r = leading_limit(fam, fixtures::sl2_weight(3), Weight{1, -1}, d, sl);
    const auto back = limit_from_json(Json::parse(emit(r, Format::Json)));
    CHECK(back.d == r.d);
    CHECK(back.status == r.status);
    CHECK(back.value == r.value);
    CHECK(back.expected == r.expected);
    CHECK(back.match == r.match);
  }
}

TEST_CASE("springer rows") {
  const auto row = springer::springer_row(GroupId::so_even_odd(2, 2));
  const std::string line = emit(row, Format::Csv);
  CHECK(line == R"x("SOe(4,5)",(X1^2-X2^2)(X3^2-X4^2)X3X4,Yes,"[3,2,2,1,1]",20)x");
  const auto fields = parse_csv_line(line);
  REQUIRE(fields.size() == 5);
  CHECK(fields[2] == "Yes");
  CHECK(fields[3] == "[3,2,2,1,1]");
  CHECK(fields[4] == "20");
  CHECK(emit(row, Format::Latex) ==
        "$SO_{e}(4,5)$ & $(X_{1}^{2}-X_{2}^{2})(X_{3}^{2}-X_{4}^{2})X_{3}X_{4}$ & Yes & "
        "$[3,2^{2},1^{2}]$ & $20$ \\\\");

  for (const auto& r : springer::springer_table(3, springer::all_families())) {
    const auto back = springer_row_from_json(Json::parse(emit(r, Format::Json)));
    CHECK(emit(back, Format::Json) == emit(r, Format::Json));
    CHECK(back.generator == r.generator);
    CHECK(back.partition == r.partition);
  }
  const auto no = springer::springer_row(GroupId::sp_pq(1, 2));
  CHECK(parse_csv_line(emit(no, Format::Csv))[2] == "No");

  const auto table = springer::springer_table(2, {Family::SU});
  const std::string csv = emit(table, Format::Csv);
  CHECK(csv.rfind("group,generator,springer,partition,dim\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(table.size()));
  CHECK(emit(table, Format::Latex).find("\\end{tabular}") != std::string::npos);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  for (const std::string s : {"x", "a,b", "q\"q", ""}) {
    CHECK(parse_csv_line(csv_field(s) + "," + csv_field(s)) == std::vector<std::string>{s, s});
  }
  CHECK_THROWS_AS(parse_csv_line("\"open"), Error);
}

TEST_CASE("suite reports") {
  SuiteReport r;
  r.suite = "demo";
  r.add("a", true, "fine, really");
  r.add("b", false, "");
  CHECK_FALSE(r.all_pass);
  CHECK(suite_report_from_json(Json::parse(emit(r, Format::Json))) == r);
  const auto csv = emit(r, Format::Csv);
  CHECK(csv == "suite,id,pass,detail\ndemo,a,true,\"fine, really\"\ndemo,b,false,\n");
  CHECK_THROWS_AS(emit(r, Format::Latex), Error);
  auto bad = to_json(r);
  bad["all_pass"] = true;
  CHECK_THROWS_AS(suite_report_from_json(bad), Error);
}

TEST_CASE("formats and groups") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK(latex_group(GroupId::sp_real(2)) == "Sp(4,\\mathbb{R})");
  CHECK(latex_group(GroupId::so_star(3)) == "SO^{*}(6)");
}

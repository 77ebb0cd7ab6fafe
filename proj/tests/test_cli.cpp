#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssf/cli.hpp"
#include "ssf/io.hpp"

using namespace ssf;
using cli::json;

namespace {

json parse(const char* text) { return json::parse(text); }

}  // namespace

TEST_CASE("axet over F_7 at mu = 1") {
  const auto out = cli::execute("axet", parse(R"({"field": {"kind": "prime", "p": 7}, "mu": 1})"));
  CHECK(out.exit_code == cli::kOk);
  CHECK(out.report.at("size") == 7);
  CHECK(out.report.at("split") == "single");
  CHECK(out.report.at("index") == 1);
}

TEST_CASE("simple on the identity gram at alpha = -1") {
  const auto out = cli::execute(
      "simple", parse(R"({"field": {"kind": "rational"}, "alpha": "-1", "gram": [["1", "0"], ["0", "1"]]})"));
  CHECK(out.exit_code == cli::kOk);
  CHECK(out.report.at("simple") == false);
  CHECK(out.report.at("reason") == "BaricMinusOne");
}

TEST_CASE("idempotents over F_5, dim E = 1, alpha = 2") {
  const auto out = cli::execute("idempotents", parse(R"({"field": {"kind": "prime", "p": 5}, "alpha": 2, "gram": [[1]]})"));
  CHECK(out.exit_code == cli::kOk);
  CHECK(out.report.at("method") == "bruteforce");
  CHECK(out.report.at("count") == 7);
  CHECK(out.report.at("other") == 0);
  CHECK(out.report.at("expected_count") == 7);
}

TEST_CASE("config errors exit with 2") {
  CHECK(cli::execute("build", parse(R"({"field": {"kind": "rational"}, "colour": 1})")).exit_code == cli::kConfigError);
  CHECK(cli::execute("build", parse(R"({"field": {"kind": "prime", "p": 9}})")).exit_code == cli::kConfigError);
  CHECK(cli::execute("frobnicate", json::object()).exit_code == cli::kConfigError);
  CHECK(cli::execute("build", parse(R"({"field": {"kind": "rational"}, "gram": [["1"]]})")).exit_code ==
        cli::kConfigError);  // no alpha
  const auto mu_one = cli::execute(
      "yabe", parse(R"({"field": {"kind": "rational"}, "alpha": "3", "gram": {"two_gen_mu": "1"}})"));
  CHECK(mu_one.exit_code == cli::kConfigError);
  CHECK(mu_one.report.at("error").at("code") == "MuOne");
  const auto excluded = cli::execute(
      "axis-check", parse(R"({"field": {"kind": "rational"}, "alpha": "1/2", "gram": [["1"]]})"));
  CHECK(excluded.exit_code == cli::kConfigError);
}

TEST_CASE("sweeps keep input order for any worker count") {
  const char* base = R"({"field": {"kind": "prime", "p": 13}, "mu_list": [12, 0, 5, 1, 7, 3, 2, 11]})";
  json one = parse(base);
  one["workers"] = 1;
  json many = parse(base);
  many["workers"] = 4;
  const auto a = cli::execute("axet", one);
  const auto b = cli::execute("axet", many);
  CHECK(a.exit_code == cli::kOk);
  CHECK(a.report == b.report);
  std::vector<std::uint64_t> mus;
  for (const auto& e : a.report.at("entries")) mus.push_back(e.at("mu").get<std::uint64_t>());
  CHECK(mus == std::vector<std::uint64_t>{12, 0, 5, 1, 7, 3, 2, 11});
}

TEST_CASE("rational mu range") {
  const auto out =
      cli::execute("axet", parse(R"({"field": {"kind": "rational"}, "mu_range": {"from": "-1", "to": "1", "step": "1/2"}})"));
  REQUIRE(out.report.contains("entries"));
  std::vector<std::string> sizes;
  for (const auto& e : out.report.at("entries")) sizes.push_back(e.at("size").dump());
  CHECK(sizes == std::vector<std::string>{"\"infinite\"", "3", "4", "6", "\"infinite\""});
}

TEST_CASE("reports are deterministic") {
  const json cfg = parse(R"({"field": {"kind": "prime", "p": 11}, "alpha": 3, "gram": [[1, 2], [2, 5]], "seed": 7})");
  for (const char* cmd : {"build", "axis-check", "frobenius", "radical", "cover"})
    CHECK(cli::execute(cmd, cfg).report.dump() == cli::execute(cmd, cfg).report.dump());
}

TEST_CASE("algebra JSON round trip") {
  const Field<Rational> q;
  Matrix<Rational> g(2, 2);
  g << q(2), q(1, 3), q(1, 3), q(-1);
  const QuadraticSpace<Rational> space(q, g);
  for (const auto& alg : {build_split_spin(space, q(-2, 5)), build_exceptional(space), matsuo_3c(q, q(3))}) {
    const json doc = io::to_json(alg);
    const auto back = io::algebra_from_json(q, json::parse(doc.dump()));
    CHECK(same_structure(alg, back));
    CHECK(io::to_json(back) == doc);
  }
  const Field<ModP> f(7);
  const auto alg = build_split_spin(QuadraticSpace<ModP>(f, identity(f, 3)), f(3));
  CHECK(same_structure(alg, io::algebra_from_json(f, io::to_json(alg))));

  json tampered = io::to_json(alg);
  tampered["structure_constants"][0][3] = 2;
  CHECK_THROWS_AS(io::algebra_from_json(f, tampered), Error);
  CHECK_THROWS_AS(io::algebra_from_json(Field<ModP>(5), io::to_json(alg)), Error);
}

TEST_CASE("text rendering carries the same fields") {
  const auto out = cli::execute("axet", parse(R"({"field": {"kind": "prime", "p": 5}, "mu": 2})"));
  const std::string text = cli::render_text(out.report);
  CHECK(text.find("size: 3") != std::string::npos);
  CHECK(text.find("split: single") != std::string::npos);
}

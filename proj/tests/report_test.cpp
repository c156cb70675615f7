#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "twistcoh/errors.hpp"
#include "twistcoh/report/cli.hpp"
#include "twistcoh/report/closed_form.hpp"
#include "twistcoh/report/oracle.hpp"
#include "twistcoh/report/pipeline.hpp"
#include "twistcoh/report/report_io.hpp"

using namespace twistcoh;

namespace {

TwistSpec spec(char family, int rank, const std::string& automorphism, int truncation = kDefaultTruncation) {
  TwistSpec s;
  s.cartan_type = make_cartan_type(family, rank);
  s.automorphism = parse_automorphism_spec(automorphism);
  s.truncation = truncation;
  return s;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "twistcoh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

FiniteMatrixGroup weyl_group(const CartanType& t) {
  const auto rs = build_root_system(t);
  return generate_group(simple_reflections(rs));
}

}  // namespace

TEST(ClosedForm, Degrees) {
  const ClosedForm f{{2, 6}};
  EXPECT_EQ(f.x_degrees(), (std::vector<int>{3, 11}));
  EXPECT_EQ(f.y_degrees(), (std::vector<int>{4, 12}));
  EXPECT_EQ(f.to_string(), "Lambda(x3, x11) (x) F[y4, y12]");
  EXPECT_EQ(required_truncation({2, 6}), 25);
}

TEST(ClosedForm, RecognizesG2AndRejectsWrongDegrees) {
  const auto g2 = cohomological_series(super_molien(weyl_group({'G', 2}), 50));
  // G2 lives in 3-space; the extra direction contributes a degree-1 factor.
  const auto f = recognize_closed_form(g2, {6, 2, 1});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->degrees, (std::vector<int>{1, 2, 6}));
  const auto a1 = product_form({2}, 20);
  EXPECT_TRUE(recognize_closed_form(a1, {2}).has_value());
  EXPECT_FALSE(recognize_closed_form(a1, {3}).has_value());
}

TEST(ClosedForm, TruncationTooSmallIsAnError) {
  const auto s = product_form({2, 6}, 24);
  EXPECT_THROW(recognize_closed_form(s, {2, 6}), InputError);
  EXPECT_THROW(recognize_closed_form(product_form({2}, 20), {0}), InputError);
}

TEST(ClosedForm, SearchRecoversDegrees) {
  const auto f = search_closed_form(product_form({2, 6, 8, 12}, 50));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->degrees, (std::vector<int>{2, 6, 8, 12}));
  const auto d4 = search_closed_form(product_form({2, 4, 4, 6}, 30));
  ASSERT_TRUE(d4.has_value());
  EXPECT_EQ(d4->degrees, (std::vector<int>{2, 4, 4, 6}));
  GradedSeries not_product(30, {BigInt(1), BigInt(0), BigInt(1)});
  EXPECT_FALSE(search_closed_form(not_product).has_value());
  EXPECT_FALSE(search_closed_form(product_form({2, 12}, 30)).has_value());
}

TEST(Oracle, SmallExamples) {
  const FiniteMatrixGroup trivial(2, {RationalMatrix::identity(2)});
  const auto t = brute_force_invariant_dims(trivial, 6);
  EXPECT_EQ(t.coeff(0, 3), 4);
  EXPECT_EQ(t.coeff(2, 2), 3);
  const FiniteMatrixGroup sign(1, {RationalMatrix::identity(1), RationalMatrix{{-1}}});
  const auto s = brute_force_invariant_dims(sign, 8);
  EXPECT_EQ(s.coeff(1, 1), 1);
  EXPECT_EQ(s.coeff(1, 0), 0);
  EXPECT_EQ(s.coeff(0, 1), 0);
  EXPECT_EQ(s.coeff(0, 2), 1);
}

TEST(Oracle, AgreesWithMolienForRestrictedA2) {
  const auto rs = build_root_system({'A', 2});
  const auto a = make_automorphism(rs, {});
  const auto v = fixed_subspace(a);
  const auto image = restrict_to_subspace(generate_group(simple_reflections(rs)), v);
  const auto dims = brute_force_invariant_dims(image, 12);
  BigradedSeries cut(12);
  const BigradedSeries molien = super_molien(image, 12);
  for (const auto& [k, c] : molien.terms()) cut.set(k.first, k.second, c);
  EXPECT_EQ(dims, cut);
}

TEST(Oracle, GuardIsEnforced) {
  const FiniteMatrixGroup big(5, {RationalMatrix::identity(5)});
  EXPECT_THROW(brute_force_invariant_dims(big, 4), ResourceCapError);
  const FiniteMatrixGroup small(1, {RationalMatrix::identity(1)});
  EXPECT_THROW(brute_force_invariant_dims(small, 13), ResourceCapError);
  EXPECT_THROW(brute_force_invariant_dims(small, -1), ResourceCapError);
}

TEST(Pipeline, UntwistedA1) {
  const auto r = compute(spec('A', 1, "identity", 20));
  EXPECT_EQ(r.series, product_form({2}, 20));
  ASSERT_TRUE(r.closed_form.has_value());
  EXPECT_EQ(r.closed_form->x_degrees(), (std::vector<int>{3}));
  EXPECT_EQ(r.excluded_characteristics, (std::vector<unsigned long>{2}));
  EXPECT_EQ(r.wsigma_order, 2);
}

TEST(Pipeline, ExcludedCharacteristics) {
  EXPECT_EQ(excluded_characteristics(spec('D', 4, "triality")), (std::vector<unsigned long>{2, 3}));
  EXPECT_EQ(excluded_characteristics(spec('E', 6, "flip")), (std::vector<unsigned long>{2, 3, 5}));
  EXPECT_EQ(excluded_characteristics(spec('A', 1, "identity")), (std::vector<unsigned long>{2}));
  for (const auto& t : {"A3", "B4", "G2", "E7", "E8"}) {
    const auto p = excluded_characteristics(spec(t[0], t[1] - '0', "identity"));
    EXPECT_EQ(p.front(), 2u) << t;
  }
  EXPECT_EQ(prime_divisors(BigInt(51840)), (std::vector<unsigned long>{2, 3, 5}));
  EXPECT_EQ(prime_divisors(BigInt(1)), (std::vector<unsigned long>{}));
}

TEST(Pipeline, ReportInvariants) {
  for (const auto& s : {spec('A', 3, "flip"), spec('A', 4, "flip"), spec('D', 4, "triality"), spec('B', 3, "identity")}) {
    const auto r = compute(s);
    EXPECT_EQ(r.series[0], 1);
    for (const auto& c : r.series.coefficients()) EXPECT_GE(c, 0);
    EXPECT_EQ(r.series.truncation(), s.truncation);
    ASSERT_TRUE(r.closed_form.has_value());
    EXPECT_EQ(product_form(r.closed_form->degrees, s.truncation), r.series);
    EXPECT_TRUE(r.wsigma_preserves_folded);
  }
}

TEST(Pipeline, TablePathForE8) {
  const auto r = compute(spec('E', 8, "identity"));
  EXPECT_TRUE(r.table_path);
  EXPECT_EQ(r.wsigma_order, BigInt("696729600"));
  ASSERT_TRUE(r.closed_form.has_value());
  EXPECT_EQ(r.closed_form->degrees, degrees({'E', 8}));
  EXPECT_EQ(r.series, product_form(degrees({'E', 8}), kDefaultTruncation));
}

TEST(Pipeline, Errors) {
  EXPECT_THROW(compute(spec('E', 8, "flip")), InputError);
  EXPECT_THROW(compute(spec('B', 3, "flip")), InputError);
  EXPECT_THROW(compute(spec('A', 2, "identity", -1)), InputError);
  auto capped = spec('D', 4, "triality");
  capped.element_cap = 100;
  EXPECT_THROW(compute(capped), ResourceCapError);
}

TEST(Pipeline, ShortTruncationLeavesClosedFormUnset) {
  const auto r = compute(spec('D', 4, "triality", 20));
  EXPECT_FALSE(r.closed_form.has_value());
  EXPECT_EQ(r.series, product_form({2, 6}, 20));
}

TEST(Pipeline, RepresentativeCheckForEvenTypeAFlip) {
  const auto r = compute(spec('A', 5, "flip", 30));
  ASSERT_TRUE(r.representative_check.has_value());
  EXPECT_TRUE(*r.representative_check);
  EXPECT_FALSE(compute(spec('A', 4, "flip", 30)).representative_check.has_value());
}

TEST(Pipeline, OracleOnlyWithinGuard) {
  auto s = spec('D', 4, "triality", 30);
  s.run_oracle = true;
  const auto r = compute(s);
  ASSERT_TRUE(r.oracle.has_value());
  EXPECT_TRUE(r.oracle->agrees);
  EXPECT_EQ(r.oracle->max_degree, 12);
  auto big = spec('B', 5, "identity", 30);
  big.run_oracle = true;
  EXPECT_FALSE(compute(big).oracle.has_value());
}

TEST(Json, SchemaAndOrder) {
  const auto j = nlohmann::ordered_json::parse(to_json_string(compute(spec('D', 4, "triality"))));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"input", "folded_type", "orbit_criterion", "wsigma", "series", "closed_form",
                                            "excluded_characteristics", "oracle", "notes"}));
  EXPECT_EQ(j["folded_type"], "G2");
  EXPECT_EQ(j["orbit_criterion"]["orbits"], 12);
  EXPECT_EQ(j["orbit_criterion"]["folded_roots"], 12);
  EXPECT_EQ(j["orbit_criterion"]["holds"], true);
  EXPECT_EQ(j["wsigma"]["restricted_order"], 12);
  EXPECT_EQ(j["wsigma"]["preserves_folded"], true);
  EXPECT_EQ(j["series"].size(), 51u);
  EXPECT_EQ(j["closed_form"]["x_degrees"], nlohmann::json({3, 11}));
  EXPECT_EQ(j["closed_form"]["y_degrees"], nlohmann::json({4, 12}));
  EXPECT_EQ(j["excluded_characteristics"], nlohmann::json({2, 3}));
  EXPECT_TRUE(j["oracle"].is_null());
  EXPECT_TRUE(j["notes"].is_array());
}

TEST(Json, LargeCoefficientsBecomeStrings) {
  const auto j = to_json(compute(spec('A', 1, "identity", 4)));
  EXPECT_TRUE(j["series"][0].is_number_integer());
  TwistReport r = compute(spec('A', 1, "identity", 4));
  r.series[2] = BigInt("123456789012345678901234567890");
  EXPECT_EQ(to_json(r)["series"][2], "123456789012345678901234567890");
}

TEST(Json, WorkerCountDoesNotChangeOutput) {
  auto one = spec('E', 6, "flip");
  auto eight = one;
  eight.workers = 8;
  EXPECT_EQ(to_json_string(compute(one)), to_json_string(compute(eight)));
}

TEST(Cli, JsonReport) {
  const auto r = run_cli({"--type", "D", "--rank", "4", "--auto", "triality", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["folded_type"], "G2");
  EXPECT_EQ(j["input"]["automorphism"], "triality");
}

TEST(Cli, TextReport) {
  const auto r = run_cli({"--type", "A", "--rank", "3", "--auto", "flip", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("folded type:              C2"), std::string::npos);
  EXPECT_NE(r.out.find("Lambda(x3, x7) (x) F[y4, y8]"), std::string::npos);
  EXPECT_NE(r.out.find("oracle:                   agrees"), std::string::npos);
}

TEST(Cli, TablePathForE8) {
  const auto r = run_cli({"--type", "E", "--rank", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x3, x15, x23, x27, x35, x39, x47, x59"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"--type", "E", "--rank", "8", "--auto", "flip"}).code, 1);
  EXPECT_EQ(run_cli({"--type", "B", "--rank", "3", "--auto", "triality"}).code, 1);
  EXPECT_EQ(run_cli({"--type", "Q", "--rank", "3"}).code, 1);
  EXPECT_EQ(run_cli({"--type", "A", "--rank", "0"}).code, 1);
  EXPECT_EQ(run_cli({"--rank", "3"}).code, 1);
  EXPECT_EQ(run_cli({"--type", "A", "--rank", "2", "--truncate", "-3"}).code, 1);
  EXPECT_EQ(run_cli({"--type", "A", "--rank", "2", "--format", "xml"}).code, 1);
  EXPECT_EQ(run_cli({"--type", "A", "--rank", "2", "--auto", "perm=2,2"}).code, 1);
  EXPECT_EQ(run_cli({"--type", "A", "--rank", "2", "--bogus"}).code, 1);
  const auto capped = run_cli({"--type", "E", "--rank", "6", "--max-elements", "1000"});
  EXPECT_EQ(capped.code, 2);
  EXPECT_NE(capped.err.find("too large"), std::string::npos);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("--truncate"), std::string::npos);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "twistcoh_cli_out.json";
  std::filesystem::remove(path);
  const auto r = run_cli({"--type", "G", "--rank", "2", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(buf.str())["folded_type"], "G2");
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"--type", "G", "--rank", "2", "--out", "/nonexistent-dir/x.json"}).code, 1);
}

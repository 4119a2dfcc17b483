#include <gtest/gtest.h>

#include <sstream>

#include "galois_arrow/cli.hpp"
#include "galois_arrow/report.hpp"

using namespace galois_arrow;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorCode usage_code(const std::vector<std::string>& args) {
  try {
    cli::parse_args(args);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(Cli, ParseDefaults) {
  const auto cfg = cli::parse_args({"arrow"});
  EXPECT_EQ(cfg.command, cli::Command::Arrow);
  EXPECT_EQ(cfg.p, 2u);
  EXPECT_EQ(cfg.n, 3u);
  EXPECT_EQ(cfg.q(), 8u);
  EXPECT_EQ(cfg.mode, ArrowMode::Arc);
  EXPECT_EQ(cfg.output, cli::OutputFormat::Json);
  EXPECT_FALSE(cfg.exhaustive);
}

TEST(Cli, ParseOptions) {
  const auto cfg = cli::parse_args({"arrow", "--n", "4", "--mode", "conic", "--output", "csv",
                                    "--linf", "1,2,3", "--exhaustive", "--modulus", "0x13"});
  EXPECT_EQ(cfg.q(), 16u);
  EXPECT_EQ(cfg.mode, ArrowMode::Conic);
  EXPECT_EQ(cfg.output, cli::OutputFormat::Csv);
  EXPECT_TRUE(cfg.exhaustive);
  EXPECT_EQ(cfg.ideal_line, "1,2,3");
  EXPECT_EQ(cfg.modulus, (Poly{1, 1, 0, 0, 1}));
  EXPECT_EQ(cli::parse_args({"plane", "--p", "3", "--n", "1"}).q(), 3u);
}

TEST(Cli, ParseRejects) {
  EXPECT_EQ(usage_code({}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"bogus"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"arrow", "--mode", "sideways"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"plane", "--p", "4"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"plane", "--n", "17"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"family", "--n", "1"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"arrow", "--p", "3", "--n", "1", "--mode", "conic"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"arrow", "--linf", "1,2"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"arrow", "--linf", "1,2,q"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"plane", "--modulus", "1,2"}), ErrorCode::UsageError);
  EXPECT_EQ(usage_code({"plane", "--unknown"}), ErrorCode::UsageError);
  // Conic mode has no family, so q = 2 is allowed there.
  EXPECT_NO_THROW(cli::parse_args({"arrow", "--n", "1", "--mode", "conic"}));
}

TEST(Cli, ArrowArcDefault) {
  const Outcome o = invoke({"arrow", "--n", "3", "--mode", "arc"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  EXPECT_TRUE(o.err.empty());
  const Json j = Json::parse(o.out);
  EXPECT_NO_THROW(validate_arrow_json(j));
  EXPECT_EQ(j["tallies"], Json::parse(R"({"past":2,"present":1,"future":4})"));
  EXPECT_EQ(j["tangent_line"], "(1:2:0)");
}

TEST(Cli, ArrowConicCsv) {
  const Outcome o = invoke({"arrow", "--n", "3", "--mode", "conic", "--output", "csv"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  EXPECT_TRUE(o.out.starts_with("q,mode,member_id,theta,class\n"));
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 8);
  EXPECT_EQ(o.out.find("Present"), std::string::npos);
}

TEST(Cli, FamilyJson) {
  const Outcome o = invoke({"family", "--n", "4", "--lstar", "1,3,0"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_NO_THROW(validate_family_json(j));
  EXPECT_EQ(j["members"].size(), 15u);
  EXPECT_EQ(j["Lstar"], "(1:3:0)");
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(Json::parse(invoke({"field-info", "--n", "2"}).out)["q"], 4);
  EXPECT_EQ(Json::parse(invoke({"plane", "--n", "2"}).out)["point_count"], 21);
  EXPECT_EQ(Json::parse(invoke({"conic", "--p", "5", "--n", "1"}).out)["class"], "Proper");
  EXPECT_EQ(Json::parse(invoke({"pencil", "--n", "3"}).out)["members"].size(), 9u);
  const Outcome csv = invoke({"pencil", "--n", "2", "--output", "csv"});
  EXPECT_TRUE(csv.out.starts_with("q,member_id,theta,class\n"));
  const Outcome nine = invoke({"conic", "--p", "3", "--n", "2", "--modulus", "1,0,1"});
  ASSERT_EQ(nine.code, cli::kExitOk) << nine.err;
  EXPECT_EQ(Json::parse(nine.out)["points"].size(), 10u);
}

TEST(Cli, ExitCodesAndErrorLine) {
  const Outcome usage = invoke({"family", "--n", "1"});
  EXPECT_EQ(usage.code, cli::kExitInvalid);
  EXPECT_TRUE(usage.out.empty());
  const Json e = Json::parse(usage.err);
  EXPECT_EQ(e["error"], "UsageError");
  EXPECT_EQ(std::count(usage.err.begin(), usage.err.end(), '\n'), 1);

  const Outcome tangent = invoke({"family", "--n", "3", "--lstar", "1,0,0"});
  EXPECT_EQ(tangent.code, cli::kExitInvalid);
  EXPECT_EQ(Json::parse(tangent.err)["error"], "InvalidTangentLine");

  const Outcome ideal = invoke({"arrow", "--linf", "1,1,0"});
  EXPECT_EQ(ideal.code, cli::kExitInvalid);
  EXPECT_EQ(Json::parse(ideal.err)["error"], "InvalidIdealLine");

  const Outcome contact = invoke({"arrow", "--lstar", "1,1,0"});
  EXPECT_EQ(contact.code, cli::kExitInvalid);
  EXPECT_EQ(Json::parse(contact.err)["error"], "DegenerateContactPoint");

  const Outcome reducible = invoke({"plane", "--n", "2", "--modulus", "1,0,1"});
  EXPECT_EQ(reducible.code, cli::kExitInvalid);
  EXPECT_EQ(Json::parse(reducible.err)["error"], "ReducibleModulus");

  EXPECT_TRUE(is_internal(ErrorCode::InvariantViolation));
  EXPECT_TRUE(is_internal(ErrorCode::UnclassifiableConic));
  EXPECT_FALSE(is_internal(ErrorCode::InvalidIdealLine));
}

TEST(Cli, Help) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, cli::kExitOk);
  EXPECT_NE(o.out.find("arrow"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"arrow", "--n", "3", "--exhaustive"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  ASSERT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["summary"]["configurations"], 294);
}

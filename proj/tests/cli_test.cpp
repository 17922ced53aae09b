#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "gtest/gtest.h"

#include "json.hpp"

#include "pst.hpp"
#include "test_support.hpp"

using namespace pst;

namespace
{

struct Run
{
  int code = -1;
  std::string out;
};

/// Run pstcheck with the given arguments, capturing stdout.
Run pstcheck(std::string const &args)
{
  auto cmd = std::string(PSTCHECK_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  char buf[4096];
  while (auto n = std::fread(buf, 1, sizeof buf, pipe))
    r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(std::string const &name)
{
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST(RunVerificationTest, SymmetricGroupsUnderTheoremA)
{
  RunConfig config;
  config.statements = {"ThmA"};
  auto s3 = run_verification({families::symmetric(3)}, config);
  ASSERT_EQ(1u, s3.reports.size());
  EXPECT_EQ(Verdict::consistent, s3.reports[0].verdict);
  EXPECT_EQ(0, s3.exit_code);

  auto s4 = run_verification({families::symmetric(4)}, config);
  ASSERT_EQ(1u, s4.reports.size());
  EXPECT_EQ(Verdict::consistent, s4.reports[0].verdict);
  EXPECT_EQ(0, s4.exit_code);
}

TEST(RunVerificationTest, MutationFails)
{
  RunConfig config;
  config.statements = {"A"};
  config.mutate = true;
  auto r = run_verification({families::symmetric(3)}, config);
  EXPECT_EQ(1, r.exit_code);
  EXPECT_EQ(1u, r.counterexamples);
}

TEST(RunVerificationTest, CapErrorsAreIsolated)
{
  RunConfig config;
  config.statements = {"ThmA", "ThmB"};
  config.lattice_cap = 20;
  config.jobs = 3;
  auto r = run_verification({families::symmetric(3), families::symmetric(4),
                             families::cyclic(5)},
                            config);
  ASSERT_EQ(6u, r.reports.size());
  EXPECT_EQ(Verdict::error, r.reports[2].verdict);
  EXPECT_EQ(Verdict::error, r.reports[3].verdict);
  EXPECT_NE(std::string::npos, r.reports[2].note.find("cap"));
  EXPECT_EQ(Verdict::consistent, r.reports[4].verdict);
  EXPECT_EQ("C5", r.reports[4].group);
  EXPECT_EQ(3, r.exit_code);
  EXPECT_EQ(2u, r.errors);
}

TEST(RunVerificationTest, JsonSchemaAndDeterminism)
{
  CorpusSpec spec;
  spec.max_order = 20;
  auto corpus = builtin_corpus(spec);
  RunConfig one;
  RunConfig many = one;
  many.jobs = 5;
  auto a = format_json(run_verification(corpus, one).reports);
  auto b = format_json(run_verification(corpus, many).reports);
  EXPECT_EQ(a, b);

  auto j = nlohmann::json::parse(a);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(corpus.size() * all_statements().size(), j.size());
  auto const &first = j.front();
  for (auto key : {"group", "order", "statement", "clauses", "verdict", "witnesses",
                   "elapsed_ms", "confirmed", "instances", "note"})
    EXPECT_TRUE(first.contains(key)) << key;
  EXPECT_EQ("C1", first["group"]);
  EXPECT_EQ("ThmA", first["statement"]);
  EXPECT_EQ(0.0, first["elapsed_ms"].get<double>());
}

TEST(RunVerificationTest, TextSummaryLine)
{
  RunConfig config;
  config.statements = {"A", "B"};
  auto r = run_verification({families::symmetric(3), families::alternating(4)}, config);
  auto text = format_text(r);
  EXPECT_NE(std::string::npos, text.find("S3 (order 6)"));
  EXPECT_NE(std::string::npos, text.find("OK 4 VACUOUS 0 FAIL 0"));
}

TEST(CliTest, VerifyExitCodes)
{
  auto ok = pstcheck("verify --statements A --max-order 6");
  EXPECT_EQ(0, ok.code);
  EXPECT_NE(std::string::npos, ok.out.find("OK 8 VACUOUS 0 FAIL 0"));

  EXPECT_EQ(1, pstcheck("verify --statements A --max-order 6 --mutate").code);
  EXPECT_EQ(2, pstcheck("verify --statements Nope").code);
  EXPECT_EQ(2, pstcheck("verify --format xml").code);
  EXPECT_EQ(2, pstcheck("frobnicate").code);
  EXPECT_EQ(3, pstcheck("verify --statements A --max-order 30 --lattice-cap 24").code);
}

TEST(CliTest, JsonOutputIsIdenticalAcrossWorkerCounts)
{
  auto p1 = temp_path("pst_cli_1.json"), p4 = temp_path("pst_cli_4.json");
  ASSERT_EQ(0, pstcheck("verify --max-order 24 --jobs 1 --format json --out " + p1).code);
  ASSERT_EQ(0, pstcheck("verify --max-order 24 --jobs 4 --format json --out " + p4).code);
  auto a = slurp(p1);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(p4));
}

TEST(CliTest, CheckSubcommand)
{
  auto file = temp_path("pst_cli.groups");
  std::ofstream(file) << "[group]\nname = S4\ndegree = 4\ngens = (0 1), (0 1 2 3)\n";
  auto qp = pstcheck("check --group-file " + file +
                     " --name S4 --subgroup \"(0 1), (0 1 2)\" --kind quasipermutable");
  EXPECT_EQ(0, qp.code);
  EXPECT_NE(std::string::npos, qp.out.find("quasipermutable = true"));

  auto pp = pstcheck("check --group-file " + file +
                     " --name S4 --subgroup \"(0 1), (0 1 2)\" --kind propermutable");
  EXPECT_NE(std::string::npos, pp.out.find("propermutable = false"));

  // built-in corpus when no file is given
  auto c3 = pstcheck("check --name S4 --subgroup \"(0 1 2)\" --kind s_quasipermutable");
  EXPECT_NE(std::string::npos, c3.out.find("s_quasipermutable = true"));

  EXPECT_EQ(2, pstcheck("check --group-file " + file +
                        " --name S4 --subgroup \"(0 1)(1 2)\" --kind quasipermutable")
                 .code);
  EXPECT_EQ(2, pstcheck("check --name S4 --subgroup \"(0 1)\" --kind weird").code);
  EXPECT_EQ(2, pstcheck("check --name Nope --subgroup \"(0 1)\" --kind propermutable").code);
}

TEST(CliTest, BadGroupFileIsAParseError)
{
  auto file = temp_path("pst_cli_bad.groups");
  std::ofstream(file) << "[group]\nname = X\ndegree = 3\ngens = (0 1)(1 2)\n";
  EXPECT_EQ(2, pstcheck("verify --group-file " + file).code);
}

TEST(CliTest, CorpusList)
{
  auto r = pstcheck("corpus list --max-order 8");
  EXPECT_EQ(0, r.code);
  EXPECT_NE(std::string::npos, r.out.find("8\tQ8\n"));
  EXPECT_NE(std::string::npos, r.out.find("14 groups\n"));
}

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gdmatch/bench.hpp"
#include "gdmatch/engines.hpp"

using namespace gdmatch;

namespace {

const fs::path kBin = GDMATCH_BIN;
const fs::path kData = GDMATCH_DATA;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gdmatch_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct Run {
  int code;
  std::string out;
};

Run shell(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "gdmatch_test_stdout.txt";
  const std::string cmd = kBin.string() + " " + args + " >" + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out)};
}

GenParams corpus_params() {
  GenParams params;
  params.segments = {1, 4};
  params.width = {1, 4};
  params.set_size = {1, 3};
  params.alphabet_size = 3;
  params.pattern_length = {1, 6};
  params.plant = Plant::language;
  return params;
}

}  // namespace

TEST(ReportJson, AllEnginesValidate) {
  const GdString t = parse_gd_text(read_file(kData / "figure1.gd"));
  const Pattern p = parse_pattern_text(read_file(kData / "figure1.pat"));
  for (auto name : kEngineNames) {
    const auto r = make_engine(name, {})(t, p);
    const auto j = report_json(name, t, p, r);
    EXPECT_EQ(validate_report_json(j), std::nullopt) << name;
    EXPECT_TRUE(j.at("matched").get<bool>());
    EXPECT_EQ(j.at("complexity").at("qubits").get<int>(), 46);
    EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
  }
  const auto brute = report_json("brute", t, p, match_bruteforce_report(t, p));
  EXPECT_EQ(brute.at("occurrence").at("start_column"), 6);
  EXPECT_EQ(brute.at("occurrence").at("end_column"), 12);
  EXPECT_TRUE(brute.at("ledger").is_null());
  EXPECT_THROW(make_engine("nope"), ArgumentError);

  auto broken = brute;
  broken.erase("witnesses");
  EXPECT_TRUE(validate_report_json(broken).has_value());
}

TEST(Corpus, DeterministicAndRoundTrips) {
  const auto a = scratch("corpus_a");
  const auto b = scratch("corpus_b");
  write_corpus(a, corpus_params(), 5, 6);
  write_corpus(b, corpus_params(), 5, 6);
  const auto ca = load_corpus(a);
  ASSERT_EQ(ca.size(), 6u);
  for (const auto& inst : ca) {
    EXPECT_EQ(read_file(a / (inst.id + ".gd")), read_file(b / (inst.id + ".gd")));
    EXPECT_EQ(read_file(a / (inst.id + ".pat")), read_file(b / (inst.id + ".pat")));
  }
  // instance x is generated from seed + x
  const auto [t, p] = generate_random(corpus_params(), 5 + 3);
  EXPECT_EQ(ca[3].text, t);
  EXPECT_EQ(ca[3].pattern.str(), p.str());
}

TEST(Bench, AgreeingEnginesExitZero) {
  const auto dir = scratch("bench_ok");
  write_corpus(dir, corpus_params(), 1, 8);
  std::vector<EngineEntry> engines;
  for (auto name : kEngineNames) engines.push_back({std::string(name), make_engine(name, {})});
  std::ostringstream csv;
  const auto result = run_bench(load_corpus(dir), engines, 1, csv);
  EXPECT_EQ(result.exit_code, kExitMatched);
  EXPECT_TRUE(result.disagreements.empty());

  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kBenchHeader);
  std::size_t rows = 0, summaries = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9) << line;
    (line.rfind("summary,", 0) == 0 ? summaries : rows)++;
  }
  EXPECT_EQ(rows, 8u * 4u);
  EXPECT_EQ(summaries, 2u);  // the two ledger engines
}

TEST(Bench, DisagreementExitsThree) {
  const auto dir = scratch("bench_bad");
  write_corpus(dir, corpus_params(), 1, 4);
  std::vector<EngineEntry> engines{{"brute", make_engine("brute")},
                                   {"liar", [](const GdString& t, const Pattern& p) {
                                      auto r = match_threads(t, p);
                                      r.matched = !r.matched;
                                      return r;
                                    }}};
  std::ostringstream csv;
  const auto result = run_bench(load_corpus(dir), engines, 1, csv);
  EXPECT_EQ(result.exit_code, kExitDisagreement);
  EXPECT_EQ(result.disagreements.size(), 4u);
}

TEST(Cli, RunExitCodes) {
  const std::string text = (kData / "figure1.gd").string();
  EXPECT_EQ(shell("run --text " + text + " --pattern GTGTTAA --engine brute").code, 0);
  EXPECT_EQ(shell("run --text " + text + " --pattern @" + (kData / "figure1.pat").string() + " --engine threads").code,
            0);
  EXPECT_EQ(shell("run --text " + text + " --pattern ZZZ --engine grover-ideal").code, 1);
  EXPECT_EQ(shell("run --text " + text + " --pattern GTGTTAA --engine warp").code, 2);
  EXPECT_EQ(shell("run --text /nonexistent.gd --pattern A").code, 2);

  const auto bad = scratch("cli_bad") / "bad.gd";
  std::ofstream(bad) << "AC,G\n";
  EXPECT_EQ(shell("run --text " + bad.string() + " --pattern A").code, 2);

  const auto json = shell("run --text " + text + " --pattern GTGTTAA --engine grover-sampled --seed 4 --json");
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(validate_report_json(nlohmann::json::parse(json.out)), std::nullopt);
}

TEST(Cli, GenAndBench) {
  const auto dir = scratch("cli_gen");
  const auto gen = shell("gen --n 1..3 --k 1..3 --set-size 1..2 --alphabet 2 --m 1..4 --seed 9 --count 5 --out " +
                         dir.string());
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(load_corpus(dir).size(), 5u);
  const auto bench = shell("bench --corpus " + dir.string() + " --engines brute,threads,grover-ideal --reps 1");
  EXPECT_EQ(bench.code, 0);
  EXPECT_EQ(bench.out.substr(0, bench.out.find('\n')), kBenchHeader);
  EXPECT_EQ(shell("bench --corpus " + dir.string() + " --engines brute,bogus").code, 2);
  EXPECT_EQ(shell("gen --n 3..x --out " + dir.string()).code, 2);
}

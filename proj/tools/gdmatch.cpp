// gdmatch: pattern search in generalized degenerate strings.
//
//   gdmatch run   --text <file> --pattern <str|@file> --engine <name> [--seed N] [--boost K] [--json]
//   gdmatch gen   --n A..B --k A..B --set-size A..B --alphabet N --m A..B --seed N --out <dir>
//   gdmatch bench --corpus <dir> --engines a,b,c --reps N
//
// Exit codes: 0 matched / success, 1 no match, 2 input error, 3 engines disagree.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "gdmatch/gdmatch.hpp"

namespace {

using namespace gdmatch;

SizeRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ArgumentError("bad range '" + text + "', expected A..B");
  }
}

Pattern load_pattern(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return parse_pattern_text(read_file(arg.substr(1)));
  return Pattern(arg);
}

void print_human(std::ostream& out, std::string_view engine, const GdString& t, const Pattern& p,
                 const MatchReport& r) {
  const Metrics mt = metrics(t);
  const ComplexityReport c = complexity_report(t, p);
  out << "engine:     " << engine << '\n';
  out << "matched:    " << (r.matched ? "yes" : "no") << '\n';
  out << "witnesses:";
  for (auto h : r.witnesses) out << ' ' << h;
  out << (r.substring_hit ? "  (inside one segment string)" : "") << '\n';
  if (r.occurrence) {
    out << "occurrence: columns " << r.occurrence->start_column << ".." << r.occurrence->end_column << ", strings";
    for (std::size_t x = 0; x < r.occurrence->choices.size(); ++x)
      out << " T[" << r.occurrence->first_segment + x + 1 << "][" << r.occurrence->choices[x] + 1 << ']';
    out << '\n';
  }
  out << "metrics:    n=" << mt.n << " N=" << mt.N << " W=" << mt.W << " cardinality=" << mt.cardinality << '\n';
  if (r.ledger) {
    const auto& l = *r.ledger;
    out << "ledger:     G1=" << l.g1_calls << " G2=" << l.g2_calls << " G3=" << l.g3_calls
        << " substring=" << l.substring_outer_calls << '/' << l.substring_inner_calls
        << " char_queries=" << l.char_queries << '\n';
  }
  out << "complexity: sum_sqrt=" << c.sum_sqrt << " sqrt(nN)=" << c.bound_rhs << (c.holds ? " (holds)" : " (VIOLATED)")
      << " predicted=" << c.predicted_total << " qubits=" << c.qubits << '\n';
  out << "qubits:     " << kQubitFormula << '\n';
}

int cmd_run(const std::string& text_path, const std::string& pattern_arg, const std::string& engine,
            const EngineOptions& opts, bool json) {
  GdString text = [&] {
    try {
      return parse_gd_text(read_file(text_path));
    } catch (const FormatError& e) {
      throw std::runtime_error(text_path + ": " + e.what());
    }
  }();
  const Pattern pattern = load_pattern(pattern_arg);
  const MatchReport report = make_engine(engine, opts)(text, pattern);
  if (json)
    std::cout << report_json(engine, text, pattern, report).dump(2) << '\n';
  else
    print_human(std::cout, engine, text, pattern, report);
  return report.matched ? kExitMatched : kExitNoMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern matching in generalized degenerate strings"};
  app.require_subcommand(1);

  std::string text_path, pattern_arg, engine = "threads";
  EngineOptions opts;
  bool json = false;
  auto* run = app.add_subcommand("run", "decide whether a pattern occurs in a GD string");
  run->add_option("--text", text_path, "GD string file")->required();
  run->add_option("--pattern", pattern_arg, "pattern string, or @file")->required();
  run->add_option("--engine", engine, "brute | threads | grover-ideal | grover-sampled")
      ->check(CLI::IsMember({"brute", "threads", "grover-ideal", "grover-sampled"}));
  run->add_option("--seed", opts.seed, "seed for the sampled engine");
  run->add_option("--boost", opts.boost, "majority repetitions for inner searches (default: 18 ln calls)");
  run->add_flag("--json", json, "emit a JSON report");

  std::string n_range = "1..6", k_range = "1..5", set_range = "1..4", m_range = "1..12", out_dir, plant = "none";
  std::size_t alphabet = 4, count = 1;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "write random instances");
  gen->add_option("--n", n_range, "segment count range A..B");
  gen->add_option("--k", k_range, "segment width range A..B");
  gen->add_option("--set-size", set_range, "strings per segment range A..B");
  gen->add_option("--alphabet", alphabet, "alphabet size");
  gen->add_option("--m", m_range, "pattern length range A..B");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", out_dir, "output directory")->required();
  gen->add_option("--count", count, "number of instances (seeds seed..seed+count-1)");
  gen->add_option("--plant", plant, "none | language | in_string")
      ->check(CLI::IsMember({"none", "language", "in_string"}));

  std::string corpus_dir, engine_list = "brute,threads,grover-ideal,grover-sampled";
  std::size_t reps = 1;
  EngineOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "run engines over a corpus and print CSV");
  bench->add_option("--corpus", corpus_dir, "corpus directory")->required();
  bench->add_option("--engines", engine_list, "comma separated engine names");
  bench->add_option("--reps", reps, "repetitions per instance and engine");
  bench->add_option("--seed", bench_opts.seed, "seed for the sampled engine");
  bench->add_option("--boost", bench_opts.boost, "majority repetitions for inner searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*run) return cmd_run(text_path, pattern_arg, engine, opts, json);

    if (*gen) {
      GenParams params;
      params.segments = parse_range(n_range);
      params.width = parse_range(k_range);
      params.set_size = parse_range(set_range);
      params.pattern_length = parse_range(m_range);
      params.alphabet_size = alphabet;
      params.plant = plant == "language" ? Plant::language : plant == "in_string" ? Plant::in_string : Plant::none;
      for (const auto& path : write_corpus(out_dir, params, gen_seed, count)) std::cout << path.string() << '\n';
      return kExitMatched;
    }

    if (*bench) {
      std::vector<EngineEntry> engines;
      std::stringstream list(engine_list);
      for (std::string name; std::getline(list, name, ',');) {
        if (!is_engine_name(name)) throw ArgumentError("unknown engine: " + name);
        engines.push_back({name, make_engine(name, bench_opts)});
      }
      const BenchResult result = run_bench(load_corpus(corpus_dir), engines, reps, std::cout);
      for (const auto& d : result.disagreements) std::cerr << "ENGINE DISAGREEMENT: " << d << '\n';
      return result.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

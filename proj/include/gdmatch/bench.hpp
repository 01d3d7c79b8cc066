#pragma once

// Corpus files and the benchmark table.
// A corpus is a directory of <id>.gd text files, each with a sibling
// <id>.pat holding the pattern on one line.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "complexity.hpp"
#include "engines.hpp"
#include "gd_string.hpp"
#include "generate.hpp"

namespace gdmatch {

namespace fs = std::filesystem;

inline constexpr int kExitMatched = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDisagreement = 3;

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << data;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

/// Pattern file contents: the first line, without its newline.
inline Pattern parse_pattern_text(const std::string& text) {
  return Pattern(text.substr(0, text.find('\n')));
}

inline std::string instance_id(std::size_t index) {
  std::ostringstream ss;
  ss << "instance_" << std::setw(4) << std::setfill('0') << index;
  return ss.str();
}

/// Writes `count` instances; instance x uses seed + x.
inline std::vector<fs::path> write_corpus(const fs::path& dir, const GenParams& params, std::uint64_t seed,
                                          std::size_t count = 1) {
  fs::create_directories(dir);
  std::vector<fs::path> written;
  for (std::size_t x = 0; x < count; ++x) {
    auto [text, pattern] = generate_random(params, seed + x);
    const fs::path base = dir / instance_id(x);
    write_file(fs::path(base).replace_extension(".gd"), serialize(text));
    write_file(fs::path(base).replace_extension(".pat"), pattern.str() + "\n");
    written.push_back(fs::path(base).replace_extension(".gd"));
  }
  return written;
}

struct CorpusInstance {
  std::string id;
  GdString text;
  Pattern pattern;
};

/// Every <id>.gd with a sibling <id>.pat, sorted by id.
inline std::vector<CorpusInstance> load_corpus(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".gd") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusInstance> out;
  for (const auto& f : files) {
    const fs::path pat = fs::path(f).replace_extension(".pat");
    if (!fs::exists(pat)) throw std::runtime_error("missing pattern file " + pat.string());
    out.push_back({f.stem().string(), parse_gd_text(read_file(f)), parse_pattern_text(read_file(pat))});
  }
  return out;
}

inline constexpr const char* kBenchHeader =
    "instance,m,n,N,engine,matched,wall_ms,char_queries,predicted_queries,ratio";

struct BenchResult {
  int exit_code = kExitMatched;
  std::vector<std::string> disagreements;
  std::map<std::string, double> ratio_drift;  // engine -> max ratio / min ratio
};

/// Runs every engine on every instance and writes the CSV table. Engines
/// that produce a ledger get char_queries, predicted_queries and ratio;
/// the others leave those cells empty. One summary row per ledger engine
/// carries the ratio drift in the ratio column.
inline BenchResult run_bench(const std::vector<CorpusInstance>& corpus, const std::vector<EngineEntry>& engines,
                             std::size_t reps, std::ostream& csv) {
  BenchResult result;
  std::map<std::string, std::pair<double, double>> ratio_range;
  csv << kBenchHeader << '\n';
  csv << std::setprecision(6);
  for (const auto& inst : corpus) {
    const Metrics mt = metrics(inst.text);
    const double predicted = predicted_queries(inst.text, inst.pattern);
    std::optional<bool> verdict;
    for (const auto& engine : engines) {
      MatchReport report;
      double total_ms = 0.0;
      for (std::size_t rep = 0; rep < std::max<std::size_t>(1, reps); ++rep) {
        auto start = std::chrono::steady_clock::now();
        report = engine.run(inst.text, inst.pattern);
        total_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      const double wall_ms = total_ms / static_cast<double>(std::max<std::size_t>(1, reps));

      if (!verdict) {
        verdict = report.matched;
      } else if (*verdict != report.matched) {
        result.disagreements.push_back(inst.id + ": " + engine.name + " disagrees");
        result.exit_code = kExitDisagreement;
      }

      csv << inst.id << ',' << inst.pattern.size() << ',' << mt.n << ',' << mt.N << ',' << engine.name << ','
          << (report.matched ? "true" : "false") << ',' << wall_ms << ',';
      if (report.ledger) {
        const double ratio = static_cast<double>(report.ledger->char_queries) / predicted;
        csv << report.ledger->char_queries << ',' << predicted << ',' << ratio;
        auto [it, fresh] = ratio_range.try_emplace(engine.name, ratio, ratio);
        if (!fresh) {
          it->second.first = std::min(it->second.first, ratio);
          it->second.second = std::max(it->second.second, ratio);
        }
      } else {
        csv << ",,";
      }
      csv << '\n';
    }
  }
  for (const auto& [name, range] : ratio_range) {
    const double drift = range.second / range.first;
    result.ratio_drift[name] = drift;
    csv << "summary,,,," << name << ",,,,," << drift << '\n';
  }
  return result;
}

}  // namespace gdmatch

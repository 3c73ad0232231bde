// gwfloor_cli: quadratically enriched floor diagram counts from the command line.
//
//   gwfloor_cli count p2:3 --pairs-count 3
//   gwfloor_cli table p2:4 --format csv
//   gwfloor_cli enumerate p2:3 --pairs 1-2,3-4,5-6 --emit
//   gwfloor_cli verify --scope quick
//
// Exit status: 0 success, 1 verification failure, 2 bad arguments, 3 no beta form.

#include "gwfloor/gwfloor.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gwfloor;

// Test hook: gamma evaluated one weight too high.
struct GammaOffByOne : StandardFormulas {
  static GwElem gamma(int m, int i, int s) { return StandardFormulas::gamma(m + 1, i, s); }
};

struct Options {
  std::string spec;
  std::string format = "text";
  std::string pairs;
  std::optional<int> pairs_count;
  unsigned threads = default_thread_count();
  bool ascii = false;
  bool timing = false;
  bool emit = false;
  std::string out_file;
  std::string scope = "quick";
  std::string mutate;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "1-2,3-4" with 1-based positions.
std::vector<PositionPair> parse_pairs(const std::string& text) {
  std::vector<PositionPair> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("pair '" + item + "' is not of the form a-b");
    try {
      std::size_t used = 0;
      const int a = std::stoi(item.substr(0, dash), &used);
      if (used != dash) throw UsageError("bad pair '" + item + "'");
      const std::string rhs = item.substr(dash + 1);
      const int b = std::stoi(rhs, &used);
      if (used != rhs.size()) throw UsageError("bad pair '" + item + "'");
      out.emplace_back(a - 1, b - 1);
    } catch (const std::logic_error&) {
      throw UsageError("bad pair '" + item + "'");
    }
  }
  return out;
}

struct PairChoice {
  int s = 0;
  std::optional<std::vector<PositionPair>> pairs;
};

PairChoice pair_choice(const Options& o) {
  PairChoice c;
  if (!o.pairs.empty()) {
    c.pairs = parse_pairs(o.pairs);
    c.s = static_cast<int>(c.pairs->size());
    if (o.pairs_count && *o.pairs_count != c.s) throw UsageError("--pairs-count disagrees with --pairs");
  } else if (o.pairs_count) {
    c.s = *o.pairs_count;
  }
  return c;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string render_records(const std::vector<OutputRecord>& recs, const Options& o, bool single) {
  std::ostringstream out;
  if (o.format == "json") {
    if (single) {
      out << to_json(recs.front()).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : recs) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    }
  } else if (o.format == "csv") {
    int max_s = 0;
    for (const auto& r : recs) max_s = std::max(max_s, r.s);
    out << csv_header(max_s) << '\n';
    for (const auto& r : recs) out << csv_row(r, max_s) << '\n';
  } else if (single) {
    out << render_beta_form(recs.front().beta, o.ascii) << '\n';
  } else {
    out << "(r, s) | form | rank | sig+ | sig- | classes\n";
    for (const auto& r : recs)
      out << "(" << r.r << ", " << r.s << ") | " << render_beta_form(r.beta, o.ascii) << " | " << r.rank << " | "
          << r.sig_pos << " | " << r.sig_neg << " | " << r.classes << '\n';
  }
  return out.str();
}

void write_output(const std::string& text, const Options& o) {
  if (o.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_file, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.out_file);
  f << text;
}

template <class F>
int cmd_count(const Options& o) {
  const auto spec = DegreeSpec::parse(o.spec);
  const auto choice = pair_choice(o);
  const auto start = std::chrono::steady_clock::now();
  const auto res = count<F>(spec, choice.s, choice.pairs, o.threads);
  const double ms = elapsed_ms(start);
  if (o.timing && o.format == "text") std::cerr << "time: " << ms << " ms\n";
  write_output(render_records({make_record(res, o.timing ? std::optional(ms) : std::nullopt)}, o, true), o);
  return 0;
}

template <class F>
int cmd_table(const Options& o) {
  const auto spec = DegreeSpec::parse(o.spec);
  const auto diagrams = enumerate(spec, o.threads);
  std::vector<OutputRecord> recs;
  for (int s = 0; 2 * s <= n_delta(spec); ++s) {
    const auto start = std::chrono::steady_clock::now();
    const auto res = count_from<F>(spec, diagrams, s, std::nullopt, o.threads);
    const double ms = elapsed_ms(start);
    recs.push_back(make_record(res, o.timing ? std::optional(ms) : std::nullopt));
  }
  write_output(render_records(recs, o, false), o);
  return 0;
}

template <class F>
int cmd_enumerate(const Options& o) {
  const auto spec = DegreeSpec::parse(o.spec);
  const auto choice = pair_choice(o);
  const auto diagrams = enumerate(spec, o.threads);
  const bool merging = choice.pairs || choice.s > 0;
  std::ostringstream out;
  if (!merging) {
    if (o.emit) {
      for (const auto& d : diagrams) {
        json j = diagram_to_json(d);
        j["complex_multiplicity"] = integer_to_json(complex_multiplicity(d));
        out << j.dump() << '\n';
      }
    } else {
      out << diagrams.size() << " diagrams\n";
    }
  } else {
    if (2 * choice.s > n_delta(spec)) throw UsageError("too many merge pairs for " + spec.to_string());
    const auto pairs = normalize_pairs(choice.pairs ? *choice.pairs : default_pairs(choice.s), n_delta(spec));
    const auto classes = collect_classes<F>(diagrams, pairs, o.threads);
    if (o.emit) {
      for (const auto& c : classes) out << class_to_json(c).dump() << '\n';
    } else {
      out << diagrams.size() << " diagrams, " << classes.size() << " merged classes\n";
    }
  }
  write_output(out.str(), o);
  return 0;
}

template <class F>
int cmd_verify(const Options& o) {
  if (o.scope != "quick" && o.scope != "full") throw UsageError("scope must be quick or full");
  const auto rep = run_verification<F>(o.scope == "full" ? VerifyScope::Full : VerifyScope::Quick, o.threads);
  std::ostringstream out;
  if (o.format == "json") {
    json failures = json::array();
    for (const auto& f : rep.failures) failures.push_back({{"check", f.check}, {"subject", f.subject}, {"detail", f.detail}});
    out << json{{"ok", rep.ok()}, {"checks", rep.checks}, {"failures", failures}}.dump(2) << '\n';
  } else {
    for (const auto& f : rep.failures) out << "FAIL " << f.check << " " << f.subject << ": " << f.detail << '\n';
    out << (rep.ok() ? "ok" : "FAILED") << ": " << rep.checks << " checks, " << rep.failures.size() << " failures\n";
  }
  write_output(out.str(), o);
  return rep.ok() ? 0 : 1;
}

template <class F>
int dispatch(const std::string& command, const Options& o) {
  if (command == "count") return cmd_count<F>(o);
  if (command == "table") return cmd_table<F>(o);
  if (command == "enumerate") return cmd_enumerate<F>(o);
  return cmd_verify<F>(o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratically enriched counts of rational curves via floor diagrams"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out_file, "Write output to FILE");
    sub->add_option("--mutate", o.mutate)->group("")->check(CLI::IsMember({"gamma-off-by-one"}));
  };
  auto add_pairs = [&](CLI::App* sub) {
    sub->add_option("--pairs", o.pairs, "Merged position pairs, 1-based, e.g. 1-2,3-4");
    sub->add_option("--pairs-count", o.pairs_count, "Number of merged pairs s (leftmost pairs)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* count_cmd = app.add_subcommand("count", "Count with s merged pairs");
  count_cmd->add_option("spec", o.spec, "Degree, e.g. p2:3 or bl2:4,2,1")->required();
  add_pairs(count_cmd);
  add_common(count_cmd);
  count_cmd->add_flag("--ascii", o.ascii, "ASCII symbols in text output");
  count_cmd->add_flag("--timing", o.timing, "Record wall-clock time");

  auto* table_cmd = app.add_subcommand("table", "Counts for every s");
  table_cmd->add_option("spec", o.spec, "Degree")->required();
  add_common(table_cmd);
  table_cmd->add_flag("--ascii", o.ascii, "ASCII symbols in text output");
  table_cmd->add_flag("--timing", o.timing, "Record wall-clock time per row");

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate floor diagrams or merged classes");
  enum_cmd->add_option("spec", o.spec, "Degree")->required();
  add_pairs(enum_cmd);
  add_common(enum_cmd);
  enum_cmd->add_flag("--emit", o.emit, "One JSON object per diagram or class");

  auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suite");
  verify_cmd->add_option("--scope", o.scope, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (o.mutate == "gamma-off-by-one") return dispatch<GammaOffByOne>(command, o);
    return dispatch<StandardFormulas>(command, o);
  } catch (const ResidualNotInSpan& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

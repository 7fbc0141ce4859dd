#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsq/agreement.hpp"
#include "fsq/classifier.hpp"
#include "fsq/digit_set.hpp"
#include "fsq/line_detect.hpp"
#include "fsq/loop_graph.hpp"
#include "fsq/oracle.hpp"
#include "fsq/render.hpp"
#include "fsq/report.hpp"

namespace fsq::cli {

namespace {

using nlohmann::json;

// Validated options shared by all subcommands; unused fields keep defaults.
struct CliConfig {
  std::string input;  // path, "-" for the input stream, empty when --grid is used
  std::string grid;   // inline digit set, rows separated by '/'
  std::int64_t max_iter = 0;
  std::optional<std::int64_t> margin;
  int depth = 3;
  std::string format = "json";
  std::string out_path;
  int jobs = 1;
  bool dedup = false;
  int n = 2;
  std::string slope;
  bool timing = false;
  bool ascii = false;
  bool components = false;
  std::string sets_path;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

DigitSet load_digits(const CliConfig& cfg, std::istream& in) {
  if (!cfg.grid.empty()) return parse_digit_set(cfg.grid);
  if (cfg.input.empty()) throw InputError("no digit set given (pass a file, '-' or --grid)");
  if (cfg.input == "-") return parse_digit_set(read_all(in));
  std::ifstream file(cfg.input);
  if (!file) throw InputError("cannot open " + cfg.input);
  return parse_digit_set(read_all(file));
}

Slope parse_slope(const std::string& text) {
  if (text == "vertical" || text == "inf") return Slope::vertical();
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto r = std::stoll(text, &used);
      if (used != text.size()) throw InputError("bad slope: " + text);
      return Slope::rational(r, 1);
    }
    const auto r = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw InputError("bad slope: " + text);
    const std::string rest = text.substr(slash + 1);
    const auto s = std::stoll(rest, &used);
    if (used != rest.size() || s == 0) throw InputError("bad slope: " + text);
    return Slope::rational(r, s);
  } catch (const std::logic_error&) {
    throw InputError("bad slope: " + text);
  }
}

// Writes to --out when given, otherwise to the report stream.
void emit(const CliConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw InputError("cannot write " + cfg.out_path);
  file << text;
}

json vec_list(const std::vector<LatticeVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back({v.x, v.y});
  return a;
}

int do_classify(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const DigitSet d = load_digits(cfg, in);
  ClassifyOptions opts;
  opts.max_iter = cfg.max_iter;
  const auto report = classify(d, opts);
  emit(cfg, out, cfg.format == "text" ? report_text(report) : report_serialize(report, cfg.timing) + "\n");
  return kOk;
}

int do_census(const CliConfig& cfg, std::ostream& out) {
  CensusOptions opts;
  opts.n = cfg.n;
  opts.dedup = cfg.dedup;
  opts.jobs = cfg.jobs;
  opts.max_iter = cfg.max_iter;
  const auto result = census(opts);
  std::string text;
  if (cfg.format == "text" || cfg.format == "csv") {
    text = census_csv(result);
  } else {
    for (const auto& e : result.entries) {
      json j = report_to_json(e.report, cfg.timing);
      if (cfg.dedup) j["orbit_size"] = e.weight;
      text += j.dump() + "\n";
    }
    text += json{{"summary", census_summary_json(result)}}.dump() + "\n";
  }
  emit(cfg, out, text);
  return kOk;
}

int do_render(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.out_path.empty()) throw InputError("render needs --out");
  const DigitSet d = load_digits(cfg, in);
  std::string figure;
  std::int64_t width = 0;
  if (cfg.components) {
    const LabelledGrid labelled = label_Fk(d, cfg.depth);
    figure = render_components_svg(labelled);
    width = labelled.width;
    out << json{{"out", cfg.out_path}, {"format", "svg"}, {"width", width}, {"height", labelled.height},
                {"components", labelled.stats.count}, {"max_component", labelled.stats.max_size}}
               .dump()
        << "\n";
  } else {
    const CellGrid grid = expand(d, cfg.depth);
    figure = render_pbm(grid, cfg.ascii ? PbmFormat::kAscii : PbmFormat::kBinary);
    out << json{{"out", cfg.out_path}, {"format", cfg.ascii ? "P1" : "P4"}, {"width", grid.side()},
                {"height", grid.side()}, {"cells", grid.count()}}
               .dump()
        << "\n";
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw InputError("cannot write " + cfg.out_path);
  file << figure;
  return kOk;
}

int do_omega(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.slope.empty()) throw InputError("omega needs --slope r/s");
  const DigitSet d = load_digits(cfg, in);
  const Slope slope = parse_slope(cfg.slope);
  json j{{"n", d.base()}, {"slope", slope_to_json(slope)}};
  if (slope.is_vertical()) {
    // Vertical lines reduce to a full column.
    const auto col = full_col(d);
    j["full_column"] = col ? json(*col) : json(nullptr);
    j["line_exists"] = col.has_value();
    const auto omega = col ? std::optional<Rational>(band_intercept(*col, d.base())) : std::nullopt;
    j["witness"] = omega ? json{{"num", omega->num}, {"den", omega->den}} : json(nullptr);
  } else {
    const auto profile = omega_profile(d, slope);
    j["grid"] = profile.grid;
    j["points"] = profile.points;
    j["intervals"] = profile.intervals;
    j["surviving"] = surviving_points(profile);
    j["line_exists"] = line_exists_for_slope(profile);
    const auto omega = witness_intercept(profile);
    j["witness"] = omega ? json{{"num", omega->num}, {"den", omega->den}} : json(nullptr);
  }
  emit(cfg, out, j.dump() + "\n");
  return kOk;
}

int do_qiter(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const DigitSet d = load_digits(cfg, in);
  std::string text;
  BoundednessOptions opts;
  opts.max_iter = cfg.max_iter;
  opts.on_step = [&](const IterationStep& step) {
    text += json{{"k", step.k}, {"Q", vec_list(step.q.elements)}, {"status", std::string(step.status)}}.dump() +
            "\n";
  };
  const auto result = classify_boundedness(d, opts);
  emit(cfg, out, text);
  return result.status == BoundednessStatus::kInconclusive ? kInconclusive : kOk;
}

int do_oracle_check(const CliConfig& cfg, std::ostream& out) {
  std::vector<DigitSet> sets;
  for (const auto& [name, d] : named_fixtures()) sets.push_back(d);
  for (const auto& d : all_digit_sets(2)) sets.push_back(d);
  if (!cfg.sets_path.empty()) {
    for (const auto& d : load_mask_list(cfg.sets_path)) sets.push_back(d);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<ClassificationReport> reports;
  for (const auto& d : sets) reports.push_back(classify(d));

  std::vector<SuiteResult> suites;
  suites.push_back(graph_oracle_equivalence(sets, {1, 2}, 4, cfg.jobs, cfg.margin));
  suites.push_back(line_witness_suite(sets, 5));
  suites.push_back(bridge_suite(sets, 2));
  suites.push_back(symmetry_suite(sets));
  suites.push_back(consistency_suite(reports));
  json summary = suites_to_json(suites);
  summary["digit_sets"] = sets.size();
  emit(cfg, out, summary.dump() + "\n");
  return summary["passed"].get<bool>() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topology of fractal squares: classification, oracle checks and figures", "fsq"};
  app.require_subcommand(1, 1);
  CliConfig cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Digit set file (ASCII grid or JSON), '-' for stdin");
    sub->add_option("--grid", cfg.grid, "Inline ASCII grid, rows top to bottom separated by '/'");
  };
  auto add_iter = [&](CLI::App* sub) {
    sub->add_option("--max-iter", cfg.max_iter, "Iteration cap (default 38 n^10)")->check(CLI::NonNegativeNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a digit set");
  add_input(classify_cmd);
  add_iter(classify_cmd);
  classify_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
  classify_cmd->add_flag("--timing", cfg.timing, "Include wall time in the JSON report");

  auto* census_cmd = app.add_subcommand("census", "Classify every digit set of a base");
  census_cmd->add_option("--n", cfg.n, "Base")->required();
  census_cmd->add_flag("--dedup", cfg.dedup, "One representative per symmetry orbit");
  census_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text", "csv"}));
  census_cmd->add_option("--out", cfg.out_path);
  census_cmd->add_flag("--timing", cfg.timing);
  add_iter(census_cmd);

  auto* render_cmd = app.add_subcommand("render", "Write F_k as PBM, or its components as SVG");
  add_input(render_cmd);
  render_cmd->add_option("--depth", cfg.depth, "Level k")->check(CLI::Range(1, 14));
  render_cmd->add_option("--out", cfg.out_path, "Figure path")->required();
  render_cmd->add_flag("--ascii", cfg.ascii, "Plain P1 instead of P4");
  render_cmd->add_flag("--components", cfg.components, "SVG coloured by component");

  auto* omega_cmd = app.add_subcommand("omega", "Level-1 intercept profile for a slope");
  add_input(omega_cmd);
  omega_cmd->add_option("--slope", cfg.slope, "r/s, an integer, or 'vertical'")->required();
  omega_cmd->add_option("--out", cfg.out_path);

  auto* qiter_cmd = app.add_subcommand("qiter", "Trace the admissible sets Q_k as JSON lines");
  add_input(qiter_cmd);
  add_iter(qiter_cmd);
  qiter_cmd->add_option("--out", cfg.out_path);

  auto* check_cmd = app.add_subcommand("oracle-check", "Run the graph/oracle agreement suites");
  check_cmd->add_option("--sets", cfg.sets_path, "Extra digit sets, one 'n mask' per line");
  check_cmd->add_option("--margin", cfg.margin, "Oracle window margin in unit squares");
  check_cmd->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  check_cmd->add_option("--out", cfg.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify_cmd) return do_classify(cfg, in, out);
    if (*census_cmd) return do_census(cfg, out);
    if (*render_cmd) return do_render(cfg, in, out);
    if (*omega_cmd) return do_omega(cfg, in, out);
    if (*qiter_cmd) return do_qiter(cfg, in, out);
    if (*check_cmd) return do_oracle_check(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace fsq::cli

// Command-line front end: sample, coverage, oracle, figure, report.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catsim/coverage.hpp"
#include "catsim/feasibility.hpp"
#include "catsim/io.hpp"
#include "catsim/svg.hpp"

namespace {

using nlohmann::json;
using namespace catsim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

struct CliError {
  int code;
  std::string message;
};

std::vector<Model> expand_models(const std::string& model) {
  if (model == "all") return {Model::Classical, Model::Prequant, Model::Quant};
  return {*parse_model(model)};
}

std::vector<ClassFilter> expand_classes(const std::string& cls) {
  if (cls == "all-three")
    return {ClassFilter::All, ClassFilter::Intransitive, ClassFilter::Transitive};
  return {*parse_class_filter(cls)};
}

// Writes through a temporary stringstream so a failed open never leaves a
// partial file, and "-" goes to stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!std::cout) throw CliError{kExitIo, "write to stdout failed"};
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw CliError{kExitIo, "cannot open '" + path + "' for writing"};
  os << content;
  os.flush();
  if (!os) throw CliError{kExitIo, "write to '" + path + "' failed"};
}

json coverage_json(const CoverageReport& r) {
  json j{{"model", std::string(model_name(r.model))},
         {"class", std::string(class_filter_name(r.cls))},
         {"method", std::string(method_name(r.method))},
         {"resolution", r.resolution},
         {"covered_cells", r.covered_cells},
         {"fraction", r.fraction}};
  if (r.method == CoverageMethod::Empirical) {
    j["sample_count"] = r.sample_count;
    j["seed"] = r.seed;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Flag set shared by the subcommands, with JSON config fallback.

struct Options {
  std::string model = "classical";
  std::string cls = "all";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 42;
  int grid = 0;  // 0: per-method default (oracle 256, empirical 100)
  std::string method = "oracle";
  std::string out;
  std::string format;
  std::string config;
  std::string labels = "food";
};

struct OptionBinding {
  CLI::Option* model = nullptr;
  CLI::Option* cls = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* grid = nullptr;
  CLI::Option* method = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* labels = nullptr;
};

void apply_config(const Options& defaults, Options& opt, const OptionBinding& bind) {
  if (opt.config.empty()) return;
  std::ifstream is(opt.config);
  if (!is) throw CliError{kExitUsage, "cannot read config '" + opt.config + "'"};
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw CliError{kExitUsage, "config parse error: " + std::string(e.what())};
  }
  if (!j.is_object()) throw CliError{kExitUsage, "config must be a JSON object"};

  // Flags win on conflict: a config key applies only when the flag is absent.
  const auto unset = [](CLI::Option* o) { return o == nullptr || o->count() == 0; };
  try {
    if (j.contains("model") && unset(bind.model)) opt.model = j["model"].get<std::string>();
    if (j.contains("class") && unset(bind.cls)) opt.cls = j["class"].get<std::string>();
    if (j.contains("samples") && unset(bind.samples))
      opt.samples = j["samples"].get<std::uint64_t>();
    if (j.contains("seed") && unset(bind.seed)) opt.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("grid") && unset(bind.grid)) opt.grid = j["grid"].get<int>();
    if (j.contains("method") && unset(bind.method))
      opt.method = j["method"].get<std::string>();
    if (j.contains("out") && unset(bind.out)) opt.out = j["out"].get<std::string>();
    if (j.contains("format") && unset(bind.format))
      opt.format = j["format"].get<std::string>();
    if (j.contains("labels") && unset(bind.labels))
      opt.labels = j["labels"].get<std::string>();
  } catch (const json::exception& e) {
    throw CliError{kExitUsage, "config value error: " + std::string(e.what())};
  }

  const auto check = [](const std::string& value, std::initializer_list<const char*> allowed,
                        const char* what) {
    for (const char* a : allowed)
      if (value == a) return;
    throw CliError{kExitUsage, std::string("invalid ") + what + " '" + value + "'"};
  };
  check(opt.model, {"classical", "prequant", "quant", "all"}, "model");
  check(opt.cls, {"all", "intransitive", "transitive", "all-three"}, "class");
  check(opt.method, {"empirical", "oracle", "both"}, "method");
  check(opt.labels, {"food", "electoral"}, "labels");
  if (opt.samples < 1) throw CliError{kExitUsage, "samples must be >= 1"};
  if (opt.grid < 0) throw CliError{kExitUsage, "grid must be >= 1"};
  (void)defaults;
}

int grid_or_default(const Options& opt, CoverageMethod m) {
  if (opt.grid > 0) return opt.grid;
  return m == CoverageMethod::Oracle ? 256 : 100;
}

// ---------------------------------------------------------------------------

int cmd_sample(const Options& opt) {
  if (opt.model == "all")
    throw CliError{kExitUsage, "sample requires a single --model (rows have a fixed width)"};
  const std::string format = opt.format.empty() ? "csv" : opt.format;
  if (format != "csv" && format != "json")
    throw CliError{kExitUsage, "sample format must be csv or json"};

  const Model model = *parse_model(opt.model);
  const SampleBatch batch = sample_batch(model, opt.samples, opt.seed);
  const auto mapped = map_batch(batch);

  std::ostringstream os;
  if (format == "csv")
    write_csv(os, batch, mapped);
  else
    write_jsonl(os, batch, mapped);
  write_output(opt.out, os.str());
  return kExitOk;
}

int cmd_coverage(const Options& opt) {
  if (opt.cls == "all-three")
    throw CliError{kExitUsage, "coverage expects --class all|intransitive|transitive"};
  const ClassFilter cls = *parse_class_filter(opt.cls);

  json reports = json::array();
  for (Model m : expand_models(opt.model)) {
    if (opt.method == "oracle" || opt.method == "both") {
      const TriangleGrid grid(grid_or_default(opt, CoverageMethod::Oracle));
      reports.push_back(coverage_json(oracle_coverage(grid, m, cls)));
    }
    if (opt.method == "empirical" || opt.method == "both") {
      const TriangleGrid grid(grid_or_default(opt, CoverageMethod::Empirical));
      const SampleBatch batch = sample_batch(m, opt.samples, opt.seed);
      reports.push_back(coverage_json(empirical_coverage(batch, grid, cls, opt.seed)));
    }
  }
  write_output(opt.out, json{{"reports", reports}}.dump(2) + "\n");
  return kExitOk;
}

json witness_json(Model m, const ConditionalTriple& w) {
  json j{{"alpha", w.alpha}, {"beta", w.beta}, {"gamma", w.gamma}};
  switch (m) {
    case Model::Classical: {
      const ClassicalStrategy s = product_preimage(w);
      j["strategy"] = s.p;
      break;
    }
    case Model::Prequant: {
      const PrequantStrategy s = classical_embed(product_preimage(w));
      j["strategy"] = s.x;
      break;
    }
    case Model::Quant: {
      j["strategy"] = {2.0 * w.alpha - 1.0, 2.0 * w.beta - 1.0, 1.0 - 2.0 * w.gamma};
      break;
    }
  }
  return j;
}

int cmd_oracle(const Options& opt, double q0, double q1, double q2) {
  if (opt.cls == "all-three")
    throw CliError{kExitUsage, "oracle expects --class all|intransitive|transitive"};
  if (q0 < 0.0 || q1 < 0.0 || q2 < 0.0)
    throw CliError{kExitUsage, "frequencies must be nonnegative"};
  const double sum = q0 + q1 + q2;
  if (!(sum > 0.0) || std::fabs(sum - 1.0) > 1e-9)
    throw CliError{kExitUsage, "frequencies must sum to 1 (within 1e-9)"};
  const FrequencyTriple q{q0 / sum, q1 / sum, q2 / sum};
  const ClassFilter cls = *parse_class_filter(opt.cls);

  json verdicts = json::array();
  for (Model m : expand_models(opt.model)) {
    const Verdict v = model_feasible(m, q, cls);
    json j{{"model", std::string(model_name(m))},
           {"class", std::string(class_filter_name(cls))},
           {"q", {q.q0, q.q1, q.q2}},
           {"feasible", v.feasible}};
    if (v.feasible) {
      const ConditionalTriple& w = *v.witness;
      j["witness"] = witness_json(m, w);
      const OccupancyTriple om = occupancy(w, q);
      const double third = 1.0 / 3.0;
      json res{{"occupancy", std::max({std::fabs(om.w0 - third), std::fabs(om.w1 - third),
                                       std::fabs(om.w2 - third)})},
               {"class", std::string(class_name(classify(w)))}};
      if (m == Model::Quant) {
        const double x1 = 2.0 * w.alpha - 1.0;
        const double x2 = 2.0 * w.beta - 1.0;
        const double x3 = 1.0 - 2.0 * w.gamma;
        res["sphere"] = std::fabs(x1 * x1 + x2 * x2 + x3 * x3 - 1.0);
      }
      if (m == Model::Prequant) {
        const ConditionalTriple lifted = prequant_conditionals(
            classical_embed(product_preimage(w)));
        res["lift"] = std::max({std::fabs(lifted.alpha - w.alpha),
                                std::fabs(lifted.beta - w.beta),
                                std::fabs(lifted.gamma - w.gamma)});
      }
      j["residuals"] = res;
    }
    verdicts.push_back(j);
  }
  const json out = verdicts.size() == 1 ? verdicts[0] : json{{"verdicts", verdicts}};
  write_output(opt.out, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_figure(const Options& opt) {
  if (!opt.format.empty() && opt.format != "svg")
    throw CliError{kExitUsage, "figure format must be svg"};
  const std::vector<Model> models = expand_models(opt.model);
  const std::vector<ClassFilter> classes = expand_classes(opt.cls);
  const bool shade = opt.method == "oracle" || opt.method == "both";
  const bool scatter = opt.method == "empirical" || opt.method == "both";
  const int res = grid_or_default(opt, CoverageMethod::Empirical);
  const TriangleGrid grid(res);

  const std::string base = opt.out.empty() ? "figure.svg" : opt.out;
  const bool multi = models.size() > 1 || classes.size() > 1;

  for (Model m : models) {
    std::vector<MappedPoint> mapped;
    if (scatter) mapped = map_batch(sample_batch(m, opt.samples, opt.seed));
    for (ClassFilter cls : classes) {
      std::vector<FrequencyTriple> pts;
      if (scatter) {
        for (const MappedPoint& pt : mapped)
          if (pt.q && class_matches(cls, pt.cls)) pts.push_back(*pt.q);
      }
      std::vector<std::uint8_t> cells;
      if (shade) cells = oracle_feasible_cells(grid, m, cls);

      FigureOptions fig;
      fig.electoral_labels = opt.labels == "electoral";
      fig.title = std::string(model_name(m)) + " / " +
                  std::string(class_filter_name(cls)) + " optimal strategies";
      std::ostringstream os;
      write_figure_svg(os, shade ? &grid : nullptr, shade ? &cells : nullptr, pts, fig);

      std::string path = base;
      if (multi) {
        const std::size_t dot = path.rfind('.');
        const std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
        const std::string ext = dot == std::string::npos ? ".svg" : path.substr(dot);
        path = stem + "_" + std::string(model_name(m)) + "_" +
               std::string(class_filter_name(cls)) + ext;
      }
      write_output(path, os.str());
    }
  }
  return kExitOk;
}

int cmd_report(const Options& opt) {
  const int oracle_res = opt.grid > 0 ? opt.grid : 256;
  const int empirical_res = opt.grid > 0 ? opt.grid : 100;
  const Table2 t = table2_report(oracle_res, empirical_res, opt.samples, opt.seed);

  const auto row_json = [](const std::array<double, 3>& row) {
    return json{{"all", row[0]}, {"intransitive", row[1]}, {"transitive", row[2]}};
  };
  const auto delta_json = [&](const std::array<double, 3>& row,
                              const std::array<double, 3>& ref) {
    return json{{"all", row[0] - ref[0]},
                {"intransitive", row[1] - ref[1]},
                {"transitive", row[2] - ref[2]}};
  };

  json j{{"oracle_resolution", t.oracle_resolution},
         {"empirical_resolution", t.empirical_resolution},
         {"samples", t.samples},
         {"seed", t.seed},
         {"reference",
          {{"classical_prequant", row_json(kReferenceClassicalRow)},
           {"quant", row_json(kReferenceQuantRow)}}},
         {"oracle",
          {{"classical_prequant", row_json(t.oracle_classical)},
           {"quant", row_json(t.oracle_quant)}}},
         {"empirical",
          {{"classical", row_json(t.empirical_classical)},
           {"prequant", row_json(t.empirical_prequant)},
           {"quant", row_json(t.empirical_quant)}}},
         {"delta_vs_reference",
          {{"oracle_classical_prequant", delta_json(t.oracle_classical, kReferenceClassicalRow)},
           {"oracle_quant", delta_json(t.oracle_quant, kReferenceQuantRow)},
           {"empirical_classical", delta_json(t.empirical_classical, kReferenceClassicalRow)},
           {"empirical_quant", delta_json(t.empirical_quant, kReferenceQuantRow)}}},
         {"classical_prequant_max_delta", t.classical_prequant_delta}};

  std::ostringstream text;
  const auto pct = [](double v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%5.1f%%", 100.0 * v);
    return std::string(buf);
  };
  const auto row_text = [&](const std::string& label, const std::array<double, 3>& row) {
    text << "  " << label;
    for (std::size_t i = label.size(); i < 34; ++i) text << ' ';
    text << pct(row[0]) << "  " << pct(row[1]) << "  " << pct(row[2]) << '\n';
  };
  text << "Achievability of optimal strategies (fraction of the frequency triangle)\n";
  text << "                                       all    intrans  transitive\n";
  text << "reference values:\n";
  row_text("classical & prequantization", kReferenceClassicalRow);
  row_text("quantization", kReferenceQuantRow);
  text << "oracle (R=" << t.oracle_resolution << "):\n";
  row_text("classical & prequantization", t.oracle_classical);
  row_text("quantization", t.oracle_quant);
  text << "empirical (n=" << t.samples << ", R=" << t.empirical_resolution
       << ", seed=" << t.seed << "):\n";
  row_text("classical", t.empirical_classical);
  row_text("prequantization", t.empirical_prequant);
  row_text("quantization", t.empirical_quant);
  text << "max |classical - prequantization| (empirical): "
       << format_double(t.classical_prequant_delta) << '\n';

  std::cout << text.str();
  if (!std::cout) throw CliError{kExitIo, "write to stdout failed"};
  if (!opt.out.empty()) write_output(opt.out, j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cat's Dilemma simulator and analysis toolkit"};
  app.require_subcommand(1);

  Options opt;
  double q0 = 0, q1 = 0, q2 = 0;

  const auto add_common = [&](CLI::App* sub, bool with_method) {
    OptionBinding b;
    b.model = sub->add_option("--model", opt.model,
                              "classical | prequant | quant | all");
    b.model->check(CLI::IsMember({"classical", "prequant", "quant", "all"}));
    b.cls = sub->add_option("--class", opt.cls,
                            "all | intransitive | transitive | all-three");
    b.cls->check(CLI::IsMember({"all", "intransitive", "transitive", "all-three"}));
    b.samples = sub->add_option("--samples", opt.samples, "sample count")
                    ->check(CLI::PositiveNumber);
    b.seed = sub->add_option("--seed", opt.seed, "RNG seed");
    b.grid = sub->add_option("--grid", opt.grid, "triangle grid resolution")
                 ->check(CLI::PositiveNumber);
    if (with_method) {
      b.method = sub->add_option("--method", opt.method, "empirical | oracle | both");
      b.method->check(CLI::IsMember({"empirical", "oracle", "both"}));
    }
    b.out = sub->add_option("--out", opt.out, "output path ('-' for stdout)");
    b.format = sub->add_option("--format", opt.format, "csv | json | svg");
    b.format->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--config", opt.config, "JSON config file (flags win)");
    b.labels = sub->add_option("--labels", opt.labels, "food | electoral");
    b.labels->check(CLI::IsMember({"food", "electoral"}));
    return b;
  };

  CLI::App* sample = app.add_subcommand("sample", "sample strategies and map them");
  OptionBinding sample_b = add_common(sample, false);

  CLI::App* coverage = app.add_subcommand("coverage", "region coverage fractions");
  OptionBinding coverage_b = add_common(coverage, true);

  CLI::App* oracle = app.add_subcommand("oracle", "exact feasibility of one frequency triple");
  OptionBinding oracle_b = add_common(oracle, false);
  oracle->add_option("q0", q0, "frequency of the pair without food 0")->required();
  oracle->add_option("q1", q1, "frequency of the pair without food 1")->required();
  oracle->add_option("q2", q2, "frequency of the pair without food 2")->required();

  CLI::App* figure = app.add_subcommand("figure", "ternary SVG figures");
  OptionBinding figure_b = add_common(figure, true);

  CLI::App* report = app.add_subcommand("report", "achievability table vs reference values");
  OptionBinding report_b = add_common(report, false);

  // report defaults to the larger empirical run; figure defaults to both layers
  report->parse_complete_callback([&] {
    if (report_b.samples->count() == 0) opt.samples = 100000;
  });
  figure->parse_complete_callback([&] {
    if (figure_b.method->count() == 0) opt.method = "both";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sample->parsed()) {
      apply_config(Options{}, opt, sample_b);
      return cmd_sample(opt);
    }
    if (coverage->parsed()) {
      apply_config(Options{}, opt, coverage_b);
      return cmd_coverage(opt);
    }
    if (oracle->parsed()) {
      apply_config(Options{}, opt, oracle_b);
      return cmd_oracle(opt, q0, q1, q2);
    }
    if (figure->parsed()) {
      apply_config(Options{}, opt, figure_b);
      return cmd_figure(opt);
    }
    if (report->parsed()) {
      apply_config(Options{}, opt, report_b);
      return cmd_report(opt);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

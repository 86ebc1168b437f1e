// spirit: sparse-representation ISRF estimation toolkit, command-line front end.
//
// Subcommands:
//   synth     build a synthetic dataset bundle from templates + reference
//   dict      build an atom dictionary from training ISRFs
//   estimate  run estimation methods over a dataset bundle
//   sweep     experiment sweeps (k | snr | grid | scene) with resumable cells
//
// A single JSON config drives everything; command-line flags win over config
// values. Exit codes: 0 ok, 2 config error, 3 data-format error, 4 numerical
// failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spirit/core/template_set.hpp"
#include "spirit/eval/sweeps.hpp"
#include "spirit/forward/model.hpp"
#include "spirit/forward/noise.hpp"
#include "spirit/io/files.hpp"
#include "spirit/simd/kernels.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace spirit;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  int jobs = 0;
  bool resume = false;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> methods;
  std::vector<std::string> snr_db;
  std::optional<int> k;
  std::optional<int> n_obs;
  std::optional<int> n_d;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ConfigError, "cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::ConfigError, path + ": " + e.what());
  }
  return j;
}

double parse_snr_value(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      fail(Errc::ConfigError, "bad snr value '" + s + "'");
    }
  }
  return v.get<double>();
}

std::string snr_tag(double snr) {
  if (std::isinf(snr)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", snr);
  return buf;
}

WavelengthGrid grid_from_config(const json& cfg) {
  require(cfg.contains("grid"), Errc::ConfigError, "config needs a 'grid' section");
  const json& g = cfg.at("grid");
  const double delta = g.at("delta").get<double>();
  const int n_half = g.at("n_half").get<int>();
  std::vector<double> centers;
  if (g.at("centers").is_array()) {
    centers = g.at("centers").get<std::vector<double>>();
  } else {
    const json& c = g.at("centers");
    const double start = c.at("start").get<double>();
    const double step = c.at("step").get<double>();
    const int count = c.at("count").get<int>();
    require(count >= 1 && step > 0.0, Errc::ConfigError, "bad grid center range");
    centers.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) centers[static_cast<std::size_t>(i)] = start + i * step;
  }
  return WavelengthGrid(delta, n_half, std::move(centers));
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void write_manifest(const fs::path& out_dir, const std::string& command, const json& config,
                    std::uint64_t seed) {
  json m;
  m["tool"] = "spirit";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["config"] = config;
  m["seed"] = seed;
  m["rng"] = kNoiseRngName;
  m["kernels"] = simd::active_kernels().name;
  m["config_hash"] = fnv1a(config.dump());
  std::ofstream out(out_dir / "manifest.json", std::ios::binary);
  require(out.good(), Errc::ConfigError, "cannot write manifest");
  out << m.dump(2) << "\n";
}

std::vector<Isrf> isrfs_from_templates(const IsrfTemplateSet& set) {
  std::vector<Isrf> out;
  out.reserve(set.templates.size());
  for (const auto& t : set.templates) out.push_back(Isrf{t.values, t.center});
  return out;
}

// ---------------------------------------------------------------- synth --

int cmd_synth(const CommonFlags& flags) {
  const json cfg = load_config(flags.config_path);
  const json synth = cfg.value("synth", json::object());
  const WavelengthGrid grid = grid_from_config(cfg);

  const auto templates =
      io::read_template_set(cfg.at("templates_csv").get<std::string>(),
                            cfg.value("instrument", std::string{"unknown"}));
  const ReferenceSpectrum ref = io::read_reference(cfg.at("reference_csv").get<std::string>());

  std::uint64_t seed = synth.value("seed", std::uint64_t{0});
  if (flags.seed) seed = *flags.seed;
  std::vector<double> snr_list;
  if (!flags.snr_db.empty()) {
    for (const auto& s : flags.snr_db) snr_list.push_back(parse_snr_value(json(s)));
  } else if (synth.contains("snr_db")) {
    for (const auto& v : synth.at("snr_db")) snr_list.push_back(parse_snr_value(v));
  }

  InterpolationStats stats;
  const std::vector<Isrf> truth = interpolate_isrf_set(templates, grid, &stats);
  if (stats.clamped_negative_samples > 0)
    std::cerr << "note: clamped " << stats.clamped_negative_samples
              << " negative interpolation samples\n";

  MeasurementSet clean = convolve_forward(ref, truth, grid);
  clean.rng_name = kNoiseRngName;

  const fs::path out(flags.out_dir);
  fs::create_directories(out);
  io::write_grid((out / "grid.json").string(), grid);
  io::write_reference((out / "reference.csv").string(), ref);
  io::write_isrf_set((out / "truth_isrfs.csv").string(), truth, grid.offsets());
  io::write_measurement((out / "measurement_clean.csv").string(),
                        (out / "measurement_clean.json").string(), grid, clean);
  for (double snr : snr_list) {
    const MeasurementSet noisy = add_noise(clean, snr, seed);
    const std::string tag = "snr" + snr_tag(snr);
    io::write_measurement((out / ("measurement_" + tag + ".csv")).string(),
                          (out / ("measurement_" + tag + ".json")).string(), grid, noisy);
  }
  write_manifest(out, "synth", cfg, seed);
  std::cout << "synth: " << grid.n_centers() << " centers, " << grid.n_samples()
            << " samples, " << snr_list.size() << " noisy measurement sets -> "
            << out.string() << "\n";
  return 0;
}

// ----------------------------------------------------------------- dict --

int cmd_dict(const CommonFlags& flags) {
  const json cfg = load_config(flags.config_path);
  require(cfg.contains("dict"), Errc::ConfigError, "config needs a 'dict' section");
  const json& d = cfg.at("dict");

  const auto training_set =
      io::read_template_set(d.at("training_csv").get<std::string>(), "training");
  const std::vector<Isrf> uniform = isrfs_from_templates(training_set);

  std::vector<Isrf> scene;
  if (d.contains("scene_csv") && !d.at("scene_csv").is_null()) {
    const auto scene_set = io::read_template_set(d.at("scene_csv").get<std::string>(), "scene");
    scene = isrfs_from_templates(scene_set);
  }

  int n_d = d.value("n_d", 25);
  if (flags.n_d) n_d = *flags.n_d;
  const int stride = d.value("uniform_stride", 1);
  const auto method = parse_dictionary_method(d.value("method", std::string{"svd"}));
  KsvdOptions opts;
  opts.iters = d.value("iters", 20);
  opts.rel_improvement_stop = d.value("rel_improvement_stop", 1e-4);
  const int k_sparse = d.value("k_sparse", std::min(4, n_d));

  Dictionary dict = build_mixed(uniform, scene, stride, n_d, method, k_sparse, opts);
  dict.source = d.at("training_csv").get<std::string>();

  const fs::path out(flags.out_dir);
  fs::create_directories(out);
  io::write_dictionary((out / "dictionary.csv").string(), (out / "dictionary.json").string(),
                       dict);
  write_manifest(out, "dict", cfg, 0);

  std::cout << "dict: " << dictionary_method_name(dict.method) << ", " << dict.n_atoms
            << " atoms from " << dict.training_count << " training ISRFs\n";
  std::cout << "atom energies:";
  for (double s : dict.singular_values) std::cout << ' ' << io::format_double(s);
  std::cout << "\n";
  if (!dict.ksvd_objective.empty()) {
    std::cout << "ksvd objective:";
    for (double o : dict.ksvd_objective) std::cout << ' ' << io::format_double(o);
    std::cout << "\n";
  }
  return 0;
}

// ------------------------------------------------------------- datasets --

struct LoadedDataset {
  WavelengthGrid grid;
  ReferenceSpectrum ref;
  MeasurementSet measurement;
  std::vector<Isrf> truth;
};

LoadedDataset load_dataset(const std::string& dir, const std::string& measurement_tag) {
  const fs::path root(dir);
  WavelengthGrid grid = io::read_grid((root / "grid.json").string());
  ReferenceSpectrum ref = io::read_reference((root / "reference.csv").string());
  const std::string base = "measurement_" + measurement_tag;
  MeasurementSet meas = io::read_measurement((root / (base + ".csv")).string(),
                                             (root / (base + ".json")).string(), grid);
  std::vector<Isrf> truth;
  if (fs::exists(root / "truth_isrfs.csv"))
    truth = io::read_isrf_set((root / "truth_isrfs.csv").string(), grid);
  return {std::move(grid), std::move(ref), std::move(meas), std::move(truth)};
}

Dataset to_dataset(LoadedDataset&& ld) {
  // Synthetic bundles carry the interpolated template set, which doubles as
  // the parametric pilot (flagged in the result config as pilot=template).
  std::vector<Isrf> pilots = ld.truth;
  return Dataset{std::move(ld.grid), std::move(ld.ref), std::move(ld.measurement),
                 std::move(ld.truth), std::move(pilots)};
}

std::vector<Method> methods_from(const CommonFlags& flags, const json& section) {
  std::vector<std::string> names = flags.methods;
  if (names.empty() && section.contains("methods"))
    names = section.at("methods").get<std::vector<std::string>>();
  require(!names.empty(), Errc::ConfigError, "no estimation methods selected");
  std::vector<Method> methods;
  methods.reserve(names.size());
  for (const auto& n : names) methods.push_back(parse_method(n));
  return methods;
}

// ------------------------------------------------------------- estimate --

int cmd_estimate(const CommonFlags& flags) {
  const json cfg = load_config(flags.config_path);
  require(cfg.contains("estimate"), Errc::ConfigError, "config needs an 'estimate' section");
  const json& e = cfg.at("estimate");

  const std::vector<Method> methods = methods_from(flags, e);
  Dataset dataset =
      to_dataset(load_dataset(e.at("dataset_dir").get<std::string>(),
                              e.value("measurement", std::string{"clean"})));

  EstimateOptions opts;
  opts.k = flags.k.value_or(e.value("k", 4));
  opts.n_obs = flags.n_obs.value_or(e.value("n_obs", 80));
  opts.jobs = flags.jobs;

  std::optional<Dictionary> dict;
  bool any_sparse = false;
  for (Method m : methods) any_sparse = any_sparse || method_is_sparse(m);
  if (any_sparse) {
    require(e.contains("dictionary"), Errc::ConfigError,
            "sparse methods need estimate.dictionary");
    const std::string base = e.at("dictionary").get<std::string>();
    dict = io::read_dictionary(base + ".csv", base + ".json");
  }

  if (opts.n_obs + 1 < dataset.grid.n_samples())
    std::cerr << "note: window has fewer observations (" << opts.n_obs + 1
              << ") than ISRF samples (" << dataset.grid.n_samples()
              << "); sample-space problem is underdetermined, dictionary coefficients are not\n";

  const fs::path out(flags.out_dir);
  fs::create_directories(out);
  for (Method method : methods) {
    const EstimationResult result =
        estimate_all(dataset, method, dict ? &*dict : nullptr, opts);
    const std::string name = method_name(method);
    io::write_estimation_result((out / ("result_" + name + ".csv")).string(),
                                (out / ("result_" + name + ".json")).string(), result);
    char pct[32];
    std::snprintf(pct, sizeof(pct), "%.4g%%", result.mean_error * 100.0);
    std::cout << name << ": mean E = " << pct << (result.has_truth ? "" : " (no truth)")
              << ", rho = " << io::format_double(result.rho) << ", windows "
              << result.entries.size() << "\n";
  }
  write_manifest(out, "estimate", cfg, 0);
  return 0;
}

// ---------------------------------------------------------------- sweep --

// Sweeps persist one CSV fragment per cell under <out>/cells/. A cell that
// already exists is skipped when --resume is set; the final table is always
// reassembled from the fragments in deterministic order.
class CellStore {
 public:
  CellStore(fs::path dir, bool resume) : dir_(std::move(dir)), resume_(resume) {
    fs::create_directories(dir_);
  }

  template <typename Compute>
  std::string rows(const std::string& cell_name, Compute&& compute) {
    const fs::path file = dir_ / (cell_name + ".csv");
    if (resume_ && fs::exists(file)) {
      std::ifstream in(file);
      require(in.good(), Errc::DataFormat, "cannot read cell " + file.string());
      std::string content((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
      return content;
    }
    const std::string content = compute();
    std::ofstream out(file, std::ios::binary);
    require(out.good(), Errc::DataFormat, "cannot write cell " + file.string());
    out << content;
    return content;
  }

 private:
  fs::path dir_;
  bool resume_;
};

void write_table(const fs::path& path, const std::string& header,
                 const std::vector<std::string>& fragments) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::DataFormat, "cannot write " + path.string());
  out << header << '\n';
  for (const auto& f : fragments) out << f;
}

int cmd_sweep(const CommonFlags& flags, const std::string& sweep_type_flag) {
  const json cfg = load_config(flags.config_path);
  require(cfg.contains("sweep"), Errc::ConfigError, "config needs a 'sweep' section");
  const json& sw = cfg.at("sweep");
  const std::string type = !sweep_type_flag.empty()
                               ? sweep_type_flag
                               : sw.value("type", std::string{});

  const fs::path out(flags.out_dir);
  fs::create_directories(out);
  CellStore cells(out / "cells", flags.resume);

  EstimateOptions opts;
  opts.k = flags.k.value_or(sw.value("k", 4));
  opts.n_obs = flags.n_obs.value_or(sw.value("n_obs", 80));
  opts.jobs = flags.jobs;
  std::uint64_t seed = sw.value("seed", std::uint64_t{0});
  if (flags.seed) seed = *flags.seed;

  auto load_sweep_dataset = [&]() {
    return to_dataset(load_dataset(sw.at("dataset_dir").get<std::string>(),
                                   sw.value("measurement", std::string{"clean"})));
  };
  auto load_sweep_dictionary = [&](const std::vector<Method>& methods) {
    std::optional<Dictionary> dict;
    for (Method m : methods) {
      if (method_is_sparse(m)) {
        require(sw.contains("dictionary"), Errc::ConfigError,
                "sparse methods need sweep.dictionary");
        const std::string base = sw.at("dictionary").get<std::string>();
        dict = io::read_dictionary(base + ".csv", base + ".json");
        break;
      }
    }
    return dict;
  };

  if (type == "k") {
    const std::vector<Method> methods = methods_from(flags, sw);
    const Dataset dataset = load_sweep_dataset();
    const auto dict = load_sweep_dictionary(methods);
    const int k_min = sw.value("k_min", 1);
    const int k_max = sw.value("k_max", 8);
    std::vector<std::string> fragments;
    for (Method method : methods) {
      KSweepTable table;
      table.method = method;
      for (int k = k_min; k <= k_max; ++k) {
        const std::string frag = cells.rows(
            std::string("k_") + method_name(method) + "_" + std::to_string(k), [&] {
              EstimateOptions o = opts;
              o.k = k;
              const EstimationResult r =
                  estimate_all(dataset, method, dict ? &*dict : nullptr, o);
              return std::string(method_name(method)) + "," + std::to_string(k) + "," +
                     io::format_double(r.mean_error) + "," + io::format_double(r.rho) + "\n";
            });
        // parse mean_e back out of the fragment for the best-k column
        const auto fields = [&] {
          std::vector<std::string> v;
          std::size_t start = 0;
          for (std::size_t i = 0; i <= frag.size(); ++i)
            if (i == frag.size() || frag[i] == ',' || frag[i] == '\n') {
              v.push_back(frag.substr(start, i - start));
              start = i + 1;
            }
          return v;
        }();
        table.rows.push_back({k, std::stod(fields.at(2)), std::stod(fields.at(3))});
      }
      table.best_k = table.rows.front().k;
      double best = table.rows.front().mean_error;
      for (const auto& row : table.rows)
        if (row.mean_error < best) {
          best = row.mean_error;
          table.best_k = row.k;
        }
      for (const auto& row : table.rows)
        fragments.push_back(std::string(method_name(method)) + "," + std::to_string(row.k) +
                            "," + io::format_double(row.mean_error) + "," +
                            io::format_double(row.rho) + "," +
                            (row.k == table.best_k ? "1" : "0") + "\n");
    }
    write_table(out / "sweep_k.csv", "method,k,mean_e,rho,best", fragments);
  } else if (type == "snr") {
    const std::vector<Method> methods = methods_from(flags, sw);
    const Dataset dataset = load_sweep_dataset();
    const auto dict = load_sweep_dictionary(methods);
    std::vector<double> snr_list;
    if (!flags.snr_db.empty())
      for (const auto& s : flags.snr_db) snr_list.push_back(parse_snr_value(json(s)));
    else
      for (const auto& v : sw.at("snr_db")) snr_list.push_back(parse_snr_value(v));
    const int n_seeds = sw.value("seeds", 5);

    std::vector<std::string> fragments;
    for (Method method : methods) {
      for (double snr : snr_list) {
        fragments.push_back(cells.rows(
            std::string("snr_") + method_name(method) + "_" + snr_tag(snr), [&] {
              const SnrSweepTable t = sweep_snr(dataset, {method}, dict ? &*dict : nullptr,
                                                {snr}, n_seeds, seed, opts);
              const auto& c = t.cells.front();
              return std::string(method_name(method)) + "," +
                     (std::isinf(snr) ? "inf" : io::format_double(snr)) + "," +
                     io::format_double(c.mean_error) + "," + io::format_double(c.rho) + "," +
                     (c.below_one_percent ? "1" : "0") + "," + std::to_string(t.n_seeds) +
                     "\n";
            }));
      }
    }
    write_table(out / "sweep_snr.csv", "method,snr_db,mean_e,rho,below_1pct,n_seeds",
                fragments);
  } else if (type == "grid") {
    const std::vector<Method> methods = methods_from(flags, sw);
    const Dataset dataset = load_sweep_dataset();
    const auto n_obs_list = sw.at("n_obs_list").get<std::vector<int>>();
    const auto n_d_list = sw.at("n_d_list").get<std::vector<int>>();
    const auto dict_method =
        parse_dictionary_method(sw.value("dict_method", std::string{"svd"}));
    std::vector<Isrf> training;
    bool any_sparse = false;
    for (Method m : methods) any_sparse = any_sparse || method_is_sparse(m);
    if (any_sparse) {
      require(sw.contains("training_csv"), Errc::ConfigError,
              "grid sweep needs sweep.training_csv for sparse methods");
      training = isrfs_from_templates(
          io::read_template_set(sw.at("training_csv").get<std::string>(), "training"));
    }

    std::vector<std::string> fragments;
    for (Method method : methods) {
      const std::string cell_name = std::string("grid_") + method_name(method);
      fragments.push_back(cells.rows(cell_name, [&] {
        GridSweepTable t =
            sweep_grid(dataset, {method}, n_obs_list, n_d_list, opts.k, training, dict_method,
                       opts);
        std::string rows;
        for (const auto& c : t.cells)
          rows += std::string(method_name(c.method)) + "," + std::to_string(c.n_obs) + "," +
                  std::to_string(c.n_d) + "," + io::format_double(c.mean_error) + "," +
                  io::format_double(c.log10_mean_error) + "\n";
        return rows;
      }));
    }
    write_table(out / "sweep_grid.csv", "method,n_obs,n_d,mean_e,log10_mean_e", fragments);
  } else if (type == "scene") {
    require(sw.contains("scene"), Errc::ConfigError, "scene sweep needs a sweep.scene section");
    const json& sc = sw.at("scene");
    const WavelengthGrid grid = grid_from_config(cfg);
    const ReferenceSpectrum ref =
        io::read_reference(cfg.at("reference_csv").get<std::string>());
    const std::vector<Isrf> uniform =
        io::read_isrf_set(sc.at("uniform_isrf_csv").get<std::string>(), grid);

    std::vector<SceneSet> sets;
    for (const auto& s : sc.at("sets")) {
      SceneSet set;
      set.scene_id = s.at("scene").get<std::string>();
      set.fov = s.at("fov").get<int>();
      set.isrfs = io::read_isrf_set(s.at("isrf_csv").get<std::string>(), grid);
      sets.push_back(std::move(set));
    }

    SceneStudyOptions so;
    so.uniform_stride = sc.value("stride", 10);
    so.n_d = flags.n_d.value_or(sc.value("n_d", 25));
    so.k_list = sc.value("k_list", std::vector<int>{1, 2, 3, 4, 5, 6});
    so.snr_db = sc.contains("snr_db") ? parse_snr_value(sc.at("snr_db"))
                                      : std::numeric_limits<double>::infinity();
    so.seed = seed;
    so.estimate = opts;
    for (const auto& pick : sc.at("training_picks"))
      so.scene_training_picks.emplace_back(pick.at(0).get<int>(), pick.at(1).get<int>());

    const std::string frag = cells.rows("scene_all", [&] {
      const SceneStudyTable t = scene_study(uniform, sets, grid, ref, so);
      std::string rows;
      for (const auto& r : t.rows)
        rows += r.dict_kind + "," + r.scene_id + "," + std::to_string(r.fov) + "," +
                std::to_string(r.k) + "," + io::format_double(r.mean_error) + "," +
                io::format_double(r.max_error) + "\n";
      return rows;
    });
    write_table(out / "sweep_scene.csv", "dictionary,scene,fov,k,mean_e,max_e", {frag});
  } else {
    fail(Errc::ConfigError, "unknown sweep type '" + type + "' (k|snr|grid|scene)");
  }

  write_manifest(out, "sweep:" + type, cfg, seed);
  std::cout << "sweep " << type << " -> " << out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse-representation ISRF estimation toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string sweep_type;

  auto add_common = [&](CLI::App* cmd, bool needs_out) {
    cmd->add_option("-c,--config", flags.config_path, "JSON config file")->required();
    auto* out = cmd->add_option("-o,--out", flags.out_dir, "output directory");
    if (needs_out) out->required();
    cmd->add_option("-j,--jobs", flags.jobs, "worker thread limit (0 = all cores)");
    cmd->add_option("--seed", flags.seed, "noise seed override");
    cmd->add_option("--method", flags.methods, "estimation method (repeatable)");
    cmd->add_option("--snr-db", flags.snr_db, "SNR list override (dB, 'inf' allowed)");
    cmd->add_option("--k", flags.k, "atoms per window");
    cmd->add_option("--n-obs", flags.n_obs, "window size minus one (even)");
    cmd->add_option("--n-d", flags.n_d, "dictionary size");
  };

  CLI::App* synth = app.add_subcommand("synth", "build a synthetic dataset bundle");
  add_common(synth, true);
  CLI::App* dict = app.add_subcommand("dict", "build an atom dictionary");
  add_common(dict, true);
  CLI::App* estimate = app.add_subcommand("estimate", "estimate ISRFs over a dataset");
  add_common(estimate, true);
  CLI::App* sweep = app.add_subcommand("sweep", "run an experiment sweep");
  add_common(sweep, true);
  sweep->add_option("--sweep", sweep_type, "sweep type: k|snr|grid|scene");
  sweep->add_flag("--resume", flags.resume, "skip already-computed cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (synth->parsed()) return cmd_synth(flags);
    if (dict->parsed()) return cmd_dict(flags);
    if (estimate->parsed()) return cmd_estimate(flags);
    if (sweep->parsed()) return cmd_sweep(flags, sweep_type);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ConfigError: return 2;
      case Errc::DataFormat: return 3;
      default: return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

#include "spirit/io/files.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace spirit::io {

using nlohmann::json;

namespace {

std::string format_snr(double snr_db) {
  if (std::isinf(snr_db)) return "inf";
  return format_double(snr_db);
}

double parse_snr(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && p == s.data() + s.size(), Errc::DataFormat,
          "bad snr value '" + s + "'");
  return v;
}

[[noreturn]] void format_error(const std::string& path, std::size_t line,
                               const std::string& what) {
  fail(Errc::DataFormat, path + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::DataFormat, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: byte-identical across runs
  require(out.good(), Errc::DataFormat, "cannot open '" + path + "' for writing");
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r')
    fields.back().pop_back();
  return fields;
}

double parse_field(const std::string& field, const std::string& path, std::size_t line) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || p != field.data() + field.size())
    format_error(path, line, "expected a number, got '" + field + "'");
  return v;
}

json read_json_file(const std::string& path) {
  std::ifstream in = open_in(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::DataFormat, path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out = open_out(path);
  out << j.dump(2) << "\n";
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

IsrfTemplateSet read_template_set(const std::string& path, const std::string& instrument_id) {
  std::ifstream in = open_in(path);
  std::string line;
  std::size_t line_no = 1;
  require(static_cast<bool>(std::getline(in, line)), Errc::DataFormat, path + ": empty file");
  auto header = split_csv(line);
  if (header.size() != 3 || header[0] != "center_nm" || header[1] != "offset_nm" ||
      header[2] != "value")
    format_error(path, line_no, "expected header 'center_nm,offset_nm,value'");

  IsrfTemplateSet set;
  set.instrument_id = instrument_id;
  bool have_center = false;
  double current_center = 0.0;
  IsrfTemplate tpl;
  auto flush = [&] {
    if (have_center) {
      tpl.center = current_center;
      set.templates.push_back(std::move(tpl));
      tpl = IsrfTemplate{};
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() != 3) format_error(path, line_no, "expected 3 fields");
    const double center = parse_field(fields[0], path, line_no);
    const double offset = parse_field(fields[1], path, line_no);
    const double value = parse_field(fields[2], path, line_no);
    if (!have_center || center != current_center) {
      flush();
      current_center = center;
      have_center = true;
    }
    if (!tpl.offsets.empty() && offset <= tpl.offsets.back())
      format_error(path, line_no, "offsets must be strictly increasing within a group");
    tpl.offsets.push_back(offset);
    tpl.values.push_back(value);
  }
  flush();
  require(!set.templates.empty(), Errc::DataFormat, path + ": no template rows");
  return set;
}

void write_isrf_set(const std::string& path, const std::vector<Isrf>& isrfs,
                    const std::vector<double>& offsets) {
  std::ofstream out = open_out(path);
  out << "center_nm,offset_nm,value\n";
  for (const Isrf& isrf : isrfs) {
    require(isrf.values.size() == offsets.size(), Errc::ConfigError,
            "ISRF sample count does not match offsets");
    const std::string center = format_double(isrf.center);
    for (std::size_t i = 0; i < offsets.size(); ++i)
      out << center << ',' << format_double(offsets[i]) << ',' << format_double(isrf.values[i])
          << '\n';
  }
}

std::vector<Isrf> read_isrf_set(const std::string& path, const WavelengthGrid& grid) {
  IsrfTemplateSet set = read_template_set(path, "");
  require(static_cast<int>(set.templates.size()) == grid.n_centers(), Errc::DataFormat,
          path + ": ISRF count does not match the grid");
  std::vector<Isrf> isrfs;
  isrfs.reserve(set.templates.size());
  for (int l = 0; l < grid.n_centers(); ++l) {
    auto& tpl = set.templates[static_cast<std::size_t>(l)];
    require(std::fabs(tpl.center - grid.center(l)) <= 1e-9, Errc::DataFormat,
            path + ": ISRF centers do not match the grid");
    require(static_cast<int>(tpl.offsets.size()) == grid.n_samples(), Errc::DataFormat,
            path + ": ISRF offsets do not match the grid");
    for (int i = 0; i < grid.n_samples(); ++i)
      require(std::fabs(tpl.offsets[static_cast<std::size_t>(i)] - grid.offset(i)) <= 1e-9,
              Errc::DataFormat, path + ": ISRF offsets do not match the grid");
    isrfs.push_back(Isrf{std::move(tpl.values), tpl.center});
  }
  return isrfs;
}

ReferenceSpectrum read_reference(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  std::size_t line_no = 1;
  require(static_cast<bool>(std::getline(in, line)), Errc::DataFormat, path + ": empty file");
  auto header = split_csv(line);
  if (header.size() != 2 || header[0] != "wavelength_nm" || header[1] != "radiance")
    format_error(path, line_no, "expected header 'wavelength_nm,radiance'");

  std::vector<std::pair<double, double>> knots;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() != 2) format_error(path, line_no, "expected 2 fields");
    knots.emplace_back(parse_field(fields[0], path, line_no),
                       parse_field(fields[1], path, line_no));
  }
  require(knots.size() >= 4, Errc::DataFormat, path + ": need at least 4 spectrum samples");
  return ReferenceSpectrum(std::move(knots));
}

void write_reference(const std::string& path, const ReferenceSpectrum& ref) {
  std::ofstream out = open_out(path);
  out << "wavelength_nm,radiance\n";
  for (const auto& [x, y] : ref.knots())
    out << format_double(x) << ',' << format_double(y) << '\n';
}

void write_measurement(const std::string& csv_path, const std::string& json_path,
                       const WavelengthGrid& grid, const MeasurementSet& meas) {
  require(static_cast<int>(meas.values.size()) == grid.n_centers(), Errc::ConfigError,
          "measurement length does not match the grid");
  std::ofstream out = open_out(csv_path);
  out << "lambda_nm,value,valid\n";
  for (int l = 0; l < grid.n_centers(); ++l) {
    const bool valid = meas.valid.empty() || meas.valid[static_cast<std::size_t>(l)] != 0;
    out << format_double(grid.center(l)) << ','
        << format_double(meas.values[static_cast<std::size_t>(l)]) << ',' << (valid ? 1 : 0)
        << '\n';
  }

  json sidecar;
  sidecar["snr_db"] = format_snr(meas.snr_db);
  sidecar["sigma"] = meas.sigma;
  sidecar["seed"] = meas.seed;
  sidecar["rng"] = meas.rng_name;
  write_json_file(json_path, sidecar);
}

MeasurementSet read_measurement(const std::string& csv_path, const std::string& json_path,
                                const WavelengthGrid& grid) {
  std::ifstream in = open_in(csv_path);
  std::string line;
  std::size_t line_no = 1;
  require(static_cast<bool>(std::getline(in, line)), Errc::DataFormat,
          csv_path + ": empty file");
  auto header = split_csv(line);
  if (header.size() != 3 || header[0] != "lambda_nm" || header[1] != "value" ||
      header[2] != "valid")
    format_error(csv_path, line_no, "expected header 'lambda_nm,value,valid'");

  MeasurementSet meas;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() != 3) format_error(csv_path, line_no, "expected 3 fields");
    const double lambda = parse_field(fields[0], csv_path, line_no);
    const std::size_t idx = meas.values.size();
    if (idx >= static_cast<std::size_t>(grid.n_centers()))
      format_error(csv_path, line_no, "more rows than grid centers");
    if (std::fabs(lambda - grid.center(static_cast<int>(idx))) > 1e-9)
      format_error(csv_path, line_no, "lambda does not match the grid center");
    meas.values.push_back(parse_field(fields[1], csv_path, line_no));
    meas.valid.push_back(parse_field(fields[2], csv_path, line_no) != 0.0 ? 1 : 0);
  }
  require(static_cast<int>(meas.values.size()) == grid.n_centers(), Errc::DataFormat,
          csv_path + ": row count does not match the grid");

  const json sidecar = read_json_file(json_path);
  try {
    meas.snr_db = parse_snr(sidecar.at("snr_db").get<std::string>());
    meas.sigma = sidecar.at("sigma").get<double>();
    meas.seed = sidecar.at("seed").get<std::uint64_t>();
    meas.rng_name = sidecar.at("rng").get<std::string>();
  } catch (const json::exception& e) {
    fail(Errc::DataFormat, json_path + ": " + e.what());
  }
  return meas;
}

void write_dictionary(const std::string& csv_path, const std::string& json_path,
                      const Dictionary& dict) {
  std::ofstream out = open_out(csv_path);
  for (std::size_t r = 0; r < dict.atoms.rows(); ++r) {
    for (std::size_t c = 0; c < dict.atoms.cols(); ++c) {
      if (c != 0) out << ',';
      out << format_double(dict.atoms(r, c));
    }
    out << '\n';
  }

  json meta;
  meta["method"] = dictionary_method_name(dict.method);
  meta["n_d"] = dict.n_atoms;
  meta["n_samples"] = dict.atoms.rows();
  meta["training_count"] = dict.training_count;
  meta["uniform_count"] = dict.uniform_count;
  meta["scene_count"] = dict.scene_count;
  meta["uniform_stride"] = dict.uniform_stride;
  meta["k_sparse"] = dict.ksvd_k_sparse;
  meta["iters"] = dict.ksvd_iters;
  meta["singular_values"] = dict.singular_values;
  meta["objective"] = dict.ksvd_objective;
  meta["source"] = dict.source;
  write_json_file(json_path, meta);
}

Dictionary read_dictionary(const std::string& csv_path, const std::string& json_path) {
  std::ifstream in = open_in(csv_path);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_field(f, csv_path, line_no));
    if (!rows.empty() && row.size() != rows.front().size())
      format_error(csv_path, line_no, "ragged matrix row");
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), Errc::DataFormat, csv_path + ": empty dictionary");

  Dictionary dict;
  dict.atoms = Matrix(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.front().size(); ++c) dict.atoms(r, c) = rows[r][c];

  const json meta = read_json_file(json_path);
  try {
    dict.method = parse_dictionary_method(meta.at("method").get<std::string>());
    dict.n_atoms = meta.at("n_d").get<int>();
    dict.training_count = meta.value("training_count", 0);
    dict.uniform_count = meta.value("uniform_count", 0);
    dict.scene_count = meta.value("scene_count", 0);
    dict.uniform_stride = meta.value("uniform_stride", 1);
    dict.ksvd_k_sparse = meta.value("k_sparse", 0);
    dict.ksvd_iters = meta.value("iters", 0);
    dict.singular_values = meta.value("singular_values", std::vector<double>{});
    dict.ksvd_objective = meta.value("objective", std::vector<double>{});
    dict.source = meta.value("source", std::string{});
  } catch (const json::exception& e) {
    fail(Errc::DataFormat, json_path + ": " + e.what());
  }
  require(dict.n_atoms == static_cast<int>(dict.atoms.cols()), Errc::DataFormat,
          json_path + ": n_d does not match the matrix");
  return dict;
}

void write_grid(const std::string& path, const WavelengthGrid& grid) {
  json j;
  j["delta"] = grid.delta();
  j["n_half"] = grid.n_half();
  j["centers"] = grid.centers();
  write_json_file(path, j);
}

WavelengthGrid read_grid(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return WavelengthGrid(j.at("delta").get<double>(), j.at("n_half").get<int>(),
                          j.at("centers").get<std::vector<double>>());
  } catch (const json::exception& e) {
    fail(Errc::DataFormat, path + ": " + e.what());
  }
}

void write_estimation_result(const std::string& csv_path, const std::string& json_path,
                             const EstimationResult& result) {
  std::ofstream out = open_out(csv_path);
  out << "method,index,lambda_nm,e,residual_sq,k\n";
  for (const auto& e : result.entries) {
    const int k = e.code ? e.code->k() : 0;
    out << method_name(result.method) << ',' << e.index << ',' << format_double(e.center) << ','
        << (result.has_truth ? format_double(e.error) : "") << ','
        << format_double(e.residual_sq) << ',' << k << '\n';
  }

  json j;
  j["method"] = method_name(result.method);
  j["first"] = result.first;
  j["last"] = result.last;
  j["mean_e"] = result.mean_error;
  j["rho"] = result.rho;
  j["has_truth"] = result.has_truth;
  j["k"] = result.k;
  j["n_obs"] = result.n_obs;
  j["n_d"] = result.n_atoms;
  json per_l = json::array();
  for (const auto& e : result.entries) {
    json entry;
    entry["index"] = e.index;
    entry["lambda_nm"] = e.center;
    entry["residual_sq"] = e.residual_sq;
    if (result.has_truth) entry["e"] = e.error;
    if (e.code) {
      entry["support"] = e.code->support;
      entry["coefficients"] = e.code->coefficients;
      entry["residual_norm"] = e.code->residual_norm;
      if (e.code->rank_deficient) entry["rank_deficient"] = true;
      if (e.code->target_k_missed) entry["target_k_missed"] = true;
    }
    if (e.gauss) {
      entry["gauss"] = {{"amplitude", e.gauss->amplitude},
                        {"mu", e.gauss->mu},
                        {"sigma2", e.gauss->sigma2}};
      entry["fit_iterations"] = e.fit_iterations;
      entry["fit_converged"] = e.fit_converged;
    }
    if (e.supergauss) {
      entry["supergauss"] = {{"amplitude", e.supergauss->amplitude},
                             {"mu", e.supergauss->mu},
                             {"w", e.supergauss->w},
                             {"k", e.supergauss->k}};
      entry["fit_iterations"] = e.fit_iterations;
      entry["fit_converged"] = e.fit_converged;
    }
    per_l.push_back(std::move(entry));
  }
  j["per_wavelength"] = std::move(per_l);
  write_json_file(json_path, j);
}

void write_k_sweep(const std::string& path, const KSweepTable& table) {
  std::ofstream out = open_out(path);
  out << "method,k,mean_e,rho,best\n";
  for (const auto& row : table.rows)
    out << method_name(table.method) << ',' << row.k << ',' << format_double(row.mean_error)
        << ',' << format_double(row.rho) << ',' << (row.k == table.best_k ? 1 : 0) << '\n';
}

void write_snr_sweep(const std::string& path, const SnrSweepTable& table) {
  std::ofstream out = open_out(path);
  out << "method,snr_db,mean_e,rho,below_1pct,n_seeds\n";
  for (const auto& cell : table.cells)
    out << method_name(cell.method) << ',' << format_snr(cell.snr_db) << ','
        << format_double(cell.mean_error) << ',' << format_double(cell.rho) << ','
        << (cell.below_one_percent ? 1 : 0) << ',' << table.n_seeds << '\n';
}

void write_grid_sweep(const std::string& path, const GridSweepTable& table) {
  std::ofstream out = open_out(path);
  out << "method,n_obs,n_d,mean_e,log10_mean_e\n";
  for (const auto& cell : table.cells)
    out << method_name(cell.method) << ',' << cell.n_obs << ',' << cell.n_d << ','
        << format_double(cell.mean_error) << ',' << format_double(cell.log10_mean_error)
        << '\n';
}

void write_scene_study(const std::string& path, const SceneStudyTable& table) {
  std::ofstream out = open_out(path);
  out << "dictionary,scene,fov,k,mean_e,max_e\n";
  for (const auto& row : table.rows)
    out << row.dict_kind << ',' << row.scene_id << ',' << row.fov << ',' << row.k << ','
        << format_double(row.mean_error) << ',' << format_double(row.max_error) << '\n';
}

}  // namespace spirit::io

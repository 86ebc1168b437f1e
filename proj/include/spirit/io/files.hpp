#pragma once

#include <string>
#include <vector>

#include "spirit/core/grid.hpp"
#include "spirit/core/template_set.hpp"
#include "spirit/dictionary/dictionary.hpp"
#include "spirit/eval/estimate.hpp"
#include "spirit/eval/sweeps.hpp"
#include "spirit/forward/measurement.hpp"

namespace spirit::io {

/// Shortest round-trip decimal formatting used for every numeric CSV field;
/// output is deterministic for identical doubles.
std::string format_double(double v);

// ISRF sets and templates share one format:
// header `center_nm,offset_nm,value`, rows grouped by center.
IsrfTemplateSet read_template_set(const std::string& path, const std::string& instrument_id);
void write_isrf_set(const std::string& path, const std::vector<Isrf>& isrfs,
                    const std::vector<double>& offsets);

/// Interpret a template-format file as a dense ISRF set on `grid`: centers
/// and offsets must match the grid (DataFormat otherwise).
std::vector<Isrf> read_isrf_set(const std::string& path, const WavelengthGrid& grid);

// Reference spectrum: header `wavelength_nm,radiance`.
ReferenceSpectrum read_reference(const std::string& path);
void write_reference(const std::string& path, const ReferenceSpectrum& ref);

// Measurements: `lambda_nm,value,valid` CSV plus a JSON sidecar with
// {snr_db, sigma, seed, rng}.
void write_measurement(const std::string& csv_path, const std::string& json_path,
                       const WavelengthGrid& grid, const MeasurementSet& meas);
MeasurementSet read_measurement(const std::string& csv_path, const std::string& json_path,
                                const WavelengthGrid& grid);

// Dictionary: plain CSV matrix (rows = offset samples, columns = atoms) plus
// JSON metadata.
void write_dictionary(const std::string& csv_path, const std::string& json_path,
                      const Dictionary& dict);
Dictionary read_dictionary(const std::string& csv_path, const std::string& json_path);

// Grid parameters as JSON ({delta, n_half, centers}).
void write_grid(const std::string& path, const WavelengthGrid& grid);
WavelengthGrid read_grid(const std::string& path);

// Estimation results: per-wavelength CSV plus a JSON document carrying the
// aggregates and the sparse codes / fitted parameters.
void write_estimation_result(const std::string& csv_path, const std::string& json_path,
                             const EstimationResult& result);

// Sweep tables, one CSV each, matching the figure/table axes.
void write_k_sweep(const std::string& path, const KSweepTable& table);
void write_snr_sweep(const std::string& path, const SnrSweepTable& table);
void write_grid_sweep(const std::string& path, const GridSweepTable& table);
void write_scene_study(const std::string& path, const SceneStudyTable& table);

}  // namespace spirit::io

#pragma once

#include <string>
#include <vector>

#include "sloq/errors.hpp"
#include "sloq/field.hpp"
#include "sloq/filters.hpp"
#include "sloq/propagation.hpp"

namespace sloq {

struct SeedConfig {
  double sigma = 3.0;        // duration, units 1/omega0
  double tau_ratio = 2.0;    // delay as tau / sigma
  double omega0 = 1.0;       // carrier frequency
  double ramp_fraction = 0.1;
};

struct FilterConfig {
  std::string type = "fp";        // "fp" or "pbg"
  double reflectance = 0.9;       // fp mirror power reflectance
  double phi_at_omega0 = kPi;     // fp round-trip phase target; d derived
  double n1 = 1.0;                // pbg layer indices
  double n2 = 2.0;
  int layers = 10;
  std::size_t train_terms = 1024;  // pbg Fourier sampling size
};

struct GridConfig {
  std::size_t samples = 1u << 15;
  double span_sigmas = 10.0;  // half-window padding beyond tau, in sigmas
};

struct ToleranceConfig {
  double train_tol = 1e-6;          // fp delta-train truncation
  double bandgap_coeff_tol = 1e-8;  // pbg coefficient trim, relative
  double causality_tol = 1e-6;      // emitted-trace t<0 bound, relative
  int fock_nmax = 30;
};

struct SweepConfig {
  double sigma_min = 0.5;  // in omega0*sigma
  double sigma_max = 8.0;
  int points = 31;
  std::vector<double> tau_ratios = {2.0, 3.0};
};

struct RunConfig {
  SeedConfig seed;
  FilterConfig filter;
  GridConfig grid;
  ToleranceConfig tolerances;
  SweepConfig sweep;
  std::string out_dir = "out";
  bool normalize_traces = true;
};

/// Parse and validate; unknown keys anywhere are rejected.
RunConfig parse_config_json(const std::string& text);
RunConfig load_config(const std::string& path);
void validate(const RunConfig& cfg);

TimeGrid build_run_grid(const RunConfig& cfg, double filter_duration,
                        double commensurate);

struct StateBundle {
  TimeGrid grid;
  SampledSignal seed;
  LocalizedStateModel model;
  FieldFunctions fields;
  AuxiliaryFunctions aux;
};

StateBundle build_state_bundle(const RunConfig& cfg, const TimeGrid& grid);

FabryPerot make_fabry_perot(const RunConfig& cfg);
QuarterWaveStack make_stack(const RunConfig& cfg);

/// Commands write delimited data files plus a .meta.json sidecar into
/// cfg.out_dir and return 0. ConfigError / InvariantError propagate to the
/// CLI, which maps them to exit codes 1 / 2.
int cmd_fidelity_sweep(const RunConfig& cfg);
int cmd_energy_density(const RunConfig& cfg);
int cmd_fp_filter(const RunConfig& cfg);
int cmd_pbg_spectrum(const RunConfig& cfg);
int cmd_pbg_filter(const RunConfig& cfg);
int cmd_compare_representations(const RunConfig& cfg);
int cmd_selftest(const RunConfig& cfg);

}  // namespace sloq

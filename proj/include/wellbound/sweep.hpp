#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wellbound/capacity.hpp"
#include "wellbound/secular.hpp"

namespace wellbound {

enum class SweepQuantity { capacity, e_total, e_single_max, gap };

std::string to_string(SweepQuantity q);

struct AxisSpec {
  ThresholdAxis parameter = ThresholdAxis::trap_depth;
  double low = 0.0;   // SI unit of the parameter
  double high = 0.0;
  int count = 2;
  bool log_scale = false;
};

struct GridSpec {
  AxisSpec x;
  std::optional<AxisSpec> y;
  PhysicalTrapConfig fixed;  // baseline; swept axes override per cell
  int n_particles = 1;       // particle count (n_max for the capacity quantity)
  SweepQuantity quantity = SweepQuantity::capacity;
  bool shift_zero_to_trap_bottom = false;  // spectrum traces only
};

struct SweepCell {
  double x = 0.0;  // SI
  double y = 0.0;  // SI; 0 for 1D grids
  std::optional<double> value;  // absent when the queried state is unbound or errored
  std::string diagnostic;       // reason for an absent value
};

struct SweepGrid {
  GridSpec spec;
  std::vector<SweepCell> cells;  // row-major: x fastest
  SolverSettings provenance;
  std::optional<std::vector<int>> trace_quantum_numbers;  // set by spectrum_trace
};

// Sample positions of an axis (linear or log spaced). count == 1 degenerates
// to the single point `low`.
std::vector<double> axis_values(const AxisSpec& axis);

// Evaluates every cell independently with identical solver settings. Cells are
// distributed over `threads` workers (0 picks a hardware-based default, 1 runs
// serially); results land by cell index, so the output is identical for any
// thread count. Per-cell failures are recorded as absent values with a
// diagnostic and never abort the sweep. Energies are reported in joules.
SweepGrid run_sweep(const GridSpec& spec, const SolverSettings& settings = {}, int threads = 0);

// Per-point solve of a fixed quantum-number set along a 1D grid. Quantity must
// be e_total or e_single_max; with spec.shift_zero_to_trap_bottom the energy
// zero moves to the bottom of the well (adds N k0_hat^2/2 before conversion).
SweepGrid spectrum_trace(const GridSpec& spec, const QuantumNumbers& numbers,
                         const SolverSettings& settings = {}, int threads = 0);

// CSV with a header row naming the axes and quantity, one row per cell; absent
// values are empty fields. Deterministic: 12 significant digits, no timestamps.
void write_csv(const SweepGrid& grid, std::ostream& out);
std::string csv_string(const SweepGrid& grid);

// Companion provenance snapshot (grid spec + solver settings), flat key=value.
void write_metadata(const SweepGrid& grid, std::ostream& out);
std::string metadata_string(const SweepGrid& grid);

// Fixed-format scientific number rendering used by all file outputs.
std::string format_number(double value);

// Runs body(0..count-1) on a small worker pool; deterministic result placement
// is the caller's job (index-addressed output).
void parallel_for_index(int count, int threads, const std::function<void(int)>& body);

}  // namespace wellbound

#include "wellbound/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wellbound/spectrum.hpp"

namespace wellbound {

std::string to_string(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::capacity: return "capacity";
    case SweepQuantity::e_total: return "e_total";
    case SweepQuantity::e_single_max: return "e_single_max";
    case SweepQuantity::gap: return "gap";
  }
  return "?";
}

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void parallel_for_index(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(hw == 0 ? 2 : std::min(hw, 8u));
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& worker : pool) worker.join();
}

std::vector<double> axis_values(const AxisSpec& axis) {
  if (axis.count < 1) throw std::invalid_argument("axis count must be >= 1");
  if (axis.count == 1) return {axis.low};  // degenerate single-point grid
  if (!(axis.low < axis.high)) throw std::invalid_argument("axis requires low < high");
  if (axis.log_scale && !(axis.low > 0.0)) {
    throw std::invalid_argument("log-scaled axis requires low > 0");
  }
  std::vector<double> values(static_cast<std::size_t>(axis.count));
  for (int i = 0; i < axis.count; ++i) {
    const double t = static_cast<double>(i) / (axis.count - 1);
    values[static_cast<std::size_t>(i)] =
        axis.log_scale ? std::exp(std::log(axis.low) + t * (std::log(axis.high / axis.low)))
                       : axis.low + t * (axis.high - axis.low);
  }
  values.back() = axis.high;
  return values;
}

namespace {

PhysicalTrapConfig cell_config(const GridSpec& spec, double x, double y) {
  PhysicalTrapConfig config = with_axis_value(spec.fixed, spec.x.parameter, x);
  if (spec.y) config = with_axis_value(config, spec.y->parameter, y);
  return config;
}

void evaluate_cell(const GridSpec& spec, const SolverSettings& settings, SweepCell& cell) {
  const PhysicalTrapConfig config = cell_config(spec, cell.x, cell.y);
  switch (spec.quantity) {
    case SweepQuantity::capacity:
      cell.value = trap_capacity(config, spec.n_particles, settings);
      break;
    case SweepQuantity::e_total:
    case SweepQuantity::e_single_max: {
      const SolveOutcome outcome = ground_state(to_trap_units(config, spec.n_particles),
                                                settings);
      if (!outcome.bound()) {
        cell.diagnostic = outcome.failure().diagnostic;
        break;
      }
      const BetheSolution& sol = outcome.solution();
      const double e = spec.quantity == SweepQuantity::e_total
                           ? sol.e_total
                           : sol.e_single
                                 .maxCoeff();
      cell.value = energy_to_physical(e, config);
      break;
    }
    case SweepQuantity::gap: {
      const TrapUnitsProblem p = to_trap_units(config, spec.n_particles);
      const SolveOutcome ground = ground_state(p, settings);
      if (!ground.bound()) {
        cell.diagnostic = ground.failure().diagnostic;
        break;
      }
      const SolveOutcome excited = first_excited(p, settings);
      if (!excited.bound()) {
        cell.diagnostic = "first excited state: " + excited.failure().diagnostic;
        break;
      }
      cell.value = energy_to_physical(
          excited.solution().e_total - ground.solution().e_total, config);
      break;
    }
  }
}

SweepGrid evaluate_grid(const GridSpec& spec, const SolverSettings& settings, int threads,
                        const std::function<void(const GridSpec&, SweepCell&)>& body) {
  validate(spec.fixed);
  if (spec.n_particles < 1) throw std::invalid_argument("sweep: n_particles must be >= 1");
  const std::vector<double> xs = axis_values(spec.x);
  const std::vector<double> ys = spec.y ? axis_values(*spec.y) : std::vector<double>{0.0};

  SweepGrid grid;
  grid.spec = spec;
  grid.provenance = settings;
  grid.cells.resize(xs.size() * ys.size());
  for (std::size_t iy = 0; iy < ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      SweepCell& cell = grid.cells[iy * xs.size() + ix];
      cell.x = xs[ix];
      cell.y = ys[iy];
    }
  }
  // Cells are independent; results land by index, so evaluation order (and
  // thread count) cannot change the output. Failures never abort the sweep.
  parallel_for_index(static_cast<int>(grid.cells.size()), threads, [&](int i) {
    SweepCell& cell = grid.cells[static_cast<std::size_t>(i)];
    try {
      body(spec, cell);
    } catch (const std::exception& e) {
      cell.value.reset();
      cell.diagnostic = e.what();
    }
  });
  return grid;
}

}  // namespace

SweepGrid run_sweep(const GridSpec& spec, const SolverSettings& settings, int threads) {
  return evaluate_grid(spec, settings, threads,
                       [&settings](const GridSpec& s, SweepCell& cell) {
                         evaluate_cell(s, settings, cell);
                       });
}

SweepGrid spectrum_trace(const GridSpec& spec, const QuantumNumbers& numbers,
                         const SolverSettings& settings, int threads) {
  if (spec.y) throw std::invalid_argument("spectrum_trace: 1D grids only");
  if (spec.quantity != SweepQuantity::e_total && spec.quantity != SweepQuantity::e_single_max) {
    throw std::invalid_argument("spectrum_trace: quantity must be e_total or e_single_max");
  }
  if (numbers.size() != spec.n_particles) {
    throw std::invalid_argument("spectrum_trace: |I| must equal n_particles");
  }
  SweepGrid grid = evaluate_grid(
      spec, settings, threads, [&](const GridSpec& s, SweepCell& cell) {
        const PhysicalTrapConfig config = cell_config(s, cell.x, cell.y);
        const TrapUnitsProblem p = to_trap_units(config, s.n_particles);
        const SolveOutcome outcome = solve(p, numbers, settings);
        if (!outcome.bound()) {
          cell.diagnostic = outcome.failure().diagnostic;
          return;
        }
        const BetheSolution& sol = outcome.solution();
        double e = s.quantity == SweepQuantity::e_total ? sol.e_total
                                                        : sol.e_single.maxCoeff();
        if (s.shift_zero_to_trap_bottom) {
          const double bottom = -0.5 * p.k0_hat * p.k0_hat *
                                (s.quantity == SweepQuantity::e_total ? s.n_particles : 1);
          e -= bottom;
        }
        cell.value = energy_to_physical(e, config);
      });
  grid.trace_quantum_numbers = numbers.values();
  return grid;
}

namespace {

std::string axis_column(const AxisSpec& axis) {
  switch (axis.parameter) {
    case ThresholdAxis::trap_depth: return "trap_depth_J";
    case ThresholdAxis::trap_length: return "trap_length_m";
    case ThresholdAxis::interaction_strength: return "interaction_strength_per_m";
  }
  return "?";
}

std::string quantity_column(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::capacity: return "capacity";
    case SweepQuantity::e_total: return "e_total_J";
    case SweepQuantity::e_single_max: return "e_single_max_J";
    case SweepQuantity::gap: return "gap_J";
  }
  return "?";
}

void write_axis_metadata(std::ostream& out, const char* name, const AxisSpec& axis) {
  out << name << ".parameter = " << to_string(axis.parameter) << '\n'
      << name << ".low = " << format_number(axis.low) << '\n'
      << name << ".high = " << format_number(axis.high) << '\n'
      << name << ".count = " << axis.count << '\n'
      << name << ".scale = " << (axis.log_scale ? "log" : "linear") << '\n';
}

}  // namespace

void write_csv(const SweepGrid& grid, std::ostream& out) {
  out << axis_column(grid.spec.x);
  if (grid.spec.y) out << ',' << axis_column(*grid.spec.y);
  out << ',' << quantity_column(grid.spec.quantity) << '\n';
  for (const SweepCell& cell : grid.cells) {
    out << format_number(cell.x);
    if (grid.spec.y) out << ',' << format_number(cell.y);
    out << ',';
    if (cell.value) out << format_number(*cell.value);
    out << '\n';
  }
}

std::string csv_string(const SweepGrid& grid) {
  std::ostringstream out;
  write_csv(grid, out);
  return out.str();
}

void write_metadata(const SweepGrid& grid, std::ostream& out) {
  const GridSpec& spec = grid.spec;
  out << "quantity = " << to_string(spec.quantity) << '\n';
  out << "n_particles = " << spec.n_particles << '\n';
  write_axis_metadata(out, "x", spec.x);
  if (spec.y) write_axis_metadata(out, "y", *spec.y);
  if (grid.trace_quantum_numbers) {
    out << "quantum_numbers =";
    for (int v : *grid.trace_quantum_numbers) out << ' ' << v;
    out << '\n';
    out << "energy_zero = "
        << (spec.shift_zero_to_trap_bottom ? "trap_bottom" : "continuum") << '\n';
  }
  out << "fixed.mass_kg = " << format_number(spec.fixed.atom_mass) << '\n'
      << "fixed.scattering_length_m = " << format_number(spec.fixed.scattering_length) << '\n'
      << "fixed.omega_perp_rad_s = " << format_number(spec.fixed.omega_perp) << '\n'
      << "fixed.trap_length_m = " << format_number(spec.fixed.trap_length) << '\n'
      << "fixed.trap_depth_J = " << format_number(spec.fixed.trap_depth) << '\n';
  const SolverSettings& s = grid.provenance;
  out << "solver.continuation_steps = " << s.continuation_steps << '\n'
      << "solver.newton_tolerance = " << format_number(s.newton_tolerance) << '\n'
      << "solver.newton_max_iterations = " << s.newton_max_iterations << '\n'
      << "solver.min_relative_step = " << format_number(s.min_relative_step) << '\n'
      << "solver.boundary_margin = " << format_number(s.boundary_margin) << '\n'
      << "solver.ascent_anchor = " << format_number(s.ascent_anchor) << '\n';
  out << "units = SI (energies J, lengths m, interaction 1/m)" << '\n';
  int absent = 0;
  for (const SweepCell& cell : grid.cells) absent += cell.value ? 0 : 1;
  out << "cells.total = " << grid.cells.size() << '\n';
  out << "cells.absent = " << absent << '\n';
}

std::string metadata_string(const SweepGrid& grid) {
  std::ostringstream out;
  write_metadata(grid, out);
  return out.str();
}

}  // namespace wellbound

#ifndef OPALG_NUMERIC_SUITE_HPP
#define OPALG_NUMERIC_SUITE_HPP

#include "opalg/report.hpp"

#include <cstdint>
#include <string>

namespace opalg::fock {

/// Configuration of the numerical suite.  Defaults match the reference run:
/// dim=64, nmax=3, hbar=1, grid M=512, fixed seed.
struct NumericConfig {
    int dim = 64;
    long k_num = 1, k_den = 1;  // lowest weight of the base representation
    int nmax = 3;
    int two_sector_dim = 32;  // per-sector one-photon dimension
    int grid_m = 512;
    double omega_max = 8.0;
    double hbar = 1.0;
    double eps_min = 1e-6;
    std::uint64_t seed = 20260809ull;
    int oracle_sweep = 100;   // random expressions for the oracle checks
    int casimir_states = 1000;
};

/// Runs the full numerical suite (single-particle windows, Fock lifts,
/// Casimir bound, photon-number invariance, symbolic/matrix oracle sweeps,
/// two-sector localisation, grid cross-oracle) and reports one entry per
/// check with its pinned tolerance.
Report run_numeric_suite(const NumericConfig& cfg);

}  // namespace opalg::fock

#endif

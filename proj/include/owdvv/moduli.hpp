#pragma once

#include "owdvv/potential.hpp"

namespace owdvv::moduli {

// ----- correlators ---------------------------------------------------------

// <tau_{d_1}...tau_{d_n}>_0 by the closed formula (n-3)!/prod d_i!.
// Returns 0 on dimension violation; throws domain_error when 2g-2+n <= 0.
Rat kw_correlator_genus0(const std::vector<int>& levels);

// Virasoro recursion for psi-class intersection numbers; valid in any genus.
// Used as the independent oracle and as the optional higher-genus backend.
Rat dvv_correlator(int genus, std::vector<int> levels);

// Main closed correlator. Genus 0 by the closed formula, genus 1 through the
// genus-1 recursion table; genus >= 2 only when the oracle backend is allowed.
Rat kw_correlator(int genus, const std::vector<int>& levels, bool allow_oracle_backend = false);

// Open correlator <tau_{d_1}..tau_{d_l} sigma_{m_1}..sigma_{m_k}>_g, g <= 1.
Rat pst_correlator(int genus, const std::vector<int>& closed_levels,
                   const std::vector<int>& boundary_levels);

// Genus-0 open correlator with all boundary insertions at level 0 (building
// block: closed formula + open string reduction).
Rat pst_correlator_genus0_s0(std::vector<int> closed_levels, int boundary_count);

// ----- series-level builders ------------------------------------------------

// F^KW_0 and F^KW_1 in a one-variable ring (alpha = 1 carries t_*).
Series kw_genus0_series(const Series& tmpl);
Series kw_genus1_series(const Series& tmpl);

// F^PST_g restricted to s_{>=1} = 0, in a two-variable ring (alpha=1: t,
// alpha=2: s). Genus 0 via the closed formula and the open string equation,
// genus 1 via the open topological recursion in genus 1 with vanishing
// primary data.
Series pst_genus0_s0_series(const Series& tmpl);
Series pst_genus1_s0_series(const Series& tmpl, const Series& kw0, const Series& pst0);

// Full log F^PST (grades g-1 for g = 0,1) with all boundary descendants
// reconstructed from the s-descendant relation at tau level.
GradedSeries pst_log_full(const TruncationSpec& ring, int level_sum_cap);

// Direct theta shift of a full PST log (two-variable ring). The input ring
// must contain enough s_0 headroom; see pst_ring_for_theta.
GradedSeries pst_theta_shift_direct(const GradedSeries& pst, const Rat& theta);

// Ring large enough that the theta shift is exact for every monomial of the
// claimed output window.
TruncationSpec pst_ring_for_theta(const TruncationSpec& out, int out_level_sum_cap);

// Rebuilds a series into another ring: variable (alpha,d) of `in` becomes
// scale[alpha] * t^{alpha_map[alpha]}_d in the template's ring.
Series map_vars(const Series& in, const Series& tmpl, const std::vector<int>& alpha_map,
                const std::vector<Rat>& scale);

// ----- potential-level builders ---------------------------------------------

// Closed sectors sum_i a_i^{2g-2} F^KW_g(a_i t^i_*), eta = Id, unit (a_i^{-1}, 0).
LogPotential build_kw(const std::vector<Rat>& a, const TruncationSpec& spec,
                      int level_sum_cap = kUnboundedLevelSum);

// Open sector F^PST_g(a_1 t^1_*, t^{N+1}_*) (no shift), genus <= 1.
LogPotential build_pst(const std::vector<Rat>& a, const TruncationSpec& spec,
                       int level_sum_cap = kUnboundedLevelSum);

// KW closed sectors plus theta-shifted PST open sectors: the initial pair the
// group actions are applied to.
LogPotential initial_pair(const std::vector<Rat>& a, const Rat& theta, const TruncationSpec& spec,
                          int level_sum_cap = kUnboundedLevelSum);

// Applies the theta shift to a potential whose open sector is PST-type
// (build_pst output). Exact: the open sector is rebuilt internally in a ring
// with enough s_0 headroom.
LogPotential theta_shift(const LogPotential& pot, const Rat& theta);

} // namespace owdvv::moduli

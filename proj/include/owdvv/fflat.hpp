#pragma once

#include "owdvv/matrix.hpp"
#include "owdvv/potential.hpp"

#include <optional>

namespace owdvv::fflat {

// L-tuple of level-0 series solving the oriented WDVV equations with unit
// A^alpha d/dt^alpha. Components live in a shared ring whose variables
// 1..dim are used (the ring may have more).
struct VectorPotential {
    int dim = 0;
    std::vector<Series> comps; // F^1..F^dim
    std::vector<Rat> unit;     // size dim

    const Series& comp(int alpha) const { return comps.at(alpha - 1); }
    // c^alpha_{beta gamma}(t) = d^2 F^alpha / dt^beta dt^gamma
    Series structure_constant(int alpha, int beta, int gamma) const;
    // residual of the oriented WDVV equations; zero iff they hold
    Series oriented_wdvv_residual(int alpha, int beta, int gamma, int delta) const;
    // residual of the unit axiom c^alpha_{beta gamma} A^gamma = delta^alpha_beta
    Series unit_residual(int alpha, int beta) const;
};

VectorPotential open_closed_pair_to_vector_potential(const Series& fc, const Series& fo,
                                                     const RatMat& eta,
                                                     const std::vector<Rat>& unit);

// The table F^{alpha,a}_0 of a sequence of ancestor vector potentials.
struct DescendantTable {
    int dim = 0;
    int depth = 0; // a = 0..depth
    std::vector<Rat> unit;
    std::vector<std::vector<Series>> table; // [alpha-1][a]

    const Series& at(int alpha, int a) const { return table.at(alpha - 1).at(a); }
};

// Unique ancestor table over the given ring template. The target ring should
// carry descendant variables; only variables 1..vp.dim are used per level.
DescendantTable ancestor_vector_potentials(const VectorPotential& vp, const Series& tmpl,
                                           int depth);

// Omega_j matrices (entries are series in the level-0 variables).
std::vector<std::vector<std::vector<Series>>> omega_matrices(const DescendantTable& dvp,
                                                             int order);

// Closed descendant potential of a closed-type table: 1/2 sum_a q eta F^{mu,a}.
Series closed_potential_from_table(const DescendantTable& dvp, const RatMat& eta);

enum class SpectrumKind { Semisimple, NotSemisimple, IrrationalSpectrum };

struct SpectralData {
    SpectrumKind kind = SpectrumKind::NotSemisimple;
    // for Semisimple with rational spectrum: idempotent basis vectors of the
    // constant-term algebra, ordered by ascending generic eigenvalue
    std::vector<std::vector<Rat>> idempotents;
    std::vector<Rat> eigenvalues; // of the generic multiplication used
};

SpectralData semisimple_at_origin(const VectorPotential& vp);

struct CanonicalFrame {
    int dim = 0;
    std::vector<Series> u;                       // canonical coordinates, u(0) = 0
    std::vector<std::vector<Series>> psi_tilde;  // du^i/dt^alpha
    std::vector<std::vector<Series>> psi;        // H psi_tilde
    std::vector<std::vector<Series>> gamma;      // H Gamma~ H^{-1}, zero diagonal
    std::vector<Series> h;                       // H_1..H_dim
    std::vector<Rat> g0;                         // g_i(0) for the closed block
    std::vector<std::vector<std::vector<Series>>> r; // R[m][i][j], R[0] = Id

    RatMat psi_at_origin() const;
    // R(z, 0) truncated at the stored order
    MatSeries r_at_origin() const;
};

// Canonical coordinates and Psi~ for a flat F-manifold semisimple at 0 with
// rational spectral data. For an open-closed pair (closed_dim = dim - 1) the
// last coordinate is dF^o/dt^{N+1} per the open extension; otherwise all
// coordinates come from the idempotent sections.
CanonicalFrame canonical_coordinates(const VectorPotential& vp, int closed_dim);

// Extends a frame with H, Gamma and the R-matrices up to order K. eta is the
// metric of the closed block (closed_dim x closed_dim).
void build_frame(CanonicalFrame& frame, const VectorPotential& vp, const RatMat& eta,
                 int closed_dim, int order);

} // namespace owdvv::fflat

#pragma once

#include "owdvv/graded.hpp"
#include "owdvv/matrix.hpp"

namespace owdvv {

// eps-graded pair of closed/open potentials: log tau = sum_g eps^{2g-2} Fc_g
// + sum_g eps^{g-1} Fo_g, together with the metric and the unit. Closed parts
// never involve t^{N+1}. The origin is shared by all graded pieces.
struct LogPotential {
    TruncationSpec trunc;
    int level_sum_cap = kUnboundedLevelSum;
    std::vector<Rat> origin;    // size N+1
    std::map<int, Series> closed; // genus -> Fc_g
    std::map<int, Series> open;   // genus -> Fo_g
    RatMat eta;                   // N x N, symmetric, invertible
    std::vector<Rat> unit;        // size N+1

    static LogPotential empty(TruncationSpec spec, RatMat eta, std::vector<Rat> unit,
                              std::vector<Rat> origin = {}, int level_sum_cap = kUnboundedLevelSum);

    int n() const { return trunc.n_closed; }
    void validate() const;

    Series zero_series() const { return Series(trunc, origin, level_sum_cap); }

    void set_closed(int genus, Series s);
    void set_open(int genus, Series s);
    Series closed_part(int genus) const;
    Series open_part(int genus) const;

    // Closed sector as a graded series (grades 2g-2).
    GradedSeries closed_graded() const;
    // Joint log tau (closed and open sectors superposed by grade).
    GradedSeries joint_graded() const;

    // Splits a joint graded series against a known closed sector.
    static LogPotential from_joint(const GradedSeries& joint, const GradedSeries& closed_sector,
                                   RatMat eta, std::vector<Rat> unit);

    LogPotential truncated_to(const TruncationSpec& spec,
                              int level_sum_cap = kUnboundedLevelSum) const;

    // Equality of all graded pieces, eta, unit and origin (specs must match).
    bool operator==(const LogPotential& o) const;
};

} // namespace owdvv

#include "owdvv/potential.hpp"

namespace owdvv {

LogPotential LogPotential::empty(TruncationSpec spec, RatMat eta, std::vector<Rat> unit,
                                 std::vector<Rat> origin, int level_sum_cap)
{
    LogPotential p;
    p.trunc = spec;
    p.level_sum_cap = level_sum_cap;
    p.origin = origin.empty() ? std::vector<Rat>(spec.n_vars(), Rat(0)) : std::move(origin);
    p.eta = std::move(eta);
    p.unit = std::move(unit);
    p.validate();
    return p;
}

void LogPotential::validate() const
{
    trunc.validate();
    if (static_cast<int>(origin.size()) != trunc.n_vars())
        throw structural_error("LogPotential: origin size");
    if (eta.rows() != trunc.n_closed || eta.cols() != trunc.n_closed)
        throw structural_error("LogPotential: eta must be N x N");
    for (int i = 0; i < eta.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (eta.at(i, j) != eta.at(j, i))
                throw structural_error("LogPotential: eta must be symmetric");
    eta.inverse(); // throws when singular
    if (static_cast<int>(unit.size()) != trunc.n_vars())
        throw structural_error("LogPotential: unit size");
    bool closed_unit_nonzero = false;
    for (int i = 0; i < trunc.n_closed; ++i)
        if (unit[i] != 0)
            closed_unit_nonzero = true;
    if (!closed_unit_nonzero)
        throw structural_error("LogPotential: closed projection of the unit vanishes");
}

void LogPotential::set_closed(int genus, Series s)
{
    if (s.is_zero())
        closed.erase(genus);
    else
        closed[genus] = std::move(s);
}

void LogPotential::set_open(int genus, Series s)
{
    if (s.is_zero())
        open.erase(genus);
    else
        open[genus] = std::move(s);
}

Series LogPotential::closed_part(int genus) const
{
    auto it = closed.find(genus);
    return it == closed.end() ? zero_series() : it->second;
}

Series LogPotential::open_part(int genus) const
{
    auto it = open.find(genus);
    return it == open.end() ? zero_series() : it->second;
}

GradedSeries LogPotential::closed_graded() const
{
    GradedSeries g(trunc, origin, level_sum_cap);
    for (auto& [genus, s] : closed)
        g.add_part(2 * genus - 2, s);
    return g;
}

GradedSeries LogPotential::joint_graded() const
{
    GradedSeries g = closed_graded();
    for (auto& [genus, s] : open)
        g.add_part(genus - 1, s);
    return g;
}

LogPotential LogPotential::from_joint(const GradedSeries& joint, const GradedSeries& closed_sector,
                                      RatMat eta, std::vector<Rat> unit)
{
    LogPotential p = empty(joint.spec(), std::move(eta), std::move(unit), joint.origin(),
                           joint.level_sum_cap());
    for (auto& [k, s] : closed_sector.parts()) {
        if ((k % 2 + 2) % 2 != 0)
            throw structural_error("LogPotential::from_joint: closed sector at odd grade");
        p.set_closed((k + 2) / 2, s);
    }
    for (int k = joint.spec().min_eps; k <= joint.spec().max_eps; ++k) {
        Series open_g = joint.part(k) - closed_sector.part(k);
        if (k + 1 < 0) {
            if (!open_g.is_zero())
                throw structural_error("LogPotential::from_joint: residue at negative open genus");
            continue;
        }
        p.set_open(k + 1, open_g);
    }
    return p;
}

LogPotential LogPotential::truncated_to(const TruncationSpec& spec, int level_sum_cap) const
{
    LogPotential p = empty(spec, eta, unit, origin, level_sum_cap);
    for (auto& [g, s] : closed)
        if (2 * g - 2 >= spec.min_eps && 2 * g - 2 <= spec.max_eps)
            p.set_closed(g, s.truncated_to(spec, level_sum_cap));
    for (auto& [g, s] : open)
        if (g - 1 >= spec.min_eps && g - 1 <= spec.max_eps)
            p.set_open(g, s.truncated_to(spec, level_sum_cap));
    return p;
}

bool LogPotential::operator==(const LogPotential& o) const
{
    auto mat_eq = [](const RatMat& a, const RatMat& b) { return a == b; };
    return trunc == o.trunc && origin == o.origin && closed == o.closed && open == o.open &&
           mat_eq(eta, o.eta) && unit == o.unit;
}

} // namespace owdvv

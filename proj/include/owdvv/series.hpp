#pragma once

#include "owdvv/monomial.hpp"
#include "owdvv/rational.hpp"
#include "owdvv/truncation.hpp"

#include <functional>
#include <map>
#include <vector>

namespace owdvv {

// Exact truncated multivariate formal power series over Q.
//
// Coefficients are stored against monomials in t^alpha_d; level-0 variables are
// understood as displacements from the expansion point `origin` (series live in
// C[[t - t_orig]] and all arithmetic happens in the shifted coordinates). The
// ring is cut by total degree, per-variable level, and optionally by the sum of
// levels of a monomial (level_sum_cap), which internal pipelines use to keep
// dilaton-type shifts exact.
class Series {
public:
    Series() = default;
    Series(TruncationSpec spec, std::vector<Rat> origin, int level_sum_cap = kUnboundedLevelSum);

    static Series zero(TruncationSpec spec, std::vector<Rat> origin = {}, int level_sum_cap = kUnboundedLevelSum);
    static Series constant(TruncationSpec spec, const Rat& c, std::vector<Rat> origin = {},
                           int level_sum_cap = kUnboundedLevelSum);
    static Series variable(TruncationSpec spec, VarId v, std::vector<Rat> origin = {},
                           int level_sum_cap = kUnboundedLevelSum);

    Series zero_like() const;
    Series constant_like(const Rat& c) const;
    Series variable_like(VarId v) const;

    const TruncationSpec& spec() const { return spec_; }
    const std::vector<Rat>& origin() const { return origin_; }
    int level_sum_cap() const { return level_sum_cap_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool in_ring(const Monomial& m) const;
    bool same_ring(const Series& o) const;

    Rat coefficient(const Monomial& m) const;
    Rat constant_term() const { return coefficient(Monomial::one()); }

    // Adds c*m, dropping the term if it leaves the ring. Returns *this.
    Series& add_term(const Monomial& m, const Rat& c);

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Rat& c) const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rat& c);

    Series diff(VarId v) const;

    // Composition. Images must all live in one common ring (the result ring);
    // variables absent from the map are substituted by themselves. Constant
    // parts of images are expanded against the stored coefficients, except for
    // pure shifts of level-0 variables (image == var + const), which relocate
    // the origin instead and leave coefficients untouched.
    Series substitute(const std::map<VarId, Series>& images) const;

    // Taylor shift v -> v + c expanded against stored data (no origin change).
    Series taylor_shift(VarId v, const Rat& c) const;

    Series exp_truncated() const; // requires zero constant term
    Series log_truncated() const; // requires constant term 1

    Series truncated_to(const TruncationSpec& spec, int level_sum_cap = kUnboundedLevelSum) const;
    // Keep only monomials with all levels zero.
    Series primary_part() const;
    // Drop monomials of total degree <= cutoff (used to normalize potentials
    // that are defined up to linear/quadratic terms).
    Series without_degree_at_most(int cutoff) const;

    Series with_origin(std::vector<Rat> origin) const;

    bool operator==(const Series& o) const;

private:
    void check_compatible(const Series& o) const;

    TruncationSpec spec_;
    int level_sum_cap_ = kUnboundedLevelSum;
    std::vector<Rat> origin_;
    std::map<Monomial, Rat> terms_;
};

Series operator*(const Rat& c, const Series& s);

} // namespace owdvv

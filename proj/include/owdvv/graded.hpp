#pragma once

#include "owdvv/series.hpp"

#include <functional>
#include <map>

namespace owdvv {

// eps-graded family of series: F = sum_k eps^k F_k with k restricted to the
// window [min_eps, max_eps] of the spec. eps is a grade, not a ring variable;
// the operator machinery exploits that products can only lower the grade when
// max_eps <= 0, so windowed arithmetic is exact for all kept grades.
class GradedSeries {
public:
    GradedSeries() = default;
    GradedSeries(TruncationSpec spec, std::vector<Rat> origin, int level_sum_cap = kUnboundedLevelSum);

    static GradedSeries one(TruncationSpec spec, std::vector<Rat> origin = {},
                            int level_sum_cap = kUnboundedLevelSum);

    const TruncationSpec& spec() const { return spec_; }
    const std::vector<Rat>& origin() const { return origin_; }
    int level_sum_cap() const { return level_sum_cap_; }
    const std::map<int, Series>& parts() const { return parts_; }

    bool is_zero() const { return parts_.empty(); }
    bool has_part(int k) const { return parts_.count(k) != 0; }
    Series part(int k) const; // zero series when absent
    void set_part(int k, Series s);
    void add_part(int k, const Series& s);

    GradedSeries operator-() const;
    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries operator*(const GradedSeries& o) const;
    GradedSeries operator*(const Rat& c) const;
    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);

    GradedSeries diff(VarId v) const;
    GradedSeries shifted_grade(int dk) const; // multiply by eps^dk, clipping to window
    GradedSeries substitute(const std::map<VarId, Series>& images) const;

    // exp(eps^w sum_i c_i d/dv_i) as a graded Taylor shift.
    GradedSeries apply_graded_shift(int eps_weight, const std::vector<std::pair<VarId, Rat>>& dirs) const;

    // log(1 + x) where *this = 1 + x with x nilpotent in the window.
    GradedSeries log_one_plus() const;

    GradedSeries truncated_to(const TruncationSpec& spec, int level_sum_cap = kUnboundedLevelSum) const;
    GradedSeries with_origin(std::vector<Rat> origin) const;

    bool operator==(const GradedSeries& o) const;

private:
    void check_compatible(const GradedSeries& o) const;
    Series zero_series() const;

    TruncationSpec spec_;
    int level_sum_cap_ = kUnboundedLevelSum;
    std::vector<Rat> origin_;
    std::map<int, Series> parts_;
};

// log( exp(Op) exp(G) ) computed without materializing exp(G): the caller
// supplies T(X) = exp(-G) Op (exp(G) X) as a linear map on graded series.
// Iterates A_0 = 1, A_{m+1} = T(A_m)/(m+1) until A vanishes; requires
// max_eps <= 0 so the window stays exact.
GradedSeries apply_exp_via_conjugation(const GradedSeries& G,
                                       const std::function<GradedSeries(const GradedSeries&)>& T,
                                       int max_iter);

} // namespace owdvv

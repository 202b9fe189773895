#include "owdvv/graded.hpp"

namespace owdvv {

GradedSeries::GradedSeries(TruncationSpec spec, std::vector<Rat> origin, int level_sum_cap)
    : spec_(spec), level_sum_cap_(level_sum_cap), origin_(std::move(origin))
{
    spec_.validate();
    if (origin_.empty())
        origin_.assign(spec_.n_vars(), Rat(0));
    if (static_cast<int>(origin_.size()) != spec_.n_vars())
        throw structural_error("GradedSeries: origin size must be n_closed+1");
}

GradedSeries GradedSeries::one(TruncationSpec spec, std::vector<Rat> origin, int level_sum_cap)
{
    GradedSeries g(spec, std::move(origin), level_sum_cap);
    if (0 < spec.min_eps || 0 > spec.max_eps)
        throw structural_error("GradedSeries::one: grade 0 outside window");
    g.set_part(0, Series::constant(spec, Rat(1), g.origin_, level_sum_cap));
    return g;
}

Series GradedSeries::zero_series() const { return Series(spec_, origin_, level_sum_cap_); }

Series GradedSeries::part(int k) const
{
    auto it = parts_.find(k);
    return it == parts_.end() ? zero_series() : it->second;
}

void GradedSeries::set_part(int k, Series s)
{
    if (k < spec_.min_eps || k > spec_.max_eps)
        return;
    if (!s.same_ring(zero_series()))
        throw structural_error("GradedSeries::set_part: ring mismatch");
    if (s.is_zero())
        parts_.erase(k);
    else
        parts_[k] = std::move(s);
}

void GradedSeries::add_part(int k, const Series& s)
{
    if (k < spec_.min_eps || k > spec_.max_eps || s.is_zero())
        return;
    auto it = parts_.find(k);
    if (it == parts_.end())
        set_part(k, s);
    else {
        it->second += s;
        if (it->second.is_zero())
            parts_.erase(it);
    }
}

void GradedSeries::check_compatible(const GradedSeries& o) const
{
    if (!(spec_ == o.spec_) || level_sum_cap_ != o.level_sum_cap_ || origin_ != o.origin_)
        throw structural_error("GradedSeries: mismatched spec or origin");
}

GradedSeries GradedSeries::operator-() const
{
    GradedSeries r(spec_, origin_, level_sum_cap_);
    for (auto& [k, s] : parts_)
        r.parts_.emplace(k, -s);
    return r;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o)
{
    check_compatible(o);
    for (auto& [k, s] : o.parts_)
        add_part(k, s);
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o)
{
    check_compatible(o);
    for (auto& [k, s] : o.parts_)
        add_part(k, -s);
    return *this;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const
{
    GradedSeries r = *this;
    r += o;
    return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const
{
    GradedSeries r = *this;
    r -= o;
    return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const
{
    check_compatible(o);
    GradedSeries r(spec_, origin_, level_sum_cap_);
    for (auto& [k1, s1] : parts_)
        for (auto& [k2, s2] : o.parts_) {
            int k = k1 + k2;
            if (k < spec_.min_eps || k > spec_.max_eps)
                continue;
            r.add_part(k, s1 * s2);
        }
    return r;
}

GradedSeries GradedSeries::operator*(const Rat& c) const
{
    GradedSeries r(spec_, origin_, level_sum_cap_);
    if (c == 0)
        return r;
    for (auto& [k, s] : parts_)
        r.parts_.emplace(k, s * c);
    return r;
}

GradedSeries GradedSeries::diff(VarId v) const
{
    GradedSeries r(spec_, origin_, level_sum_cap_);
    for (auto& [k, s] : parts_)
        r.add_part(k, s.diff(v));
    return r;
}

GradedSeries GradedSeries::shifted_grade(int dk) const
{
    GradedSeries r(spec_, origin_, level_sum_cap_);
    for (auto& [k, s] : parts_)
        r.add_part(k + dk, s);
    return r;
}

GradedSeries GradedSeries::substitute(const std::map<VarId, Series>& images) const
{
    Series probe = zero_series().substitute(images);
    GradedSeries r(spec_, probe.origin(), level_sum_cap_);
    for (auto& [k, s] : parts_)
        r.add_part(k, s.substitute(images).with_origin(r.origin_));
    return r;
}

GradedSeries GradedSeries::apply_graded_shift(int eps_weight,
                                              const std::vector<std::pair<VarId, Rat>>& dirs) const
{
    if (eps_weight <= 0)
        throw structural_error("apply_graded_shift: eps weight must be positive");
    GradedSeries r(spec_, origin_, level_sum_cap_);
    for (auto& [k, s] : parts_) {
        Series z = s;
        r.add_part(k, z);
        int steps = (spec_.max_eps - k) / eps_weight;
        for (int n = 1; n <= steps && !z.is_zero(); ++n) {
            Series next = z.zero_like();
            for (auto& [v, c] : dirs)
                next += z.diff(v) * c;
            z = next * (Rat(1) / n);
            r.add_part(k + n * eps_weight, z);
        }
    }
    return r;
}

GradedSeries GradedSeries::log_one_plus() const
{
    GradedSeries x = *this;
    Series p0 = x.part(0);
    if (p0.constant_term() != 1)
        throw domain_error("GradedSeries::log_one_plus: grade-0 constant must be 1");
    x.add_part(0, -Series::constant(spec_, Rat(1), origin_, level_sum_cap_));
    // nilpotency: every term of x has positive degree or negative grade
    if (!x.part(0).is_zero() && x.part(0).constant_term() != 0)
        throw domain_error("GradedSeries::log_one_plus: not of the form 1 + nilpotent");
    GradedSeries r(spec_, origin_, level_sum_cap_);
    GradedSeries pow = GradedSeries::one(spec_, origin_, level_sum_cap_);
    int bound = spec_.max_degree + (spec_.max_eps - spec_.min_eps) + 2;
    for (int n = 1; n <= bound; ++n) {
        pow = pow * x;
        if (pow.is_zero())
            return r;
        Rat sign = (n % 2 == 1) ? Rat(1) : Rat(-1);
        r += pow * (sign / n);
    }
    throw domain_error("GradedSeries::log_one_plus: did not terminate");
}

GradedSeries GradedSeries::truncated_to(const TruncationSpec& spec, int level_sum_cap) const
{
    GradedSeries r(spec, origin_, level_sum_cap);
    for (auto& [k, s] : parts_) {
        if (k < spec.min_eps || k > spec.max_eps)
            continue;
        r.add_part(k, s.truncated_to(spec, level_sum_cap).with_origin(r.origin()));
    }
    return r;
}

GradedSeries GradedSeries::with_origin(std::vector<Rat> origin) const
{
    GradedSeries r(spec_, origin, level_sum_cap_);
    for (auto& [k, s] : parts_)
        r.parts_.emplace(k, s.with_origin(origin));
    return r;
}

bool GradedSeries::operator==(const GradedSeries& o) const
{
    return spec_ == o.spec_ && origin_ == o.origin_ && parts_ == o.parts_;
}

GradedSeries apply_exp_via_conjugation(const GradedSeries& G,
                                       const std::function<GradedSeries(const GradedSeries&)>& T,
                                       int max_iter)
{
    GradedSeries acc = GradedSeries::one(G.spec(), G.origin(), G.level_sum_cap());
    GradedSeries a = acc;
    for (int m = 1; m <= max_iter; ++m) {
        a = T(a) * (Rat(1) / m);
        if (a.is_zero())
            return G + acc.log_one_plus();
        acc += a;
    }
    throw domain_error("apply_exp_via_conjugation: iteration did not terminate");
}

} // namespace owdvv

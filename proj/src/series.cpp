#include "owdvv/series.hpp"

#include <algorithm>

namespace owdvv {

Series::Series(TruncationSpec spec, std::vector<Rat> origin, int level_sum_cap)
    : spec_(spec), level_sum_cap_(level_sum_cap), origin_(std::move(origin))
{
    spec_.validate();
    if (origin_.empty())
        origin_.assign(spec_.n_vars(), Rat(0));
    if (static_cast<int>(origin_.size()) != spec_.n_vars())
        throw structural_error("Series: origin size must be n_closed+1");
}

Series Series::zero(TruncationSpec spec, std::vector<Rat> origin, int level_sum_cap)
{
    return Series(spec, std::move(origin), level_sum_cap);
}

Series Series::constant(TruncationSpec spec, const Rat& c, std::vector<Rat> origin, int level_sum_cap)
{
    Series s(spec, std::move(origin), level_sum_cap);
    s.add_term(Monomial::one(), c);
    return s;
}

Series Series::variable(TruncationSpec spec, VarId v, std::vector<Rat> origin, int level_sum_cap)
{
    Series s(spec, std::move(origin), level_sum_cap);
    s.add_term(Monomial(v), Rat(1));
    return s;
}

Series Series::zero_like() const { return Series(spec_, origin_, level_sum_cap_); }

Series Series::constant_like(const Rat& c) const
{
    Series s = zero_like();
    s.add_term(Monomial::one(), c);
    return s;
}

Series Series::variable_like(VarId v) const
{
    Series s = zero_like();
    s.add_term(Monomial(v), Rat(1));
    return s;
}

bool Series::in_ring(const Monomial& m) const
{
    if (m.total_degree() > spec_.max_degree)
        return false;
    if (m.max_level() > spec_.max_level)
        return false;
    if (m.max_alpha() > spec_.n_vars())
        return false;
    if (level_sum_cap_ != kUnboundedLevelSum && m.level_sum() > level_sum_cap_)
        return false;
    return true;
}

bool Series::same_ring(const Series& o) const
{
    return spec_ == o.spec_ && level_sum_cap_ == o.level_sum_cap_ && origin_ == o.origin_;
}

void Series::check_compatible(const Series& o) const
{
    if (!same_ring(o))
        throw structural_error("Series: mismatched truncation spec or origin");
}

Rat Series::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Series& Series::add_term(const Monomial& m, const Rat& c)
{
    if (c == 0 || !in_ring(m))
        return *this;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

Series Series::operator-() const
{
    Series r = zero_like();
    for (auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Series& Series::operator+=(const Series& o)
{
    check_compatible(o);
    for (auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    check_compatible(o);
    for (auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Series Series::operator+(const Series& o) const
{
    Series r = *this;
    r += o;
    return r;
}

Series Series::operator-(const Series& o) const
{
    Series r = *this;
    r -= o;
    return r;
}

Series Series::operator*(const Series& o) const
{
    check_compatible(o);
    Series r = zero_like();
    if (terms_.empty() || o.terms_.empty())
        return r;
    const Series& a = terms_.size() <= o.terms_.size() ? *this : o;
    const Series& b = terms_.size() <= o.terms_.size() ? o : *this;
    // Bucket the larger operand by (degree, level sum) so whole blocks of
    // dead pairs are skipped.
    struct Entry {
        const Monomial* m;
        const Rat* c;
        int lsum;
    };
    std::vector<std::vector<Entry>> buckets(spec_.max_degree + 1);
    for (auto& [mb, cb] : b.terms_)
        buckets[mb.total_degree()].push_back({&mb, &cb, mb.level_sum()});
    bool capped = level_sum_cap_ != kUnboundedLevelSum;
    for (auto& [ma, ca] : a.terms_) {
        int da = ma.total_degree();
        int la = ma.level_sum();
        for (int db = 0; da + db <= spec_.max_degree; ++db) {
            for (auto& e : buckets[db]) {
                if (capped && la + e.lsum > level_sum_cap_)
                    continue;
                auto [it, inserted] = r.terms_.try_emplace(ma.times(*e.m));
                it->second += ca * *e.c;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    }
    return r;
}

Series Series::operator*(const Rat& c) const
{
    Series r = zero_like();
    if (c == 0)
        return r;
    for (auto& [m, v] : terms_)
        r.terms_.emplace(m, v * c);
    return r;
}

Series& Series::operator*=(const Rat& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Series operator*(const Rat& c, const Series& s) { return s * c; }

Series Series::diff(VarId v) const
{
    if (v.alpha < 1 || v.alpha > spec_.n_vars() || v.level < 0 || v.level > spec_.max_level)
        throw structural_error("Series::diff: variable outside truncation spec");
    Series r = zero_like();
    for (auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        auto [q, ok] = m.divided_by(v);
        r.add_term(q, c * e);
    }
    return r;
}

Series Series::substitute(const std::map<VarId, Series>& images) const
{
    const Series* tmpl = images.empty() ? this : &images.begin()->second;
    for (auto& [v, img] : images)
        if (!tmpl->same_ring(img))
            throw structural_error("Series::substitute: images live in different rings");

    // Pure level-0 shifts relocate the origin: split them off first.
    std::vector<Rat> new_origin = tmpl->origin_;
    std::map<VarId, Series> work;
    bool relocated = false;
    for (auto& [v, img] : images) {
        Series var_only = tmpl->variable_like(v);
        Series rest = img - var_only;
        if (v.level == 0 && !rest.is_zero() && rest.terms().size() == 1 &&
            rest.terms().begin()->first.is_one()) {
            // image == v + c: series re-expanded around origin - c, coefficients unchanged
            new_origin[v.alpha - 1] -= rest.terms().begin()->second;
            relocated = true;
        } else {
            work.emplace(v, img);
        }
    }

    Series result(tmpl->spec_, new_origin, tmpl->level_sum_cap_);
    std::map<VarId, std::vector<Series>> powers; // powers[v][k-1] = image^k, with relocated origin
    auto image_power = [&](VarId v, int e) -> const Series& {
        auto it = powers.find(v);
        if (it == powers.end()) {
            Series base = result.zero_like();
            auto im = work.find(v);
            if (im != work.end()) {
                for (auto& [m, c] : im->second.terms())
                    base.add_term(m, c);
            } else {
                base.add_term(Monomial(v), Rat(1));
            }
            it = powers.emplace(v, std::vector<Series>{base}).first;
        }
        auto& vec = it->second;
        while (static_cast<int>(vec.size()) < e)
            vec.push_back(vec.back() * vec.front());
        return vec[e - 1];
    };

    for (auto& [m, c] : terms_) {
        Series term = result.constant_like(c);
        for (auto& [v, e] : m.factors()) {
            term = term * image_power(v, e);
            if (term.is_zero())
                break;
        }
        result += term;
    }
    (void)relocated;
    return result;
}

Series Series::taylor_shift(VarId v, const Rat& c) const
{
    if (c == 0)
        return *this;
    Series r = zero_like();
    for (auto& [m, coeff] : terms_) {
        int e = m.exponent(v);
        Monomial rest = m;
        for (int k = 0; k < e; ++k)
            rest = rest.divided_by(v).first;
        // (v + c)^e expanded
        Rat cpow(1);
        for (int k = e; k >= 0; --k) {
            // coefficient of v^k: C(e,k) c^{e-k}
            Rat w = coeff * rat_binomial(e, k) * rat_pow(c, e - k);
            r.add_term(rest.times(v, k), w);
        }
    }
    return r;
}

Series Series::exp_truncated() const
{
    if (constant_term() != 0)
        throw domain_error("Series::exp_truncated: nonzero constant term");
    Series r = constant_like(Rat(1));
    Series pow = constant_like(Rat(1));
    for (int n = 1; n <= spec_.max_degree + 1; ++n) {
        pow = pow * *this;
        if (pow.is_zero())
            break;
        r += pow * (Rat(1) / rat_factorial(n));
    }
    return r;
}

Series Series::log_truncated() const
{
    if (constant_term() != 1)
        throw domain_error("Series::log_truncated: constant term must be 1");
    Series x = *this - constant_like(Rat(1));
    Series r = zero_like();
    Series pow = constant_like(Rat(1));
    for (int n = 1; n <= spec_.max_degree + 1; ++n) {
        pow = pow * x;
        if (pow.is_zero())
            break;
        Rat sign = (n % 2 == 1) ? Rat(1) : Rat(-1);
        r += pow * (sign / n);
    }
    return r;
}

Series Series::truncated_to(const TruncationSpec& spec, int level_sum_cap) const
{
    if (spec.n_closed != spec_.n_closed)
        throw structural_error("Series::truncated_to: n_closed differs");
    Series r(spec, origin_, level_sum_cap);
    for (auto& [m, c] : terms_)
        r.add_term(m, c);
    return r;
}

Series Series::primary_part() const
{
    Series r = zero_like();
    for (auto& [m, c] : terms_)
        if (m.level_sum() == 0)
            r.terms_.emplace(m, c);
    return r;
}

Series Series::without_degree_at_most(int cutoff) const
{
    Series r = zero_like();
    for (auto& [m, c] : terms_)
        if (m.total_degree() > cutoff)
            r.terms_.emplace(m, c);
    return r;
}

Series Series::with_origin(std::vector<Rat> origin) const
{
    Series r(spec_, std::move(origin), level_sum_cap_);
    r.terms_ = terms_;
    return r;
}

bool Series::operator==(const Series& o) const
{
    return spec_ == o.spec_ && origin_ == o.origin_ && terms_ == o.terms_;
}

} // namespace owdvv

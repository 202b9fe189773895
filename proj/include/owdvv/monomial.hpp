#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace owdvv {

// A variable t^alpha_d. alpha is 1-based (1..N+1), d >= 0 is the descendant level.
struct VarId {
    std::int32_t alpha = 1;
    std::int32_t level = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Sparse exponent vector with keys in canonical (alpha, level) order and no
// zero exponents. Comparison is lexicographic on the flattened factor list,
// which gives the deterministic term order used everywhere.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(VarId v, int exp = 1)
    {
        if (exp > 0)
            factors_.push_back({v, exp});
    }

    static Monomial one() { return Monomial(); }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int total_degree() const
    {
        int d = 0;
        for (auto& [v, e] : factors_)
            d += e;
        return d;
    }

    int level_sum() const
    {
        int s = 0;
        for (auto& [v, e] : factors_)
            s += v.level * e;
        return s;
    }

    int max_level() const
    {
        int m = 0;
        for (auto& [v, e] : factors_)
            if (v.level > m)
                m = v.level;
        return m;
    }

    int max_alpha() const
    {
        int m = 0;
        for (auto& [v, e] : factors_)
            if (v.alpha > m)
                m = v.alpha;
        return m;
    }

    int exponent(VarId v) const
    {
        for (auto& [w, e] : factors_)
            if (w == v)
                return e;
        return 0;
    }

    Monomial times(const Monomial& o) const
    {
        Monomial r;
        r.factors_.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first)
                r.factors_.push_back(*a++);
            else if (b->first < a->first)
                r.factors_.push_back(*b++);
            else {
                r.factors_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        r.factors_.insert(r.factors_.end(), a, factors_.end());
        r.factors_.insert(r.factors_.end(), b, o.factors_.end());
        return r;
    }

    Monomial times(VarId v, int exp = 1) const { return times(Monomial(v, exp)); }

    // Divides by v^1; second element false when v does not occur.
    std::pair<Monomial, bool> divided_by(VarId v) const
    {
        Monomial r;
        bool found = false;
        r.factors_.reserve(factors_.size());
        for (auto& f : factors_) {
            if (f.first == v) {
                found = true;
                if (f.second > 1)
                    r.factors_.push_back({f.first, f.second - 1});
            } else {
                r.factors_.push_back(f);
            }
        }
        return {r, found};
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        auto n = std::min(a.factors_.size(), b.factors_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.factors_[i].first != b.factors_[i].first)
                return a.factors_[i].first < b.factors_[i].first;
            if (a.factors_[i].second != b.factors_[i].second)
                return a.factors_[i].second > b.factors_[i].second; // higher power first, so prefixes order late
        }
        return a.factors_.size() < b.factors_.size();
    }

private:
    std::vector<Factor> factors_;
};

} // namespace owdvv

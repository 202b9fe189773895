#include "owdvv/moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace owdvv::moduli {

namespace {

VarId tvar(int level) { return {1, level}; }
VarId svar(int level) { return {2, level}; }

long sum_of(const std::vector<int>& v)
{
    long s = 0;
    for (int x : v)
        s += x;
    return s;
}

// correlator <-> coefficient bookkeeping: coeff(prod t_{d}^{m_d}) = <...> / prod m_d!
Rat automorphism_factor(const std::vector<int>& levels)
{
    Rat f(1);
    int run = 1;
    for (std::size_t i = 1; i <= levels.size(); ++i) {
        if (i < levels.size() && levels[i] == levels[i - 1])
            ++run;
        else {
            f *= rat_factorial(run);
            run = 1;
        }
    }
    return f;
}

struct CorrelatorCache {
    std::mutex mu;
    std::map<std::pair<int, std::vector<int>>, Rat> dvv;
    std::map<std::pair<std::vector<int>, int>, Rat> pst0;
};

CorrelatorCache& cache()
{
    static CorrelatorCache c;
    return c;
}

// Enumerates multisets d_1 <= ... <= d_n of levels with fixed size and sum.
void enumerate_level_multisets(int n, int sum, int min_d, int max_level,
                               std::vector<int>& cur, const std::function<void()>& emit)
{
    if (n == 0) {
        if (sum == 0)
            emit();
        return;
    }
    for (int d = min_d; d <= max_level && d * n <= sum; ++d) {
        cur.push_back(d);
        enumerate_level_multisets(n - 1, sum - d, d, max_level, cur, emit);
        cur.pop_back();
    }
}

Monomial monomial_from_levels(int alpha, const std::vector<int>& levels)
{
    Monomial m;
    for (int d : levels)
        m = m.times(VarId{alpha, d});
    return m;
}

} // namespace

Rat kw_correlator_genus0(const std::vector<int>& levels)
{
    int n = static_cast<int>(levels.size());
    if (n <= 2)
        throw domain_error("kw_correlator: unstable (g=0 needs n >= 3)");
    if (sum_of(levels) != n - 3)
        return Rat(0);
    Rat r = rat_factorial(n - 3);
    for (int d : levels)
        r /= rat_factorial(d);
    return r;
}

Rat dvv_correlator(int genus, std::vector<int> levels)
{
    if (genus < 0)
        return Rat(0);
    int n = static_cast<int>(levels.size());
    if (n == 0 || 2 * genus - 2 + n <= 0)
        return Rat(0);
    if (sum_of(levels) != 3 * genus - 3 + n)
        return Rat(0);
    std::sort(levels.begin(), levels.end(), std::greater<int>());
    auto key = std::make_pair(genus, levels);
    {
        std::lock_guard<std::mutex> lk(cache().mu);
        auto it = cache().dvv.find(key);
        if (it != cache().dvv.end())
            return it->second;
    }

    int k = levels[0];
    int m = k - 1; // recursion index, m >= -1
    std::vector<int> rest(levels.begin() + 1, levels.end());
    Rat two_pow = rat_pow(Rat(2), m + 1);
    Rat lhs = rat_double_factorial_odd(k + 1) / two_pow; // (2k+1)!!/2^{k}
    Rat rhs(0);

    // transport terms
    for (std::size_t j = 0; j < rest.size(); ++j) {
        if (j > 0 && rest[j] == rest[j - 1])
            continue; // handle each distinct value once, with multiplicity
        int mult = static_cast<int>(std::count(rest.begin(), rest.end(), rest[j]));
        int d = rest[j];
        if (d + m < 0)
            continue;
        std::vector<int> next = rest;
        next.erase(std::find(next.begin(), next.end(), d));
        next.push_back(d + m);
        Rat w = rat_double_factorial_odd(d + m + 1) / (two_pow * rat_double_factorial_odd(d));
        rhs += w * mult * dvv_correlator(genus, next);
    }

    // quadratic terms
    if (m >= 1) {
        // sub-multiset enumeration with binomial weights
        std::vector<std::pair<int, int>> groups; // (value, multiplicity)
        for (int x : rest) {
            if (!groups.empty() && groups.back().first == x)
                groups.back().second++;
            else
                groups.push_back({x, 1});
        }
        for (int a = 0; a <= m - 1; ++a) {
            int b = m - 1 - a;
            Rat w = rat_double_factorial_odd(a + 1) * rat_double_factorial_odd(b + 1) /
                    (two_pow * 2);
            // nonseparating term
            {
                std::vector<int> next = rest;
                next.push_back(a);
                next.push_back(b);
                rhs += w * dvv_correlator(genus - 1, next);
            }
            // separating terms
            std::function<void(std::size_t, std::vector<int>&, std::vector<int>&, Rat)> split =
                [&](std::size_t gi, std::vector<int>& left, std::vector<int>& right, Rat weight) {
                    if (gi == groups.size()) {
                        for (int g1 = 0; g1 <= genus; ++g1) {
                            std::vector<int> l = left, r = right;
                            l.push_back(a);
                            r.push_back(b);
                            Rat va = dvv_correlator(g1, l);
                            if (va == 0)
                                continue;
                            rhs += w * weight * va * dvv_correlator(genus - g1, r);
                        }
                        return;
                    }
                    auto [val, mult] = groups[gi];
                    for (int take = 0; take <= mult; ++take) {
                        for (int t = 0; t < take; ++t)
                            left.push_back(val);
                        for (int t = take; t < mult; ++t)
                            right.push_back(val);
                        split(gi + 1, left, right, weight * rat_binomial(mult, take));
                        for (int t = 0; t < take; ++t)
                            left.pop_back();
                        for (int t = take; t < mult; ++t)
                            right.pop_back();
                    }
                };
            std::vector<int> left, right;
            split(0, left, right, Rat(1));
        }
    }

    // exceptional constants
    if (m == 0 && genus == 1 && rest.empty())
        rhs += Rat(1, 16);
    if (m == -1 && genus == 0 && rest.size() == 2 && rest[0] == 0 && rest[1] == 0)
        rhs += Rat(1);

    Rat val = rhs / lhs;
    std::lock_guard<std::mutex> lk(cache().mu);
    cache().dvv.emplace(key, val);
    return val;
}

// ----- genus-1 closure via topological recursion ----------------------------

namespace {

// Generic fixpoint solver for genus-1 recursions of the shape
//   dF1/dt^alpha_{a+1} = RHS(alpha, a; F1),
// where RHS reads F1 only through level-0 derivatives. Coefficients are
// determined by induction on the level sum, anchored at the supplied primary
// data. Each target monomial is claimed by its smallest positive-level
// variable.
Series solve_genus1_recursion(
    const Series& primary_data, int n_alpha,
    const std::function<Series(int, int, const Series&)>& rhs_fn)
{
    const TruncationSpec& spec = primary_data.spec();
    Series f1 = primary_data;
    int cap = primary_data.level_sum_cap();
    int bound = (cap == kUnboundedLevelSum ? spec.max_degree * spec.max_level : cap) + 2;
    for (int iter = 0; iter < bound; ++iter) {
        Series next = primary_data;
        for (int alpha = 1; alpha <= n_alpha; ++alpha) {
            for (int a = 0; a + 1 <= spec.max_level; ++a) {
                Series rhs = rhs_fn(alpha, a, f1);
                VarId v{alpha, a + 1};
                for (auto& [mp, c] : rhs.terms()) {
                    Monomial target = mp.times(v);
                    if (!next.in_ring(target))
                        continue;
                    // canonical claim: v must be the smallest positive-level variable
                    VarId smallest{0, 0};
                    bool found = false;
                    for (auto& [w, e] : target.factors())
                        if (w.level >= 1) {
                            smallest = w;
                            found = true;
                            break;
                        }
                    if (!found || !(smallest == v))
                        continue;
                    next.add_term(target, c / target.exponent(v));
                }
            }
        }
        if (next == f1)
            return f1;
        f1 = next;
    }
    throw domain_error("solve_genus1_recursion: no fixpoint within level-sum bound");
}

} // namespace

Series kw_genus0_series(const Series& tmpl)
{
    Series f = tmpl.zero_like();
    const TruncationSpec& spec = tmpl.spec();
    for (int n = 3; n <= spec.max_degree; ++n) {
        std::vector<int> cur;
        enumerate_level_multisets(n, n - 3, 0, spec.max_level, cur, [&]() {
            Monomial m = monomial_from_levels(1, cur);
            if (!tmpl.in_ring(m))
                return;
            f.add_term(m, kw_correlator_genus0(cur) / automorphism_factor(cur));
        });
    }
    return f;
}

Series kw_genus1_series(const Series& tmpl)
{
    Series f0 = kw_genus0_series(tmpl);
    // dF1/dt_{a+1} = d2F0/dt_a dt_0 * dF1/dt_0 + 1/24 d3F0/dt_a dt_0 dt_0
    std::vector<Series> d2(tmpl.spec().max_level + 1, tmpl.zero_like());
    std::vector<Series> d3(tmpl.spec().max_level + 1, tmpl.zero_like());
    for (int a = 0; a <= tmpl.spec().max_level; ++a) {
        d2[a] = f0.diff(tvar(a)).diff(tvar(0));
        d3[a] = d2[a].diff(tvar(0));
    }
    auto rhs = [&](int alpha, int a, const Series& f1) {
        (void)alpha;
        return d2[a] * f1.diff(tvar(0)) + d3[a] * Rat(1, 24);
    };
    return solve_genus1_recursion(tmpl.zero_like(), 1, rhs);
}

Rat kw_correlator(int genus, const std::vector<int>& levels, bool allow_oracle_backend)
{
    int n = static_cast<int>(levels.size());
    if (2 * genus - 2 + n <= 0)
        throw domain_error("kw_correlator: unstable input");
    if (genus == 0)
        return kw_correlator_genus0(levels);
    if (genus >= 2) {
        if (!allow_oracle_backend)
            throw unsupported_feature_error(
                "kw_correlator: genus >= 2 requires the recursion oracle backend");
        return dvv_correlator(genus, levels);
    }
    std::vector<int> sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    if (sum_of(sorted) != n)
        return Rat(0); // dim M_{1,n} = n
    int maxd = sorted.back();
    TruncationSpec spec;
    spec.n_closed = 1;
    spec.max_degree = n + 2;
    spec.max_level = std::max(maxd, 1);
    spec.min_eps = -2;
    spec.max_eps = 0;
    static std::mutex mu;
    static std::map<std::pair<int, int>, Series> table;
    Series f1;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = table.lower_bound({spec.max_degree, spec.max_level});
        if (it != table.end() && it->first.first >= spec.max_degree &&
            it->first.second >= spec.max_level)
            f1 = it->second;
        else {
            Series tmpl(spec, {Rat(0), Rat(0)});
            f1 = kw_genus1_series(tmpl);
            table.emplace(std::make_pair(spec.max_degree, spec.max_level), f1);
        }
    }
    return f1.coefficient(monomial_from_levels(1, sorted)) * automorphism_factor(sorted);
}

// ----- PST -------------------------------------------------------------------

Rat pst_correlator_genus0_s0(std::vector<int> closed_levels, int boundary_count)
{
    std::sort(closed_levels.begin(), closed_levels.end());
    int l = static_cast<int>(closed_levels.size());
    int k = boundary_count;
    if (2 * sum_of(closed_levels) != k + 2 * l - 3)
        return Rat(0);
    auto key = std::make_pair(closed_levels, k);
    {
        std::lock_guard<std::mutex> lk(cache().mu);
        auto it = cache().pst0.find(key);
        if (it != cache().pst0.end())
            return it->second;
    }
    Rat val(0);
    if (l == 1 && k == 1 && closed_levels[0] == 0) {
        val = 1; // the disk correlator seeded by the open string inhomogeneity
    } else if (l > 0 && closed_levels.front() == 0) {
        // open string: remove one tau_0, lower one remaining insertion
        std::vector<int> rest(closed_levels.begin() + 1, closed_levels.end());
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (j > 0 && rest[j] == rest[j - 1])
                continue;
            if (rest[j] == 0)
                continue;
            int mult = static_cast<int>(std::count(rest.begin(), rest.end(), rest[j]));
            std::vector<int> next = rest;
            next.erase(std::find(next.begin(), next.end(), rest[j]));
            next.push_back(rest[j] - 1);
            val += mult * pst_correlator_genus0_s0(next, k);
        }
        // boundary insertions sit at level 0 and are not lowered
    } else {
        // all d_i >= 1: closed formula (2 sum d - l + 1)! / prod (2 d_i - 1)!!
        val = rat_factorial(2 * sum_of(closed_levels) - l + 1);
        for (int d : closed_levels)
            val /= rat_double_factorial_odd(d);
    }
    std::lock_guard<std::mutex> lk(cache().mu);
    cache().pst0.emplace(key, val);
    return val;
}

Series pst_genus0_s0_series(const Series& tmpl)
{
    Series f = tmpl.zero_like();
    const TruncationSpec& spec = tmpl.spec();
    // k = 2 sum d - 2l + 3 is forced by the dimension constraint
    for (int l = 0; l <= spec.max_degree; ++l) {
        int max_sum = tmpl.level_sum_cap() == kUnboundedLevelSum
                          ? spec.max_level * l
                          : std::min(spec.max_level * l, tmpl.level_sum_cap());
        for (int sum = 0; sum <= max_sum; ++sum) {
            int k = 2 * sum - 2 * l + 3;
            if (k < 0 || l + k > spec.max_degree)
                continue;
            std::vector<int> cur;
            enumerate_level_multisets(l, sum, 0, spec.max_level, cur, [&]() {
                Monomial m = monomial_from_levels(1, cur).times(svar(0), k);
                if (!tmpl.in_ring(m))
                    return;
                Rat c = pst_correlator_genus0_s0(cur, k);
                if (c == 0)
                    return;
                f.add_term(m, c / (automorphism_factor(cur) * rat_factorial(k)));
            });
        }
    }
    return f;
}

Series pst_genus1_s0_series(const Series& tmpl, const Series& kw0, const Series& pst0)
{
    // open TRR-1 in the closed direction (alpha = 1), vanishing primary data
    int P = tmpl.spec().max_level;
    std::vector<Series> d2c(P + 1, tmpl.zero_like());
    std::vector<Series> d1o(P + 1, tmpl.zero_like());
    std::vector<Series> d2o(P + 1, tmpl.zero_like());
    for (int a = 0; a <= P; ++a) {
        d2c[a] = kw0.diff(tvar(a)).diff(tvar(0));
        d1o[a] = pst0.diff(tvar(a));
        d2o[a] = d1o[a].diff(svar(0));
    }
    auto rhs = [&](int alpha, int a, const Series& f1) {
        (void)alpha;
        return d2c[a] * f1.diff(tvar(0)) + d1o[a] * f1.diff(svar(0)) + d2o[a] * Rat(1, 2);
    };
    return solve_genus1_recursion(tmpl.zero_like(), 1, rhs);
}

GradedSeries pst_log_full(const TruncationSpec& ring, int level_sum_cap)
{
    if (ring.n_closed != 1)
        throw structural_error("pst_log_full: expects the two-variable ring");
    TruncationSpec base = ring;
    base.min_eps = std::min(ring.min_eps, -1);
    base.max_eps = std::max(ring.max_eps, 0);
    Series tmpl(base, {Rat(0), Rat(0)}, level_sum_cap);
    Series f0 = pst_genus0_s0_series(tmpl);
    Series kw0 = kw_genus0_series(tmpl);
    Series f1 = pst_genus1_s0_series(tmpl, kw0, f0);

    // Widen the grade window in both directions: a tau-level piece climbs at
    // most as far as the level sum of its s_{>=1} factors, and dips below the
    // open window only as far as it can climb back (plus the depth of one
    // D-chain).
    int wup = level_sum_cap == kUnboundedLevelSum ? base.max_degree * base.max_level
                                                  : std::min(level_sum_cap,
                                                             base.max_degree * base.max_level);
    TruncationSpec wide = base;
    wide.max_eps = base.max_eps + wup;
    wide.min_eps = base.min_eps - wup - base.max_level - 2;
    Series wtmpl(wide, {Rat(0), Rat(0)}, level_sum_cap);

    GradedSeries G(wide, wtmpl.origin(), level_sum_cap);
    G.add_part(-1, f0.truncated_to(wide, level_sum_cap));
    G.add_part(0, f1.truncated_to(wide, level_sum_cap));

    GradedSeries dG = G.diff(svar(0));
    auto T = [&](const GradedSeries& x) {
        GradedSeries out(wide, wtmpl.origin(), level_sum_cap);
        // y after j steps is D^j(x) with D(y) = dy/ds_0 + dG * y
        GradedSeries y = x.diff(svar(0)) + dG * x;
        for (int n = 1; n <= wide.max_level; ++n) {
            y = y.diff(svar(0)) + dG * y; // now D^{n+1}(x)
            if (y.is_zero())
                break;
            GradedSeries sn(wide, wtmpl.origin(), level_sum_cap);
            sn.set_part(0, wtmpl.variable_like(svar(n)));
            out += (sn * y).shifted_grade(n) * (Rat(1) / rat_factorial(n + 1));
        }
        return out;
    };
    GradedSeries full = apply_exp_via_conjugation(G, T, 2 * wide.max_degree + 6);

    // Grades above the window are genus >= 2 descendant data implied by the
    // relation; the window itself is exact by genus closure. Discard the rest.
    return full.truncated_to(ring, level_sum_cap);
}

TruncationSpec pst_ring_for_theta(const TruncationSpec& out, int out_level_sum_cap)
{
    int lam = out_level_sum_cap == kUnboundedLevelSum ? out.max_degree * out.max_level
                                                      : std::min(out_level_sum_cap,
                                                                 out.max_degree * out.max_level);
    TruncationSpec ring = out;
    // a kept monomial X can absorb at most 2*Lambda(X) - l(X) + 3 powers of
    // s_0 under the constant shift, so deg(X) + k <= 2*Lambda + 3
    ring.max_degree = std::max(out.max_degree, 2 * lam + 3);
    return ring;
}

GradedSeries pst_theta_shift_direct(const GradedSeries& pst, const Rat& theta)
{
    const TruncationSpec& spec = pst.spec();
    int cap = pst.level_sum_cap();
    Series tmpl(spec, pst.origin(), cap);

    // linear level-raising part of the substitution
    std::map<VarId, Series> images;
    for (int i = 0; i <= spec.max_level; ++i) {
        Series img = tmpl.variable_like(svar(i));
        for (int j = 1; i + j <= spec.max_level; ++j) {
            Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
            Rat cs = sign * rat_pow(theta, 2 * j) / (rat_pow(Rat(2), j) * rat_factorial(j));
            Rat ct = sign * rat_pow(theta, 2 * j - 1) /
                     (Rat(2 * j - 1) * rat_pow(Rat(2), j - 1) * rat_factorial(j - 1));
            img.add_term(Monomial(svar(i + j)), cs);
            img.add_term(Monomial(tvar(i + j)), ct);
        }
        images.emplace(svar(i), img);
    }
    GradedSeries shifted = pst.substitute(images);

    // constant shift s_0 -> s_0 + theta, expanded against the stored data
    GradedSeries out(spec, pst.origin(), cap);
    for (auto& [k, s] : shifted.parts())
        out.add_part(k, s.taylor_shift(svar(0), theta));

    // additive correction at grade -1
    Series add = tmpl.zero_like();
    for (int j = 1; j - 1 <= spec.max_level; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        add.add_term(Monomial(svar(j - 1)),
                     sign * rat_pow(theta, 2 * j) / (rat_pow(Rat(2), j) * rat_factorial(j)));
        add.add_term(Monomial(tvar(j - 1)),
                     sign * rat_pow(theta, 2 * j - 1) /
                         (Rat(2 * j - 1) * rat_pow(Rat(2), j - 1) * rat_factorial(j - 1)));
    }
    add.add_term(Monomial::one(), -rat_pow(theta, 3) / 6);
    out.add_part(-1, add);
    return out;
}

Series map_vars(const Series& in, const Series& tmpl, const std::vector<int>& alpha_map,
                const std::vector<Rat>& scale)
{
    Series out = tmpl.zero_like();
    for (auto& [m, c] : in.terms()) {
        Monomial img;
        Rat w = c;
        for (auto& [v, e] : m.factors()) {
            int na = alpha_map[v.alpha - 1];
            img = img.times(VarId{na, v.level}, e);
            w *= rat_pow(scale[v.alpha - 1], e);
        }
        out.add_term(img, w);
    }
    return out;
}

// ----- potential-level builders -----------------------------------------------

LogPotential build_kw(const std::vector<Rat>& a, const TruncationSpec& spec, int level_sum_cap)
{
    int n = spec.n_closed;
    if (static_cast<int>(a.size()) != n)
        throw domain_error("build_kw: need one rescaling per closed direction");
    for (auto& ai : a)
        if (ai == 0)
            throw domain_error("build_kw: rescalings must be nonzero");
    if (spec.max_eps >= 2)
        throw unsupported_feature_error(
            "build_kw: closed genus >= 2 sits behind the recursion oracle, not the builder");

    std::vector<Rat> unit(n + 1, Rat(0));
    for (int i = 0; i < n; ++i)
        unit[i] = Rat(1) / a[i];
    LogPotential pot = LogPotential::empty(spec, RatMat::identity(n), unit, {}, level_sum_cap);

    TruncationSpec one_var = spec;
    one_var.n_closed = 1;
    Series tmpl1(one_var, {Rat(0), Rat(0)}, level_sum_cap);
    Series kw0 = kw_genus0_series(tmpl1);
    Series kw1 = (spec.max_eps >= 0) ? kw_genus1_series(tmpl1) : tmpl1.zero_like();

    Series c0 = pot.zero_series(), c1 = pot.zero_series();
    for (int i = 0; i < n; ++i) {
        std::vector<int> amap = {i + 1, n + 1};
        std::vector<Rat> sc = {a[i], Rat(0)};
        // a_i^{2g-2} F_g(a_i t^i_*)
        c0 += map_vars(kw0, pot.zero_series(), amap, sc) * (Rat(1) / (a[i] * a[i]));
        if (!kw1.is_zero())
            c1 += map_vars(kw1, pot.zero_series(), amap, sc);
    }
    pot.set_closed(0, c0);
    pot.set_closed(1, c1);
    return pot;
}

LogPotential build_pst(const std::vector<Rat>& a, const TruncationSpec& spec, int level_sum_cap)
{
    int n = spec.n_closed;
    if (a.empty() || a[0] == 0)
        throw domain_error("build_pst: a_1 must be nonzero");
    if (spec.max_eps >= 1)
        throw unsupported_feature_error("build_pst: the open sector stops at genus 1");
    std::vector<Rat> unit(n + 1, Rat(0));
    for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i)
        unit[i] = Rat(1) / a[i];
    LogPotential pot = LogPotential::empty(spec, RatMat::identity(n), unit, {}, level_sum_cap);

    TruncationSpec ring = spec;
    ring.n_closed = 1;
    GradedSeries pst = pst_log_full(ring, level_sum_cap);
    std::vector<int> amap = {1, n + 1};
    std::vector<Rat> sc = {a[0], Rat(1)};
    pot.set_open(0, map_vars(pst.part(-1), pot.zero_series(), amap, sc));
    if (spec.max_eps >= 0)
        pot.set_open(1, map_vars(pst.part(0), pot.zero_series(), amap, sc));
    return pot;
}

LogPotential initial_pair(const std::vector<Rat>& a, const Rat& theta, const TruncationSpec& spec,
                          int level_sum_cap)
{
    if (spec.max_eps >= 1)
        throw unsupported_feature_error("initial_pair: the open sector stops at genus 1");
    LogPotential pot = build_kw(a, spec, level_sum_cap);

    TruncationSpec ring = spec;
    ring.n_closed = 1;
    TruncationSpec big = (theta == 0) ? ring : pst_ring_for_theta(ring, level_sum_cap);
    GradedSeries pst = pst_log_full(big, level_sum_cap);
    if (theta != 0)
        pst = pst_theta_shift_direct(pst, theta);
    pst = pst.truncated_to(ring, level_sum_cap);

    std::vector<int> amap = {1, spec.n_closed + 1};
    std::vector<Rat> sc = {a[0], Rat(1)};
    pot.set_open(0, map_vars(pst.part(-1), pot.zero_series(), amap, sc));
    if (spec.max_eps >= 0)
        pot.set_open(1, map_vars(pst.part(0), pot.zero_series(), amap, sc));
    return pot;
}

LogPotential theta_shift(const LogPotential& pot, const Rat& theta)
{
    // recover a_1 from the open quadratic term t^1_0 t^{N+1}_0
    int n = pot.n();
    Monomial m = Monomial(VarId{1, 0}).times(VarId{n + 1, 0});
    Rat a1 = pot.open_part(0).coefficient(m);
    if (a1 == 0)
        throw domain_error("theta_shift: open sector is not PST-type (no t^1 t^{N+1} term)");
    std::vector<Rat> a(n, Rat(1));
    a[0] = a1;
    LogPotential check = build_pst(a, pot.trunc, pot.level_sum_cap);
    if (!(check.open == pot.open))
        throw domain_error("theta_shift: open sector is not a PST open sector");

    LogPotential out = pot;
    if (theta == 0)
        return out;
    TruncationSpec ring = pot.trunc;
    ring.n_closed = 1;
    TruncationSpec big = pst_ring_for_theta(ring, pot.level_sum_cap);
    GradedSeries pst = pst_theta_shift_direct(pst_log_full(big, pot.level_sum_cap), theta)
                           .truncated_to(ring, pot.level_sum_cap);
    std::vector<int> amap = {1, n + 1};
    std::vector<Rat> sc = {a1, Rat(1)};
    out.set_open(0, map_vars(pst.part(-1), pot.zero_series(), amap, sc));
    if (pot.trunc.max_eps >= 0)
        out.set_open(1, map_vars(pst.part(0), pot.zero_series(), amap, sc));
    return out;
}

// ----- open correlator queries -------------------------------------------------

Rat pst_correlator(int genus, const std::vector<int>& closed_levels,
                   const std::vector<int>& boundary_levels)
{
    if (genus >= 2)
        throw unsupported_feature_error("pst_correlator: open sector stops at genus 1");
    if (genus < 0)
        return Rat(0);
    long dim_lhs = 2 * (sum_of(closed_levels) + sum_of(boundary_levels));
    long dim_rhs = 3 * genus - 3 + static_cast<long>(boundary_levels.size()) +
                   2 * static_cast<long>(closed_levels.size());
    if (dim_lhs != dim_rhs)
        return Rat(0);

    int deg = static_cast<int>(closed_levels.size() + boundary_levels.size());
    int maxlvl = 1;
    for (int d : closed_levels)
        maxlvl = std::max(maxlvl, d);
    for (int d : boundary_levels)
        maxlvl = std::max(maxlvl, d);
    TruncationSpec ring;
    ring.n_closed = 1;
    ring.max_degree = deg + 2;
    ring.max_level = maxlvl;
    ring.min_eps = -1;
    ring.max_eps = genus - 1;
    GradedSeries pst = pst_log_full(ring, kUnboundedLevelSum);

    std::vector<int> cl = closed_levels, bl = boundary_levels;
    std::sort(cl.begin(), cl.end());
    std::sort(bl.begin(), bl.end());
    Monomial m = monomial_from_levels(1, cl).times(monomial_from_levels(2, bl));
    return pst.part(genus - 1).coefficient(m) * automorphism_factor(cl) * automorphism_factor(bl);
}

} // namespace owdvv::moduli

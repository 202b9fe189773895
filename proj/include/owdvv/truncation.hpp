#pragma once

#include <limits>
#include <stdexcept>

namespace owdvv {

// Error taxonomy used across the library.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_feature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when exact data leaves the rational field or the rational spectrum
// assumption fails (see the fixture restriction on acceptance inputs).
struct unsupported_fixture_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kUnboundedLevelSum = std::numeric_limits<int>::max();

// Working quotient ring: variables t^alpha_d with alpha in 1..n_closed+1,
// d in 0..max_level, modulo monomials of total degree > max_degree, and
// an eps-grade window [min_eps, max_eps].
struct TruncationSpec {
    int n_closed = 1;
    int max_degree = 5;
    int max_level = 3;
    int min_eps = -2;
    int max_eps = 0;

    int n_vars() const { return n_closed + 1; }

    void validate() const
    {
        if (n_closed < 1)
            throw structural_error("TruncationSpec: n_closed must be >= 1");
        if (max_degree < 1)
            throw structural_error("TruncationSpec: max_degree must be >= 1");
        if (max_level < 0)
            throw structural_error("TruncationSpec: max_level must be >= 0");
        if (min_eps > max_eps)
            throw structural_error("TruncationSpec: min_eps > max_eps");
    }

    bool operator==(const TruncationSpec&) const = default;

    TruncationSpec with_degree(int d) const
    {
        TruncationSpec t = *this;
        t.max_degree = d;
        return t;
    }
    TruncationSpec with_level(int p) const
    {
        TruncationSpec t = *this;
        t.max_level = p;
        return t;
    }
};

} // namespace owdvv

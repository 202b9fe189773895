#include "owdvv/matrix.hpp"

namespace owdvv {

RatMat RatMat::identity(int n)
{
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool RatMat::is_zero() const
{
    for (auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

RatMat RatMat::operator+(const RatMat& o) const
{
    RatMat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const
{
    RatMat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] -= o.a_[i];
    return r;
}

RatMat RatMat::operator*(const RatMat& o) const
{
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

RatMat RatMat::operator*(const Rat& c) const
{
    RatMat r = *this;
    for (auto& x : r.a_)
        x *= c;
    return r;
}

RatMat RatMat::transposed() const
{
    RatMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

RatMat RatMat::inverse() const
{
    if (rows_ != cols_)
        throw domain_error("RatMat::inverse: not square");
    int n = rows_;
    RatMat a = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw domain_error("RatMat::inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0)
                continue;
            Rat f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const
{
    std::vector<Rat> r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                r[i] += at(i, j) * v[j];
    return r;
}

std::optional<std::vector<Rat>> solve_linear_system(RatMat a, std::vector<Rat> b)
{
    int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank) {
            for (int j = 0; j < cols; ++j)
                std::swap(a.at(piv, j), a.at(rank, j));
            std::swap(b[piv], b[rank]);
        }
        Rat d = a.at(rank, col);
        for (int j = 0; j < cols; ++j)
            a.at(rank, j) /= d;
        b[rank] /= d;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a.at(r, col) == 0)
                continue;
            Rat f = a.at(r, col);
            for (int j = 0; j < cols; ++j)
                a.at(r, j) -= f * a.at(rank, j);
            b[r] -= f * b[rank];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (b[r] != 0)
            return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (int r = 0; r < rank; ++r)
        x[pivot_col[r]] = b[r];
    return x;
}

MatSeries::MatSeries(int n, int order) : n_(n), coef_(order + 1, RatMat(n, n)) {}

MatSeries MatSeries::identity(int n, int order)
{
    MatSeries m(n, order);
    m.coef_[0] = RatMat::identity(n);
    return m;
}

MatSeries MatSeries::operator+(const MatSeries& o) const
{
    MatSeries r = *this;
    for (int i = 0; i <= order(); ++i)
        r.coef_[i] = r.coef_[i] + o.coef_[i];
    return r;
}

MatSeries MatSeries::operator-(const MatSeries& o) const
{
    MatSeries r = *this;
    for (int i = 0; i <= order(); ++i)
        r.coef_[i] = r.coef_[i] - o.coef_[i];
    return r;
}

MatSeries MatSeries::operator*(const MatSeries& o) const
{
    MatSeries r(n_, order());
    for (int i = 0; i <= order(); ++i)
        for (int j = 0; i + j <= order() && j <= o.order(); ++j)
            r.coef_[i + j] = r.coef_[i + j] + coef_[i] * o.coef(j);
    return r;
}

MatSeries MatSeries::operator*(const Rat& c) const
{
    MatSeries r = *this;
    for (auto& m : r.coef_)
        m = m * c;
    return r;
}

MatSeries MatSeries::transposed() const
{
    MatSeries r = *this;
    for (auto& m : r.coef_)
        m = m.transposed();
    return r;
}

MatSeries MatSeries::negated_argument() const
{
    MatSeries r = *this;
    for (int i = 1; i <= order(); i += 2)
        r.coef_[i] = r.coef_[i] * Rat(-1);
    return r;
}

MatSeries MatSeries::inverse() const
{
    RatMat c0inv = coef_[0].inverse();
    MatSeries r(n_, order());
    r.coef_[0] = c0inv;
    for (int k = 1; k <= order(); ++k) {
        RatMat acc(n_, n_);
        for (int i = 1; i <= k; ++i)
            acc = acc + coef_[i] * r.coef_[k - i];
        r.coef_[k] = (c0inv * acc) * Rat(-1);
    }
    return r;
}

MatSeries MatSeries::exp() const
{
    if (!coef_[0].is_zero())
        throw domain_error("MatSeries::exp: nonzero constant term");
    MatSeries r = identity(n_, order());
    MatSeries p = identity(n_, order());
    for (int k = 1; k <= order(); ++k) {
        p = p * *this;
        r = r + p * (Rat(1) / rat_factorial(k));
    }
    return r;
}

MatSeries MatSeries::log() const
{
    MatSeries x = *this;
    x.coef_[0] = x.coef_[0] - RatMat::identity(n_);
    if (!x.coef_[0].is_zero())
        throw domain_error("MatSeries::log: constant term must be Id");
    MatSeries r(n_, order());
    MatSeries p = identity(n_, order());
    for (int k = 1; k <= order(); ++k) {
        p = p * x;
        Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
        r = r + p * (sign / k);
    }
    return r;
}

std::vector<std::vector<RatMat>> divide_by_sum(const std::vector<std::vector<RatMat>>& p)
{
    // P = (x + y) Q, i.e. p[i][j] = q[i-1][j] + q[i][j-1]. Solving rows from
    // the top: q[i-1][j] = p[i][j] - q[i][j-1]. When P is a truncation of a
    // longer divisible polynomial, q[a][b] is exact for a + b < deg_x(P);
    // callers must stay inside that range.
    int dx = static_cast<int>(p.size());
    if (dx == 0)
        return {};
    int dy = static_cast<int>(p[0].size());
    int n = p[0][0].rows();
    RatMat zero(n, n);
    std::vector<std::vector<RatMat>> q(std::max(dx - 1, 1), std::vector<RatMat>(dy, zero));
    for (int i = dx - 1; i >= 1; --i)
        for (int j = 0; j < dy; ++j) {
            RatMat v = p[i][j];
            if (j >= 1 && i <= dx - 2)
                v = v - q[i][j - 1];
            q[i - 1][j] = v;
        }
    for (int j = 0; j < dy; ++j) {
        RatMat rem = p[0][j];
        if (j >= 1)
            rem = rem - q[0][j - 1];
        if (!rem.is_zero())
            throw structural_error("divide_by_sum: polynomial not divisible by x + y");
    }
    return q;
}

} // namespace owdvv

#include "kneser/exact.hpp"

#include <stdexcept>

namespace kneser {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < columns && r < m.size(); ++col) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Rational inv = 1 / m[r][col];
        for (std::size_t j = col; j < columns; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < columns; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(RationalMatrix m) {
    if (m.empty()) return 0;
    return static_cast<int>(row_reduce(m, m.front().size()).size());
}

std::vector<RationalVector> kernel(RationalMatrix m, std::size_t columns) {
    for (const auto& row : m)
        if (row.size() != columns) throw std::invalid_argument("kernel: ragged matrix");
    auto pivots = row_reduce(m, columns);
    std::vector<char> is_pivot(columns, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(RationalMatrix m, RationalVector b) {
    if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t columns = m.empty() ? 0 : m.front().size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = row_reduce(m, columns + 1);
    if (!pivots.empty() && pivots.back() == columns) return std::nullopt;
    RationalVector x(columns, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][columns];
    return x;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b.front().size() : 0;
    RationalMatrix c(n, RationalVector(cols, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace kneser

#include "fanopoly/linalg.hpp"

#include <algorithm>

namespace fanopoly {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw internal_error("vec_add: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw internal_error("vec_sub: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw internal_error("dot: size mismatch");
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Mat identity_mat(int n) {
    Mat m(static_cast<size_t>(n), zero_vec(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(m, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw internal_error("mat_mul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
    Vec r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

Mat mat_transpose(const Mat& a) {
    if (a.empty()) return a;
    Mat r(a[0].size(), Vec(a.size(), Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

Mat mat_scale(const Rational& s, const Mat& a) {
    Mat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

bool mat_eq(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

namespace {

// Row-echelon elimination; returns rank, accumulates det sign/value if asked.
int eliminate(Mat& m, Rational* det_out) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    Rational d(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) {
            if (det_out) d = 0;
            continue;
        }
        if (piv != r) {
            std::swap(m[piv], m[r]);
            d = -d;
        }
        d *= m[r][c];
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    if (det_out) *det_out = (r == rows && rows == cols) ? d : Rational(0);
    return static_cast<int>(r);
}

}  // namespace

Rational det(Mat a) {
    if (a.empty()) return Rational(1);
    if (a.size() != a[0].size()) throw internal_error("det: not square");
    Rational d;
    eliminate(a, &d);
    return d;
}

int rank_of(Mat a) {
    if (a.empty()) return 0;
    return eliminate(a, nullptr);
}

std::optional<Vec> solve(Mat a, Vec b) {
    size_t n = a.size();
    if (n == 0) return Vec{};
    if (a[0].size() != n || b.size() != n) throw internal_error("solve: shape mismatch");
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    // forward
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) std::swap(a[piv], a[c]);
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    // back-substitution
    Vec x(n, Rational(0));
    for (size_t i = n; i-- > 0;) {
        Rational s = a[i][n];
        for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    size_t n = a.size();
    if (n == 0) return Mat{};
    Mat aug = a;
    for (size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw internal_error("inverse: not square");
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rational(1) : Rational(0));
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && aug[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) std::swap(aug[piv], aug[c]);
        Rational p = aug[c][c];
        for (size_t j = 0; j < 2 * n; ++j) aug[c][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    Mat inv(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<Vec> nullspace(Mat a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    size_t rows = a.size();
    // reduced row echelon
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        Rational p = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] /= p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols, Rational(0));
        v[free_c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

int affine_dim(const std::vector<Vec>& points) {
    if (points.empty()) return -1;
    Mat diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
    if (diffs.empty()) return 0;
    return rank_of(diffs);
}

bool is_primitive_integer_vec(const Vec& v) {
    Integer g(0);
    for (const auto& x : v) {
        if (x.get_den() != 1) return false;
        Integer a = x.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g == 1;
}

}  // namespace fanopoly

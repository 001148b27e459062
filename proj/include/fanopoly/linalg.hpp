// Small dense exact-rational vectors and matrices.
//
// Everything here is O(n^3) textbook Gauss on mpq scalars; dimensions in
// this project never exceed the rank of the root system plus one, so no
// pivoting strategy or fraction-free tricks are needed.

#pragma once

#include <optional>
#include <vector>

#include "fanopoly/rational.hpp"

namespace fanopoly {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Rational(0)); }

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& a);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
bool lex_less(const Vec& a, const Vec& b);

Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat mat_transpose(const Mat& a);
Mat mat_scale(const Rational& s, const Mat& a);
bool mat_eq(const Mat& a, const Mat& b);

Rational det(Mat a);
int rank_of(Mat a);

// Unique solution of a square system, or nullopt when singular.
std::optional<Vec> solve(Mat a, Vec b);
std::optional<Mat> inverse(const Mat& a);

// Basis of {x : a x = 0} for a (possibly rectangular) matrix.
std::vector<Vec> nullspace(Mat a);

// Affine dimension of a point set (-1 for empty, 0 for a single point).
int affine_dim(const std::vector<Vec>& points);

// True when every entry is an integer and the entries' gcd is 1.
bool is_primitive_integer_vec(const Vec& v);

}  // namespace fanopoly

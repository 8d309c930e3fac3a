#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "khoworks/errors.hpp"

namespace khoworks {

using Int = boost::multiprecision::cpp_int;

// Dense exact integer matrix.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    T& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& operator()(int r, int c) const {
        return a[static_cast<size_t>(r) * cols + c];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    bool is_zero() const {
        for (const T& x : a)
            if (x != 0) return false;
        return true;
    }
};

using Mat64 = Mat<long long>;
using MatZ = Mat<Int>;

MatZ to_matz(const Mat64& m);
MatZ matmul(const MatZ& a, const MatZ& b);

// rank + the nonzero diagonal of the Smith normal form (d1 | d2 | ...,
// all positive, 1s included).
struct SnfSummary {
    int rank = 0;
    std::vector<long long> invariant_factors;
};

// Machine-word fast path with automatic arbitrary-precision fallback.
SnfSummary smith_normal_form(const Mat64& m);
SnfSummary smith_normal_form(const MatZ& m);

// Full decomposition U*A*V = S with U, V unimodular.
struct SmithDecomp {
    MatZ u, s, v;
    int rank = 0;
};

SmithDecomp smith_decompose(const MatZ& a);

// Columns form a basis of the integer kernel of A.
MatZ kernel_basis(const MatZ& a);

// Integer solution x of A x = b, if one exists.
std::optional<std::vector<Int>> solve(const MatZ& a, const std::vector<Int>& b);

}  // namespace khoworks

#include "khoworks/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <vector>

namespace khoworks {

namespace {

// Checked machine arithmetic: Smith elimination can blow up entry sizes,
// in which case we rerun with cpp_int.
inline long long ck_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("snf add");
    return r;
}
inline long long ck_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("snf mul");
    return r;
}
inline long long ck_neg(long long a) {
    if (a == std::numeric_limits<long long>::min()) throw Overflow("snf neg");
    return -a;
}
inline Int ck_add(const Int& a, const Int& b) { return a + b; }
inline Int ck_mul(const Int& a, const Int& b) { return a * b; }
inline Int ck_neg(const Int& a) { return -a; }

template <class T>
T t_abs(const T& x) {
    return x < 0 ? ck_neg(x) : x;
}

// In-place Smith diagonalization of d; u/v (if non-null) accumulate the row
// and column transforms: u*original*v = d at exit.
template <class T>
int snf_core(Mat<T>& d, Mat<T>* u, Mat<T>* v) {
    const int m = d.rows, n = d.cols, nmin = std::min(m, n);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(d(i, c), d(j, c));
        if (u)
            for (int c = 0; c < u->cols; ++c) std::swap((*u)(i, c), (*u)(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(d(r, i), d(r, j));
        if (v)
            for (int r = 0; r < v->rows; ++r) std::swap((*v)(r, i), (*v)(r, j));
    };
    // row i += f * row j
    auto add_row = [&](int i, int j, const T& f) {
        for (int c = 0; c < n; ++c) d(i, c) = ck_add(d(i, c), ck_mul(f, d(j, c)));
        if (u)
            for (int c = 0; c < u->cols; ++c)
                (*u)(i, c) = ck_add((*u)(i, c), ck_mul(f, (*u)(j, c)));
    };
    auto add_col = [&](int i, int j, const T& f) {
        for (int r = 0; r < m; ++r) d(r, i) = ck_add(d(r, i), ck_mul(f, d(r, j)));
        if (v)
            for (int r = 0; r < v->rows; ++r)
                (*v)(r, i) = ck_add((*v)(r, i), ck_mul(f, (*v)(r, j)));
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < n; ++c) d(i, c) = ck_neg(d(i, c));
        if (u)
            for (int c = 0; c < u->cols; ++c) (*u)(i, c) = ck_neg((*u)(i, c));
    };

    int rank = 0;
    for (int s = 0; s < nmin; ++s) {
        // Pick the pivot: smallest nonzero |entry| in the trailing block.
        int pr = -1, pc = -1;
        for (int r = s; r < m; ++r)
            for (int c = s; c < n; ++c)
                if (d(r, c) != 0 &&
                    (pr < 0 || t_abs(d(r, c)) < t_abs(d(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;  // trailing block is zero
        swap_rows(s, pr);
        swap_cols(s, pc);

        for (;;) {
            bool clean = true;
            for (int r = s + 1; r < m; ++r) {
                if (d(r, s) == 0) continue;
                T q = d(r, s) / d(s, s);
                if (q != 0) add_row(r, s, ck_neg(q));
                if (d(r, s) != 0) {
                    // Remainder is smaller than the pivot: promote it.
                    swap_rows(s, r);
                    clean = false;
                }
            }
            for (int c = s + 1; c < n; ++c) {
                if (d(s, c) == 0) continue;
                T q = d(s, c) / d(s, s);
                if (q != 0) add_col(c, s, ck_neg(q));
                if (d(s, c) != 0) {
                    swap_cols(s, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Row and column s are clear; enforce divisibility of the
            // trailing block by the pivot.
            int br = -1, bc = -1;
            for (int r = s + 1; r < m && br < 0; ++r)
                for (int c = s + 1; c < n; ++c)
                    if (d(r, c) % d(s, s) != 0) {
                        br = r;
                        bc = c;
                        break;
                    }
            if (br < 0) break;
            add_row(s, br, T(1));
        }
        if (d(s, s) < 0) negate_row(s);
        ++rank;
    }
    return rank;
}

template <class T>
SnfSummary snf_summary(Mat<T> d) {
    SnfSummary out;
    out.rank = snf_core(d, static_cast<Mat<T>*>(nullptr),
                        static_cast<Mat<T>*>(nullptr));
    for (int i = 0; i < out.rank; ++i) {
        T x = d(i, i);
        if (x > std::numeric_limits<long long>::max())
            throw Overflow("invariant factor exceeds machine range");
        out.invariant_factors.push_back(static_cast<long long>(x));
    }
    return out;
}

template <>
SnfSummary snf_summary<long long>(Mat64 d) {
    SnfSummary out;
    out.rank = snf_core(d, static_cast<Mat64*>(nullptr),
                        static_cast<Mat64*>(nullptr));
    for (int i = 0; i < out.rank; ++i)
        out.invariant_factors.push_back(d(i, i));
    return out;
}

// Sparse elimination of +-1 pivots before the dense pass.  Differential
// blocks are large, sparse and almost entirely unit entries, so this removes
// the bulk of the matrix in near-linear time; each eliminated pivot
// contributes an invariant factor 1.  Throws Overflow like the dense path.
SnfSummary snf_sparse64(const Mat64& m) {
    const int R = m.rows, C = m.cols;
    std::vector<std::map<int, long long>> rows(R);
    std::vector<std::set<int>> colrows(C);
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c)
            if (m(r, c) != 0) {
                rows[r][c] = m(r, c);
                colrows[c].insert(r);
            }
    std::vector<char> dead_r(R, 0), dead_c(C, 0);
    int ones = 0;
    for (;;) {
        // Markowitz-style pivot: unit entry with the least expected fill-in.
        int pr = -1, pc = -1;
        long long best = -1;
        for (int r = 0; r < R && best != 0; ++r) {
            if (dead_r[r]) continue;
            for (const auto& [c, v] : rows[r]) {
                if (v != 1 && v != -1) continue;
                long long cost = (long long)(rows[r].size() - 1) *
                                 (long long)(colrows[c].size() - 1);
                if (best < 0 || cost < best) {
                    best = cost;
                    pr = r;
                    pc = c;
                    if (best == 0) break;
                }
            }
        }
        if (pr < 0) break;
        const long long pv = rows[pr].at(pc);
        std::vector<int> below(colrows[pc].begin(), colrows[pc].end());
        for (int r2 : below) {
            if (r2 == pr) continue;
            const long long f = ck_neg(ck_mul(rows[r2].at(pc), pv));
            for (const auto& [c, v] : rows[pr]) {
                auto it = rows[r2].find(c);
                long long nv =
                    ck_add(it == rows[r2].end() ? 0 : it->second, ck_mul(f, v));
                if (nv == 0) {
                    if (it != rows[r2].end()) {
                        rows[r2].erase(it);
                        colrows[c].erase(r2);
                    }
                } else {
                    if (it == rows[r2].end()) {
                        rows[r2][c] = nv;
                        colrows[c].insert(r2);
                    } else {
                        it->second = nv;
                    }
                }
            }
        }
        for (const auto& [c, v] : rows[pr]) colrows[c].erase(pr);
        rows[pr].clear();
        dead_r[pr] = 1;
        dead_c[pc] = 1;
        ++ones;
    }
    // dense residue: whatever could not be cleared with unit pivots
    std::vector<int> live_r, live_c;
    for (int r = 0; r < R; ++r)
        if (!dead_r[r] && !rows[r].empty()) live_r.push_back(r);
    for (int c = 0; c < C; ++c)
        if (!dead_c[c] && !colrows[c].empty()) live_c.push_back(c);
    std::vector<int> cpos(C, -1);
    for (int k = 0; k < (int)live_c.size(); ++k) cpos[live_c[k]] = k;
    Mat64 rest((int)live_r.size(), (int)live_c.size());
    for (int k = 0; k < (int)live_r.size(); ++k)
        for (const auto& [c, v] : rows[live_r[k]]) rest(k, cpos[c]) = v;
    SnfSummary out = snf_summary<long long>(std::move(rest));
    out.rank += ones;
    out.invariant_factors.insert(out.invariant_factors.begin(), ones, 1);
    return out;
}

}  // namespace

MatZ to_matz(const Mat64& m) {
    MatZ z(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) z.a[k] = m.a[k];
    return z;
}

MatZ matmul(const MatZ& a, const MatZ& b) {
    MatZ r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b(k, j) != 0) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

SnfSummary smith_normal_form(const Mat64& m) {
    try {
        return snf_sparse64(m);
    } catch (const Overflow&) {
        return snf_summary<Int>(to_matz(m));
    }
}

SnfSummary smith_normal_form(const MatZ& m) { return snf_summary<Int>(m); }

SmithDecomp smith_decompose(const MatZ& a) {
    SmithDecomp out;
    out.s = a;
    out.u = MatZ::identity(a.rows);
    out.v = MatZ::identity(a.cols);
    out.rank = snf_core(out.s, &out.u, &out.v);
    return out;
}

MatZ kernel_basis(const MatZ& a) {
    SmithDecomp d = smith_decompose(a);
    MatZ k(a.cols, a.cols - d.rank);
    for (int c = d.rank; c < a.cols; ++c)
        for (int r = 0; r < a.cols; ++r) k(r, c - d.rank) = d.v(r, c);
    return k;
}

std::optional<std::vector<Int>> solve(const MatZ& a, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw InvalidParameter("solve: size mismatch");
    SmithDecomp d = smith_decompose(a);
    // c = U b; need S y = c with y integral.
    std::vector<Int> c(a.rows, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.rows; ++j)
            if (d.u(i, j) != 0 && b[j] != 0) c[i] += d.u(i, j) * b[j];
    std::vector<Int> y(a.cols, 0);
    for (int i = 0; i < a.rows; ++i) {
        if (i < d.rank) {
            if (c[i] % d.s(i, i) != 0) return std::nullopt;
            y[i] = c[i] / d.s(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(a.cols, 0);
    for (int r = 0; r < a.cols; ++r)
        for (int k = 0; k < a.cols; ++k)
            if (d.v(r, k) != 0 && y[k] != 0) x[r] += d.v(r, k) * y[k];
    return x;
}

}  // namespace khoworks

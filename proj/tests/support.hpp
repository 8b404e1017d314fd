#pragma once

// Helpers and independent oracles shared by the test programs. Nothing here
// calls the library routine it is used to check.

#include "s3rec/homology.hpp"
#include "s3rec/io.hpp"
#include "s3rec/normal_coords.hpp"
#include "s3rec/triangulation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace testing {

using s3rec::Integer;

inline std::string data_path(const std::string& name) { return std::string(S3REC_DATA_DIR) + "/" + name; }

inline s3rec::Triangulation load3(const std::string& name)
{
    return std::get<s3rec::Triangulation>(s3rec::load_gluing_table(data_path(name)));
}

inline s3rec::SurfaceTriangulation load2(const std::string& name)
{
    return std::get<s3rec::SurfaceTriangulation>(s3rec::load_gluing_table(data_path(name)));
}

inline const std::vector<std::string>& closed_corpus()
{
    static const std::vector<std::string> names{"s3_boundary4simplex.tri", "lens_3_1.tri", "s2xs1.tri"};
    return names;
}

using Matrix = std::vector<std::vector<Integer>>;

inline Matrix to_rows(const s3rec::IntegerMatrix& m)
{
    Matrix r(m.rows(), std::vector<Integer>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

inline Matrix multiply(const Matrix& a, const Matrix& b, std::size_t inner)
{
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    Matrix c(n, std::vector<Integer>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Fraction-free (Bareiss) determinant.
inline Integer determinant(Matrix a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer det = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return det * a[n - 1][n - 1];
}

// Checks left * a * right == diagonal, Smith divisibility and unimodularity.
inline bool smith_identities_hold(const s3rec::IntegerMatrix& a, const s3rec::SmithForm& s)
{
    const auto A = to_rows(a), L = to_rows(s.left), R = to_rows(s.right), D = to_rows(s.diagonal);
    if (L.size() != A.size() || R.size() != static_cast<std::size_t>(a.cols())) return false;
    if (multiply(multiply(L, A, A.size()), R, R.size()) != D) return false;
    const auto dl = determinant(L), dr = determinant(R);
    if ((dl != 1 && dl != -1) || (dr != 1 && dr != -1)) return false;
    Integer last = 1;
    bool zero_seen = false;
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < D[i].size(); ++j) {
            if (i != j && D[i][j] != 0) return false;
            if (i != j) continue;
            if (D[i][j] < 0) return false;
            if (D[i][j] == 0) {
                zero_seen = true;
            } else {
                if (zero_seen || D[i][j] % last != 0) return false;
                last = D[i][j];
            }
        }
    return true;
}

// Nullspace basis of an integer matrix, by exact rational elimination.
inline std::vector<std::vector<Integer>> nullspace(Matrix a, std::size_t cols)
{
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c] == 0) continue;
            const Integer f = a[i][c], g = a[row][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] * g - a[row][j] * f;
        }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
        // Scale so every pivot variable stays integral.
        Integer scale = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) scale = boost::multiprecision::lcm(scale, abs(a[r][pivot_col[r]]));
        std::vector<Integer> v(cols, 0);
        v[free] = scale;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free] * scale / a[r][pivot_col[r]];
        basis.push_back(v);
    }
    return basis;
}

// Extreme rays of {x >= 0 : A x = 0}: minimal supports whose restricted
// nullspace is a line through a positive vector.
inline std::vector<std::vector<Integer>> extreme_rays(const Matrix& a, std::size_t n)
{
    std::vector<std::vector<Integer>> rays;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1u) cols.push_back(j);
        Matrix sub(a.size(), std::vector<Integer>(cols.size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = a[i][cols[j]];
        auto ns = nullspace(sub, cols.size());
        if (ns.size() != 1) continue;
        auto v = ns[0];
        if (v[0] < 0)
            for (auto& x : v) x = -x;
        if (!std::all_of(v.begin(), v.end(), [](const Integer& x) { return x > 0; })) continue;
        Integer g = 0;
        for (const auto& x : v) g = s3rec::gcd(g, x);
        std::vector<Integer> full(n, 0);
        for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j] / g;
        rays.push_back(full);
    }
    return rays;
}

// Hilbert basis of {x >= 0 : A x = 0} by exhaustion: every basis element
// lies in a fundamental parallelepiped of a simplicial cone spanned by
// extreme rays, so its entries are below the sum of the d largest ray
// entries (d = cone dimension). All solutions in that box are found by
// meeting in the middle; the basis is their componentwise-minimal nonzero
// members. Returns false when the box exceeds `max_box`.
inline bool brute_force_hilbert_basis(const Matrix& a, std::size_t n, long max_box,
                                      std::vector<std::vector<long>>& basis)
{
    basis.clear();
    const auto rays = extreme_rays(a, n);
    if (rays.empty()) return true;
    std::vector<long> maxima;
    for (const auto& r : rays) maxima.push_back(static_cast<long>(*std::max_element(r.begin(), r.end())));
    std::sort(maxima.rbegin(), maxima.rend());
    const std::size_t dim = nullspace(a, n).size();  // bounds the cone dimension
    long box = 0;
    for (std::size_t i = 0; i < std::min(dim, maxima.size()); ++i) box += maxima[i];
    if (box > max_box) return false;

    const std::size_t h = n / 2;
    auto enumerate = [&](std::size_t lo, std::size_t hi) {
        std::vector<std::pair<std::vector<long>, std::vector<long>>> out;  // (values, A * part)
        std::vector<long> x(hi - lo, 0);
        for (;;) {
            std::vector<long> val(a.size(), 0);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = lo; j < hi; ++j) val[i] += static_cast<long>(a[i][j]) * x[j - lo];
            out.emplace_back(x, val);
            std::size_t k = 0;
            while (k < x.size() && x[k] == box) x[k++] = 0;
            if (k == x.size()) break;
            ++x[k];
        }
        return out;
    };
    const auto left = enumerate(0, h), right = enumerate(h, n);
    std::map<std::vector<long>, std::vector<const std::vector<long>*>> by_value;
    for (const auto& [x, v] : right) by_value[v].push_back(&x);
    std::vector<std::vector<long>> solutions;
    for (const auto& [x, v] : left) {
        std::vector<long> neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        auto it = by_value.find(neg);
        if (it == by_value.end()) continue;
        for (const auto* y : it->second) {
            std::vector<long> s = x;
            s.insert(s.end(), y->begin(), y->end());
            if (std::any_of(s.begin(), s.end(), [](long e) { return e != 0; })) solutions.push_back(s);
        }
    }
    auto l1 = [](const std::vector<long>& s) {
        long t = 0;
        for (long e : s) t += e;
        return t;
    };
    std::sort(solutions.begin(), solutions.end(), [&](const auto& p, const auto& q) { return l1(p) < l1(q); });
    for (const auto& s : solutions) {
        bool reducible = false;
        for (const auto& b : basis) {
            bool le = true;
            for (std::size_t j = 0; j < n && le; ++j) le = b[j] <= s[j];
            if (le) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(s);
    }
    std::sort(basis.begin(), basis.end());
    return true;
}

// A random system with entries in [-2, 2]; rows are nonzero.
inline Matrix random_system(std::mt19937& rng, std::size_t vars, std::size_t eqs)
{
    std::uniform_int_distribution<int> entry(-2, 2);
    Matrix a(eqs, std::vector<Integer>(vars));
    for (auto& row : a) {
        do {
            for (auto& x : row) x = entry(rng);
        } while (std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; }));
    }
    return a;
}

}  // namespace testing

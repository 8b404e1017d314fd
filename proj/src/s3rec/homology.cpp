#include "s3rec/homology.hpp"

#include "s3rec/error.hpp"

#include <algorithm>
#include <utility>

namespace s3rec {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

IntVector IntegerMatrix::apply(const IntVector& v) const
{
    if (static_cast<int>(v.size()) != cols_) throw Error(ErrorCode::LengthMismatch, "vector length does not match matrix");
    IntVector out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<Integer> SmithForm::invariant_factors() const
{
    std::vector<Integer> out;
    for (int i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
        if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
    return out;
}

int SmithForm::rank() const { return static_cast<int>(invariant_factors().size()); }

namespace {

class Reducer {
public:
    Reducer(const IntegerMatrix& a, bool witness) : d_(a), witness_(witness)
    {
        if (witness_) {
            left_ = IntegerMatrix::identity(a.rows());
            right_ = IntegerMatrix::identity(a.cols());
        }
    }

    SmithForm run()
    {
        const int m = d_.rows(), n = d_.cols();
        for (int k = 0; k < std::min(m, n); ++k) {
            if (!reduce_at(k)) break;
            if (d_(k, k) < 0) negate_row(k);
        }
        return SmithForm{std::move(d_), std::move(left_), std::move(right_)};
    }

private:
    // Returns false once the trailing submatrix is zero.
    bool reduce_at(int k)
    {
        const int m = d_.rows(), n = d_.cols();
        for (;;) {
            int pi = -1, pj = -1;
            Integer best;
            for (int i = k; i < m; ++i)
                for (int j = k; j < n; ++j) {
                    const Integer& x = d_(i, j);
                    if (x == 0) continue;
                    Integer ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                        if (best == 1) goto found;
                    }
                }
        found:
            if (pi < 0) return false;
            swap_rows(k, pi);
            swap_cols(k, pj);

            bool clean = true;
            for (int i = k + 1; i < m; ++i) {
                if (d_(i, k) == 0) continue;
                Integer q = d_(i, k) / d_(k, k);
                add_row(i, k, -q);
                if (d_(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (d_(k, j) == 0) continue;
                Integer q = d_(k, j) / d_(k, k);
                add_col(j, k, -q);
                if (d_(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            int bad_row = -1;
            for (int i = k + 1; i < m && bad_row < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (d_(i, j) % d_(k, k) != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row < 0) return true;
            add_row(k, bad_row, Integer(1));
        }
    }

    void swap_rows(int a, int b)
    {
        if (a == b) return;
        for (int j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
        if (witness_)
            for (int j = 0; j < left_.cols(); ++j) std::swap(left_(a, j), left_(b, j));
    }
    void swap_cols(int a, int b)
    {
        if (a == b) return;
        for (int i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
        if (witness_)
            for (int i = 0; i < right_.rows(); ++i) std::swap(right_(i, a), right_(i, b));
    }
    // row[dst] += c * row[src]
    void add_row(int dst, int src, const Integer& c)
    {
        for (int j = 0; j < d_.cols(); ++j)
            if (d_(src, j) != 0) d_(dst, j) += c * d_(src, j);
        if (witness_)
            for (int j = 0; j < left_.cols(); ++j)
                if (left_(src, j) != 0) left_(dst, j) += c * left_(src, j);
    }
    // col[dst] += c * col[src]
    void add_col(int dst, int src, const Integer& c)
    {
        for (int i = 0; i < d_.rows(); ++i)
            if (d_(i, src) != 0) d_(i, dst) += c * d_(i, src);
        if (witness_)
            for (int i = 0; i < right_.rows(); ++i)
                if (right_(i, src) != 0) right_(i, dst) += c * right_(i, src);
    }
    void negate_row(int r)
    {
        for (int j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
        if (witness_)
            for (int j = 0; j < left_.cols(); ++j) left_(r, j) = -left_(r, j);
    }

    IntegerMatrix d_;
    IntegerMatrix left_;
    IntegerMatrix right_;
    bool witness_;
};

// Fraction-free Gaussian elimination (Bareiss).
Integer determinant(IntegerMatrix m)
{
    const int n = m.rows();
    if (n != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int swap_with = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_with, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a, bool witness)
{
    return Reducer(a, witness).run();
}

bool verify_smith_form(const IntegerMatrix& a, const SmithForm& s)
{
    const auto& d = s.diagonal;
    if (d.rows() != a.rows() || d.cols() != a.cols()) return false;
    if (s.left.rows() != a.rows() || s.left.cols() != a.rows()) return false;
    if (s.right.rows() != a.cols() || s.right.cols() != a.cols()) return false;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    const int k = std::min(d.rows(), d.cols());
    for (int i = 0; i < k; ++i) {
        if (d(i, i) < 0) return false;
        if (i + 1 < k) {
            if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
            if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
        }
    }
    if (!(s.left * a * s.right == d)) return false;
    return abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1;
}

std::string to_string(const HomologyGroup& g)
{
    std::string out;
    if (g.rank == 1) out = "Z";
    else if (g.rank > 1) out = "Z^" + std::to_string(g.rank);
    for (const auto& t : g.torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.str();
    return out.empty() ? "0" : out;
}

bool HomologyGroups::is_sphere_homology() const
{
    return groups[0] == HomologyGroup{1, {}} && groups[1] == HomologyGroup{0, {}} &&
           groups[2] == HomologyGroup{0, {}} && groups[3] == HomologyGroup{1, {}};
}

std::array<IntegerMatrix, 3> boundary_matrices(const Triangulation& tri)
{
    const int V = tri.vertex_count(), E = tri.edge_count(), F = tri.face_count(), T = tri.size();
    IntegerMatrix d1(V, E), d2(E, F), d3(F, T);

    std::vector<bool> edge_done(E, false), face_done(F, false);
    for (int t = 0; t < T; ++t) {
        for (int f = 0; f < 4; ++f) {
            int sign = (f % 2 == 0 ? 1 : -1) * tri.face_orientation(t, f);
            d3(tri.face_class(t, f), t) += sign;

            int fc = tri.face_class(t, f);
            if (face_done[fc]) continue;
            face_done[fc] = true;
            std::array<int, 3> v{};
            int k = 0;
            for (int x = 0; x < 4; ++x)
                if (x != f) v[k++] = x;
            // d[v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]
            const std::array<std::array<int, 2>, 3> faces_edges{{{v[1], v[2]}, {v[0], v[2]}, {v[0], v[1]}}};
            for (int i = 0; i < 3; ++i) {
                int e = edge_index(faces_edges[i][0], faces_edges[i][1]);
                int s = (i % 2 == 0 ? 1 : -1) * tri.edge_orientation(t, e) * tri.face_orientation(t, f);
                d2(tri.edge_class(t, e), fc) += s;
            }
        }
        for (int e = 0; e < 6; ++e) {
            int ec = tri.edge_class(t, e);
            if (edge_done[ec]) continue;
            edge_done[ec] = true;
            int s = tri.edge_orientation(t, e);
            d1(tri.vertex_class(t, kEdgeVertices[e][1]), ec) += s;
            d1(tri.vertex_class(t, kEdgeVertices[e][0]), ec) -= s;
        }
    }
    return {std::move(d1), std::move(d2), std::move(d3)};
}

HomologyGroups cellular_homology(const Triangulation& tri)
{
    auto d = boundary_matrices(tri);
    std::array<int, 4> dims{tri.vertex_count(), tri.edge_count(), tri.face_count(), tri.size()};
    std::array<int, 5> ranks{};  // ranks[k] = rank of d_k, d_0 = d_4 = 0
    std::array<std::vector<Integer>, 5> factors;
    for (int k = 1; k <= 3; ++k) {
        auto s = smith_normal_form(d[k - 1], false);
        factors[k] = s.invariant_factors();
        ranks[k] = static_cast<int>(factors[k].size());
    }
    HomologyGroups h;
    for (int k = 0; k <= 3; ++k) {
        h.groups[k].rank = dims[k] - ranks[k] - ranks[k + 1];
        for (const auto& x : factors[k + 1])
            if (x > 1) h.groups[k].torsion.push_back(x);
    }
    return h;
}

HomologyGroups homology(const Triangulation& tri)
{
    if (!tri.is_closed()) throw Error(ErrorCode::NotClosed, "homology requires a closed triangulation");
    return cellular_homology(tri);
}

bool is_homology_sphere(const Triangulation& tri)
{
    if (!tri.is_closed()) throw Error(ErrorCode::NotClosed, "triangulation has boundary");
    if (!is_orientable(tri)) throw Error(ErrorCode::NotOrientable, "triangulation is not orientable");
    return homology(tri).is_sphere_homology();
}

}  // namespace s3rec

#pragma once

#include "s3rec/integer.hpp"
#include "s3rec/triangulation.hpp"

#include <array>
#include <string>
#include <vector>

namespace s3rec {

// Dense matrix of exact integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static IntegerMatrix identity(int n)
    {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Integer& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    // A * v for a column vector v.
    IntVector apply(const IntVector& v) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

// left * A * right == diagonal, with d1 | d2 | ... and nonnegative entries.
struct SmithForm {
    IntegerMatrix diagonal;
    IntegerMatrix left;
    IntegerMatrix right;

    std::vector<Integer> invariant_factors() const;
    int rank() const;
};

// Pivots on the smallest nonzero absolute value. With `witness` false the
// left/right matrices are left empty.
SmithForm smith_normal_form(const IntegerMatrix& a, bool witness = true);

// True iff the diagonal is in Smith form and left * a * right == diagonal
// with both transforms unimodular (determinant +-1).
bool verify_smith_form(const IntegerMatrix& a, const SmithForm& s);

struct HomologyGroup {
    long rank = 0;
    std::vector<Integer> torsion;  // each >= 2, in divisibility order

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// "0", "Z", "Z^2 + Z/3", ...
std::string to_string(const HomologyGroup& g);

struct HomologyGroups {
    std::array<HomologyGroup, 4> groups;

    bool is_sphere_homology() const;
    friend bool operator==(const HomologyGroups&, const HomologyGroups&) = default;
};

// Class-level boundary maps of the triangulation's cell complex:
// index k holds the matrix of d_{k+1}: C_{k+1} -> C_k.
std::array<IntegerMatrix, 3> boundary_matrices(const Triangulation& tri);

// Throws Error(NotClosed) for triangulations with boundary.
HomologyGroups homology(const Triangulation& tri);

// Same computation without the closedness requirement.
HomologyGroups cellular_homology(const Triangulation& tri);

// Throws NotClosed / NotOrientable when the precondition fails.
bool is_homology_sphere(const Triangulation& tri);

}  // namespace s3rec

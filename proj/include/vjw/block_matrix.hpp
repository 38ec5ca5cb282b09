#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vjw/rational_fn.hpp"

namespace vjw {

// Sparse matrix over the rational function field.  Absent entry = exact
// zero; no zeros are stored.  Entries iterate row-major, which fixes the
// serialization order.
class BlockMatrix {
  public:
    using Key = std::pair<long, long>;  // (row, col)

    BlockMatrix() = default;
    BlockMatrix(long rows, long cols);
    static BlockMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const std::map<Key, RationalFn>& entries() const { return entries_; }

    const RationalFn& at(long r, long c) const;  // zero reference if absent
    void set(long r, long c, RationalFn v);      // erases when v is zero
    void add_at(long r, long c, const RationalFn& v);

    BlockMatrix operator*(const BlockMatrix& o) const;
    BlockMatrix operator+(const BlockMatrix& o) const;
    BlockMatrix operator-(const BlockMatrix& o) const;
    BlockMatrix scaled(const RationalFn& c) const;

    RationalFn trace() const;  // square matrices only
    bool is_zero() const { return entries_.empty(); }

    // Value equality: same shape and all entries equal as rational functions.
    bool operator==(const BlockMatrix& o) const;
    bool operator!=(const BlockMatrix& o) const { return !(*this == o); }

    BlockMatrix specialized(const std::map<int, long>& assignment) const;

  private:
    long rows_ = 0, cols_ = 0;
    std::map<Key, RationalFn> entries_;
};

// Coordinates where the two matrices (of equal shape) differ in value,
// sorted row-major.
std::vector<BlockMatrix::Key> matrix_differences(const BlockMatrix& a, const BlockMatrix& b);

}  // namespace vjw

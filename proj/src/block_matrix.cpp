#include "vjw/block_matrix.hpp"

#include "vjw/error.hpp"

namespace vjw {

namespace {
const RationalFn kZero;
}

BlockMatrix::BlockMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

BlockMatrix BlockMatrix::identity(long n) {
    BlockMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.entries_.emplace(Key{i, i}, RationalFn::one());
    return m;
}

const RationalFn& BlockMatrix::at(long r, long c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

void BlockMatrix::set(long r, long c, RationalFn v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_.insert_or_assign({r, c}, std::move(v));
}

void BlockMatrix::add_at(long r, long c, const RationalFn& v) {
    if (v.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        set(r, c, v);
    } else {
        RationalFn sum = it->second + v;
        if (sum.is_zero())
            entries_.erase(it);
        else
            it->second = std::move(sum);
    }
}

BlockMatrix BlockMatrix::operator*(const BlockMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    std::vector<std::vector<std::pair<long, const RationalFn*>>> rows_of_o(o.rows_);
    for (const auto& [rc, v] : o.entries_) rows_of_o[rc.first].push_back({rc.second, &v});

    BlockMatrix out(rows_, o.cols_);
    auto it = entries_.begin();
    while (it != entries_.end()) {
        long r = it->first.first;
        std::map<long, RationalSum> acc;
        for (; it != entries_.end() && it->first.first == r; ++it) {
            for (const auto& [c, pv] : rows_of_o[it->first.second])
                acc[c].add_product(it->second, *pv);
        }
        for (auto& [c, sum] : acc) {
            RationalFn v = sum.take();
            if (!v.is_zero()) out.entries_.emplace(Key{r, c}, std::move(v));
        }
    }
    return out;
}

BlockMatrix BlockMatrix::operator+(const BlockMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    BlockMatrix out = *this;
    for (const auto& [rc, v] : o.entries_) out.add_at(rc.first, rc.second, v);
    return out;
}

BlockMatrix BlockMatrix::operator-(const BlockMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    BlockMatrix out = *this;
    for (const auto& [rc, v] : o.entries_) out.add_at(rc.first, rc.second, -v);
    return out;
}

BlockMatrix BlockMatrix::scaled(const RationalFn& c) const {
    BlockMatrix out(rows_, cols_);
    if (c.is_zero()) return out;
    for (const auto& [rc, v] : entries_) {
        RationalFn s = v * c;
        if (!s.is_zero()) out.entries_.emplace(rc, std::move(s));
    }
    return out;
}

RationalFn BlockMatrix::trace() const {
    if (rows_ != cols_) throw Error("trace of non-square matrix");
    RationalSum sum;
    for (const auto& [rc, v] : entries_)
        if (rc.first == rc.second) sum.add(v);
    return sum.take();
}

bool BlockMatrix::operator==(const BlockMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return matrix_differences(*this, o).empty();
}

BlockMatrix BlockMatrix::specialized(const std::map<int, long>& assignment) const {
    BlockMatrix out(rows_, cols_);
    for (const auto& [rc, v] : entries_) {
        RationalFn s = v.specialized(assignment);
        if (!s.is_zero()) out.entries_.emplace(rc, std::move(s));
    }
    return out;
}

std::vector<BlockMatrix::Key> matrix_differences(const BlockMatrix& a, const BlockMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("matrix comparison shape mismatch");
    std::vector<BlockMatrix::Key> out;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(ia->first);  // nonzero vs zero
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            out.push_back(ib->first);
            ++ib;
        } else {
            if (ia->second != ib->second) out.push_back(ia->first);
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace vjw

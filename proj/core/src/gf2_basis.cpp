#include "trispace/gf2_basis.hpp"

#include <algorithm>

namespace trispace {

BitVec Gf2Basis::reduce(BitVec v) const {
    check_len(v);
    std::size_t b = v.first_set();
    while (b != BitVec::npos) {
        const std::int32_t r = pivot_row_[b];
        if (r >= 0) {
            // The row has no bits below its pivot, so only words >= b/64 change
            // and the first set bit of v strictly increases.
            v.xor_from(b >> 6, rows_[static_cast<std::size_t>(r)]);
            b = v.next_set(b);
        } else {
            b = v.next_set(b + 1);
        }
    }
    return v;
}

bool Gf2Basis::contains(const BitVec& v) const {
    check_len(v);
    BitVec r = v;
    std::size_t b = r.first_set();
    while (b != BitVec::npos) {
        const std::int32_t row = pivot_row_[b];
        if (row < 0) return false;  // bit at a free position can never clear
        r.xor_from(b >> 6, rows_[static_cast<std::size_t>(row)]);
        b = r.next_set(b);
    }
    return true;
}

Gf2Basis::InsertResult Gf2Basis::insert(const BitVec& v) {
    BitVec r = reduce(v);
    if (!r.any()) return {std::move(r), false};

    const std::size_t pivot = r.first_set();
    const std::size_t pivot_word = pivot >> 6;

    // Clear the new pivot column in existing rows (keeps the basis reduced;
    // r is itself reduced, so no other pivot column is disturbed).
    for (auto& row : rows_)
        if (row.test(pivot)) row.xor_from(pivot_word, r);

    const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), r);
    for (std::size_t i = pos; i < pivots_.size(); ++i)
        pivot_row_[pivots_[i]] = static_cast<std::int32_t>(i);
    return {std::move(r), true};
}

Gf2Basis orthogonal_complement(const std::vector<BitVec>& vectors, std::size_t ambient_dim) {
    Gf2Basis row_space(ambient_dim);
    for (const auto& v : vectors) row_space.insert(v);

    Gf2Basis kernel(ambient_dim);
    const auto& rows = row_space.rows();
    const auto& pivots = row_space.pivots();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : pivots) is_pivot[p] = true;

    // One kernel vector per free column j: 1 at j, plus 1 at the pivot of
    // every RREF row whose column j is set.
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        if (is_pivot[j]) continue;
        BitVec k(ambient_dim);
        k.set(j);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].test(j)) k.set(pivots[i]);
        kernel.insert(k);
    }
    return kernel;
}

}  // namespace trispace

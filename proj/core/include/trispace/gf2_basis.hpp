#pragma once

#include <cstdint>
#include <vector>

#include "trispace/bitvec.hpp"

namespace trispace {

/// Incremental basis in fully reduced row-echelon form.
///
/// Rows are kept sorted by pivot (pivot = lowest set bit) and every pivot
/// column is zero in all other rows, so the row set is the canonical RREF
/// of the span: two bases over the same span compare equal row-for-row
/// regardless of insertion order.
///
/// Single writer; concurrent reads of a frozen basis are safe.
class Gf2Basis {
public:
    explicit Gf2Basis(std::size_t ambient_dim)
        : dim_(ambient_dim), pivot_row_(ambient_dim, -1) {}

    struct InsertResult {
        BitVec residual;  // v reduced against the rows present before the call
        bool added;       // true iff residual was nonzero and became a new row
    };

    /// Reduce v against the basis and, if independent, add the residual as a
    /// new row (re-normalizing so the basis stays fully reduced).
    InsertResult insert(const BitVec& v);

    /// v reduced against all rows (zero iff v is in the span).
    BitVec reduce(BitVec v) const;

    bool contains(const BitVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return dim_; }

    /// Rows sorted by pivot; canonical for the span.
    const std::vector<BitVec>& rows() const { return rows_; }
    /// Strictly increasing pivot positions, parallel to rows().
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    friend bool operator==(const Gf2Basis& a, const Gf2Basis& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    void check_len(const BitVec& v) const {
        if (v.size() != dim_) throw std::invalid_argument("Gf2Basis: length mismatch");
    }

    std::size_t dim_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::int32_t> pivot_row_;  // pivot position -> row index, -1 if free
};

/// Basis of the null space of the matrix whose rows are `vectors`
/// (every output row has even overlap with every input vector).
Gf2Basis orthogonal_complement(const std::vector<BitVec>& vectors, std::size_t ambient_dim);

}  // namespace trispace

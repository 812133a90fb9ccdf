#ifndef PATHBASIS_GF2_HPP
#define PATHBASIS_GF2_HPP

// Internal incremental GF(2) echelon basis over PathVector rows.

#include <vector>

#include "pathbasis/verify.hpp"

namespace pathbasis::detail {

class Gf2Basis {
public:
    /// Reduces `row` against the stored pivots; stores and returns true
    /// when a nonzero remainder extends the span.
    bool insert(PathVector row) {
        reduce(row);
        if (!row.any()) return false;
        // keep rows mutually reduced so a single reduce pass is exact
        std::size_t pivot = row.first_bit();
        for (PathVector& existing : rows_) {
            if (existing.get(pivot)) existing ^= row;
        }
        rows_.push_back(std::move(row));
        return true;
    }

    bool in_span(PathVector row) const {
        reduce(row);
        return !row.any();
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(PathVector& row) const {
        for (const PathVector& pivot : rows_) {
            if (row.get(pivot.first_bit())) row ^= pivot;
        }
    }

    std::vector<PathVector> rows_;
};

} // namespace pathbasis::detail

#endif

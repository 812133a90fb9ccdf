#ifndef PATHBASIS_VERIFY_HPP
#define PATHBASIS_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "pathbasis/basis.hpp"
#include "pathbasis/cfg.hpp"
#include "pathbasis/decompose.hpp"

namespace pathbasis {

/// Word-packed indicator vector of a path over the closed graph's edge
/// order: coordinate i covers edge i, the virtual edge is the last
/// coordinate and is set for every begin-to-end path. An edge traversed
/// an even number of times contributes 0 (coordinates live in GF(2)).
class PathVector {
public:
    PathVector() = default;
    explicit PathVector(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    PathVector& operator^=(const PathVector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    bool operator==(const PathVector& other) const {
        return bits_ == other.bits_ && words_ == other.words_;
    }

    bool any() const {
        for (std::uint64_t w : words_) {
            if (w != 0) return true;
        }
        return false;
    }
    /// Index of the lowest set bit, or size() when the vector is zero.
    std::size_t first_bit() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) {
                return (w << 6) +
                       static_cast<std::size_t>(__builtin_ctzll(words_[w]));
            }
        }
        return bits_;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitMatrix {
    std::size_t width = 0;
    std::vector<PathVector> rows;
};

/// Rank over GF(2); the input rows are left untouched.
int rank_gf2(const BitMatrix& m);

/// Indicator vector of the path over the closed graph (virtual bit set).
/// Throws ContractError when an edge id is out of range.
PathVector path_to_vector(const Path& path, const ClosedCfg& closed);

struct BlockTerm {
    NodeId from = kNoNode;
    NodeId to = kNoNode;
    int complexity = 0; // closed complexity of the loopless block
};

struct LoopTerm {
    NodeId header = kNoNode;
    int contribution = 0; // independent cycles the loop adds
};

/// Per-block and per-loop complexity terms: the whole-graph complexity
/// must equal 1 + sum(C_b - 1) + sum(C_l); `residual` is the difference
/// and pinpoints the block or loop where a count went wrong.
struct Accounting {
    std::vector<BlockTerm> blocks;
    std::vector<LoopTerm> loops;
    int residual = 0;
};

struct VerificationCertificate {
    int complexity = 0;
    int rank = 0;
    std::size_t path_count = 0;
    bool is_basis = false;
    std::size_t covered_edges = 0;
    std::size_t total_edges = 0; // original edges, virtual excluded
    std::vector<EdgeId> missing_edges;
    Accounting accounting;
};

/// Certifies a path set: GF(2) rank versus e - v + 2, edge coverage, and
/// the per-block/per-loop accounting. Failures are certificate content,
/// not exceptions.
VerificationCertificate verify_basis(const PathSet& paths, const ClosedCfg& closed,
                                     const Decomposition& decomposition);

/// Replaces basis.paths[rejected] by the first candidate whose vector
/// lies outside the span of the remaining paths; the backbone is
/// re-identified afterwards. Throws SubstituteError when no candidate
/// restores full rank, ContractError when a candidate is not a valid
/// begin-to-end walk.
PathSet substitute_path(const PathSet& basis, std::size_t rejected,
                        const std::vector<Path>& candidates,
                        const ClosedCfg& closed);

/// Independent oracle: enumerates begin-to-end paths depth-first in
/// edge-id order, each loop's back edge taken at most once per path,
/// greedily keeping paths whose vectors raise the GF(2) rank. Stops at
/// rank e - v + 2; throws EnumerationError if `path_budget` enumerated
/// paths do not reach it.
PathSet brute_force_basis(const ClosedCfg& closed, int path_budget);

} // namespace pathbasis

#endif

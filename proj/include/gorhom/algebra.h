#pragma once

/* Bound quiver algebras Lambda = kQ/I over a prime field. The residue path
 * basis is computed by enumerating raw paths layer by layer and running
 * Gaussian elimination against the ideal span inside each
 * (source, target, length) block; enumeration stops at the first length
 * whose full layer reduces to zero. Relations must be admissible: every
 * term a composable path of length >= 2, all terms of one relation sharing
 * source, target and length. */

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "gorhom/fp_matrix.h"
#include "gorhom/quiver.h"

namespace gorhom {

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/* Element of the algebra in residue-basis coordinates. */
using AlgElem = std::vector<uint32_t>;

class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
public:
    static AlgebraPtr build(Quiver quiver, std::vector<PathSum> relations, uint32_t p,
                            int length_cap = 64);

    const Quiver& quiver() const { return quiver_; }
    uint32_t characteristic() const { return p_; }
    const std::vector<PathSum>& relations() const { return relations_; }
    int length_cap() const { return length_cap_; }

    int dim() const { return (int)basis_.size(); }
    const std::vector<PathWord>& basis() const { return basis_; }
    const PathWord& basis_word(int i) const { return basis_[i]; }
    int word_source(int i) const { return basis_[i].source; }
    int word_target(int i) const { return basis_[i].target; }
    /* -1 when the word is not a residue basis path. */
    int basis_index(const PathWord& w) const;
    /* Residue basis indices with the given source vertex, in basis order. */
    const std::vector<int>& basis_with_source(int v) const { return by_source_[v]; }

    /* First length whose whole layer lies in the ideal; every path of
     * length >= loewy_bound() is zero in the algebra. */
    int loewy_bound() const { return dead_length_; }

    AlgElem zero_elem() const { return AlgElem(basis_.size(), 0); }
    AlgElem unit() const;
    AlgElem idempotent(int v) const;
    /* Reduce a raw word / formal sum to basis coordinates. */
    AlgElem reduce(const PathWord& w) const;
    AlgElem reduce(const PathSum& s) const;
    /* Product x * y = "x then y" on path words, extended bilinearly. */
    AlgElem multiply(const AlgElem& x, const AlgElem& y) const;
    /* Table entry for basis[i] * basis[j]. */
    const AlgElem& table(int i, int j) const { return table_[(size_t)i * basis_.size() + j]; }

    /* The opposite algebra (arrows and relation words reversed). Memoized:
     * repeated calls return the same object, and opposite()->opposite()
     * returns this algebra itself. */
    AlgebraPtr opposite() const;

    /* Same quiver, characteristic, residue basis and multiplication table. */
    bool structurally_equal(const BoundQuiverAlgebra& other) const;

private:
    BoundQuiverAlgebra() = default;
    void construct();

    Quiver quiver_;
    uint32_t p_ = 2;
    std::vector<PathSum> relations_;
    int length_cap_ = 64;

    std::vector<PathWord> basis_;
    std::vector<std::vector<int>> by_source_;
    int dead_length_ = 0;
    std::vector<AlgElem> table_;

    struct Block {
        std::vector<PathWord> paths;
        std::map<std::vector<int>, int> local_index;
        std::vector<int> kept_local;
        std::vector<int> kept_global;
        Mat reduction;  // paths x kept
    };
    std::map<std::tuple<int, int, int>, Block> blocks_;  // (source, target, length)

    mutable std::once_flag opposite_once_;
    mutable AlgebraPtr opposite_;
    mutable std::weak_ptr<const BoundQuiverAlgebra> opposite_of_;
};

AlgebraPtr build_algebra(Quiver quiver, std::vector<PathSum> relations, uint32_t p,
                         int length_cap = 64);

}  // namespace gorhom

#pragma once

/* Finite-dimensional left modules over a bound quiver algebra, presented as
 * quiver representations: a dimension per vertex and a matrix per arrow.
 * The matrix of arrow a: u -> w maps the vertex-u component to the vertex-w
 * component (shape dims[w] x dims[u]); a path word acts by composing its
 * arrow matrices in traversal order. */

#include <optional>
#include <vector>

#include "gorhom/algebra.h"
#include "gorhom/fp_matrix.h"

namespace gorhom {

struct Representation {
    AlgebraPtr algebra;
    std::vector<int> dims;   // per vertex
    std::vector<Mat> action; // per arrow

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    /* Matrix of the path word acting on the module,
     * shape dims[w.target] x dims[w.source]. */
    Mat act(const PathWord& w) const;

    bool operator==(const Representation&) const = default;
};

/* Validates block shapes and that every relation of the algebra acts by
 * zero; throws PreconditionError otherwise. */
Representation make_representation(AlgebraPtr algebra, std::vector<int> dims,
                                   std::vector<Mat> action);

Representation zero_module(AlgebraPtr algebra);
Representation simple_module(AlgebraPtr algebra, int v);
/* Indecomposable projective P(v): residue paths with source v, the
 * component at vertex w spanned by the paths with target w; an arrow acts
 * by appending it to the path and reducing. */
Representation projective_module(AlgebraPtr algebra, int v);
/* The algebra as a left module over itself: the direct sum of all P(v). */
Representation regular_module(AlgebraPtr algebra);

/* Positions of P(v)'s basis paths: local_of_global[g] is the index of
 * global residue basis element g inside the vertex component of P(v)
 * holding it, and vertex_lists[w] lists the global indices at vertex w in
 * order. Used wherever morphisms out of a projective are written down. */
struct ProjectiveBasis {
    std::vector<std::vector<int>> vertex_lists;
    std::vector<int> local_of_global;
};
ProjectiveBasis projective_basis(const BoundQuiverAlgebra& alg, int v);

struct Morphism {
    Representation source, target;
    std::vector<Mat> blocks; // per vertex: target.dims[v] x source.dims[v]

    bool is_zero() const;
    bool operator==(const Morphism&) const = default;
};

/* Checks naturality squares f_w A^M_a = A^N_a f_u; throws on failure. */
Morphism make_morphism(Representation source, Representation target, std::vector<Mat> blocks);
bool is_valid_morphism(const Morphism& f);

Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(Representation source, Representation target);
/* g after f. */
Morphism compose(const Morphism& g, const Morphism& f);

/* Basis of Hom(M, N), deterministic order. */
std::vector<Morphism> hom_space(const Representation& m, const Representation& n);
/* Coordinates of f in a hom basis; nullopt if f lies outside the span. */
std::optional<std::vector<uint32_t>> coordinates_in(const std::vector<Morphism>& basis,
                                                    const Morphism& f);

/* Kernel with its inclusion into f's source. */
Morphism kernel_inclusion(const Morphism& f);
/* Cokernel with the projection from f's target. */
Morphism cokernel_projection(const Morphism& f);

struct SumDecomposition {
    Representation total;
    std::vector<Morphism> inclusions;
    std::vector<Morphism> projections;
};
SumDecomposition direct_sum(AlgebraPtr algebra, std::vector<Representation> parts);
/* Assemble total -> t from maps summand_k -> t. */
Morphism from_sum(const SumDecomposition& sum, const std::vector<Morphism>& components);
/* Assemble s -> total from maps s -> summand_k. */
Morphism into_sum(const SumDecomposition& sum, const std::vector<Morphism>& components);

struct Cover {
    Representation proj;
    Morphism epi;
    std::vector<int> top_multiplicities; // copies of P(v) per vertex
};
/* Projective cover: one copy of P(v) per basis vector of the vertex-v
 * component of M / rad M, mapped in through a lift of that vector. */
Cover projective_cover(const Representation& m);

/* Vector-space dual as a module over the opposite algebra: same dimensions,
 * every arrow matrix transposed. */
Representation vs_dual(const Representation& m);

enum class IsoVerdict { Yes, No, Undetermined };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::No;
    std::optional<Morphism> witness; // present exactly when verdict == Yes
};

/* Isomorphism test. Exact "no" via dimension vectors or Hom/End dimension
 * mismatches, or via exhausting all combinations of a hom basis when the
 * search space is small (p^dim_hom <= 65536); otherwise a deterministic
 * randomized search that may come back Undetermined. */
IsoResult is_isomorphic(const Representation& m, const Representation& n);

/* Every indecomposable projective uniserial on both sides. */
bool is_nakayama(const BoundQuiverAlgebra& alg);
/* All indecomposable modules P(v) / rad^k of a Nakayama algebra;
 * throws NotNakayama otherwise. */
std::vector<Representation> nakayama_indecomposables(AlgebraPtr algebra);

}  // namespace gorhom

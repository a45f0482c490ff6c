#pragma once

/* Verification sweeps over whole algebras: the cyclic square-zero family
 * generator with its expected Ext pattern, sweeps that hunt for
 * self-orthogonal non-projective Gorenstein projectives and related
 * invariance failures, and a deterministic fuzzer over random Nakayama
 * algebras. Every sweep returns a VerificationReport whose verdict is
 * "pass" only when every contributing certificate is decisive. */

#include <random>

#include "gorhom/report.h"

namespace gorhom {

/* Cyclic quiver on n >= 3 vertices, one arrow i -> i+1 (wrapping), with all
 * length-2 paths killed; a radical-square-zero self-injective Nakayama
 * algebra of dimension 2n. */
AlgebraPtr cyclic_family(int n, uint32_t p = 2);

/* For every simple S(j) of cyclic_family(n): certify Gorenstein
 * projectivity, confirm non-projectivity, and confirm the self-Ext pattern:
 * dim Ext^i(S(j), S(j)) = 0 for 1 <= i <= t (indeed for i < n) with first
 * nonzero degree exactly n, of dimension 1. Requires n > t + 1 >= 2. */
VerificationReport verify_cyclic_family(int n, int t, int bound = kDefaultBound,
                                        uint32_t p = 2);

/* Enumerate the indecomposables of a Nakayama algebra, certify Gorenstein
 * projectivity and self-orthogonality, and flag any module that is
 * GP-certified, self-orthogonality-certified, and not projective. */
VerificationReport gpc_check(const AlgebraPtr& alg, int bound = kDefaultBound);

/* Left/right symmetry: for every GP-certified indecomposable M, the
 * self-orthogonality verdicts of M and its hom-dual agree, their Ext tables
 * agree for degrees 1..6, and the gpc_check verdicts of the algebra and its
 * opposite coincide. */
VerificationReport symmetry_check(const AlgebraPtr& alg, int bound = kDefaultBound);

/* For every GP- and self-orthogonality-certified indecomposable M: the
 * syzygies Omega^i M (i = 1..4) are certified self-orthogonal, and the
 * transpose of M is certified self-orthogonal over the opposite algebra. */
VerificationReport syzygy_orthogonality_check(const AlgebraPtr& alg,
                                              int bound = kDefaultBound);

/* For every indecomposable M whose Ext against M + algebra is certified to
 * vanish: being projective and being GP-certified must coincide. */
VerificationReport ext_projectivity_check(const AlgebraPtr& alg, int bound = kDefaultBound);

struct FuzzOptions {
    uint64_t seed = 1;
    int count = 100;
    int max_vertices = 6;
    int bound = kDefaultBound;
    uint32_t p = 2;
};

/* Deterministically generate `count` connected Nakayama bound quiver
 * algebras (linear or cyclic, random monomial relations of length 2..5)
 * and run gpc_check on each; any violation is reported with the algebra
 * and module in replayable text form. */
VerificationReport fuzz_nakayama(const FuzzOptions& opt);

/* The fuzzer's generator, exposed for replay in tests. */
AlgebraPtr random_nakayama_algebra(std::mt19937_64& rng, int max_vertices, uint32_t p);

/* Names aligned with nakayama_indecomposables order: P(v)/rad^k. */
std::vector<std::string> indecomposable_names(const BoundQuiverAlgebra& alg);

}  // namespace gorhom

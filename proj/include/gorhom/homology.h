#pragma once

/* Minimal projective resolutions and everything built on them: syzygies,
 * Ext dimensions, stable hom, the transpose, the hom-dual into the algebra,
 * and vanishing certificates obtained from syzygy-orbit repeats.
 *
 * A certificate search walks degrees i = 1, 2, ... up to a bound: a nonzero
 * Ext dimension settles the question negatively; otherwise, once the i-th
 * syzygy is isomorphic to an earlier one, every higher Ext dimension is
 * forced to zero by dimension shifting along the repeat, which settles it
 * positively. Only when the bound runs out first is the result open. */

#include <optional>
#include <vector>

#include "gorhom/representation.h"

namespace gorhom {

inline constexpr int kDefaultBound = 64;

/* Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, grown on
 * demand. Terms are covers of successive syzygies, so minimality is built
 * in rather than checked. */
class Resolution {
public:
    explicit Resolution(Representation m);

    const Representation& module() const { return syzygies_[0]; }
    /* P_i. */
    const Representation& term(int i);
    /* d_i: P_i -> P_{i-1}, defined for i >= 1. */
    const Morphism& differential(int i);
    /* P_0 -> M. */
    const Morphism& augmentation();
    /* Omega^i: the module itself for i = 0, then successive kernels. */
    const Representation& syzygy(int i);
    /* Omega^i -> P_{i-1}, defined for i >= 1. */
    const Morphism& syzygy_inclusion(int i);

    void extend_to(int i);

private:
    std::vector<Representation> syzygies_;
    std::vector<Cover> covers_;      // covers_[i] covers syzygies_[i]
    std::vector<Morphism> inclusions_;    // [i]: syzygies_[i] -> term(i-1), i >= 1
    std::vector<Morphism> differentials_; // [i]: term(i) -> term(i-1), i >= 1
};

/* dim Ext^i(M, N) along a shared resolution of M, with the induced cochain
 * Hom(P_i, N) and its rank data cached per degree. */
class ExtCalculator {
public:
    ExtCalculator(Resolution& res, Representation n);
    int dim(int i);

private:
    void ensure(int i);

    Resolution& res_;
    Representation n_;
    std::vector<std::vector<Morphism>> hom_bases_; // [i]: basis of Hom(P_i, N)
    std::vector<int> delta_ranks_; // [i]: rank of precomposition with d_i, i >= 1
};

/* One-shot dim Ext^i(M, N). */
int ext_dim(const Representation& m, const Representation& n, int i);

/* dim Ext^i(M, N) for i = 1..upto, sharing one resolution. */
std::vector<int> ext_table(const Representation& m, const Representation& n, int upto);

/* The cover of M is an isomorphism. */
bool is_projective(const Representation& m);

/* Hom(M, N) modulo morphisms factoring through a projective; a morphism
 * factors through some projective exactly when it factors through the
 * projective cover of N, so the quotient is by the image of composition
 * with that cover. */
int stable_hom_dim(const Representation& m, const Representation& n);

/* Hom-dual into the algebra, realized vertexwise: the component of M^* at
 * vertex w is Hom(M, P(w)), and the reversed arrow of a: u -> w acts by
 * postcomposing with the morphism P(w) -> P(u) that prepends a. Keeping the
 * hom bases around lets morphisms be dualized in the same coordinates. */
struct StarDual {
    Representation dual; // over the opposite algebra
    std::vector<std::vector<Morphism>> bases; // [w]: basis of Hom(M, P(w))
};
StarDual dual_star_data(const Representation& m);
Representation dual_star(const Representation& m);
/* Dual of f: M -> N, a morphism N^* -> M^*; the callers pass the star data
 * of f's source and of f's target. */
Morphism star_morphism(const Morphism& f, const StarDual& source_star,
                       const StarDual& target_star);

/* Cokernel of the dualized first differential of a minimal resolution,
 * a module over the opposite algebra. Zero when M is projective. */
Representation transpose(const Representation& m);

/* The dual of the regular module over the opposite algebra is projective. */
bool is_self_injective(const AlgebraPtr& alg);

enum class CertKind { CertifiedVanishing, NonzeroAt, UnknownBeyond };

struct Certificate {
    CertKind kind = CertKind::UnknownBeyond;
    int bound = 0;
    /* ext_dims[k] = dim Ext^{k+1}(M, N) for every degree examined; all zero
     * except possibly the last entry when kind == NonzeroAt. */
    std::vector<int> ext_dims;
    /* Syzygy repeat syzygy(period_end) ~= syzygy(period_start) with the
     * isomorphism that witnesses it; set when kind == CertifiedVanishing. */
    int period_start = -1, period_end = -1;
    std::optional<Morphism> witness;
    /* First degree with nonzero Ext and its dimension; set for NonzeroAt. */
    int nonzero_degree = -1, nonzero_dim = 0;

    bool vanishes() const { return kind == CertKind::CertifiedVanishing; }
};

/* Decide whether Ext^i(M, N) = 0 for all i >= 1, by the bounded orbit walk
 * described above. Throws UndeterminedIsomorphism if a syzygy comparison
 * comes back undetermined: certificates never guess. */
Certificate ext_vanishing_certificate(const Representation& m, const Representation& n,
                                      int bound = kDefaultBound);

Certificate self_orthogonality_certificate(const Representation& m, int bound = kDefaultBound);

enum class GpVerdict { Yes, No, Inconclusive };

struct GpResult {
    GpVerdict verdict = GpVerdict::Inconclusive;
    Certificate forward;    // Ext^i(M, algebra) over the base algebra
    Certificate transposed; // Ext^i(Tr M, opposite algebra) over the opposite
};

/* Gorenstein projectivity: certified vanishing of Ext against the algebra
 * for both M and its transpose. */
GpResult is_gorenstein_projective(const Representation& m, int bound = kDefaultBound);

}  // namespace gorhom

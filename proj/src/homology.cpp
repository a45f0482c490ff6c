#include "gorhom/homology.h"

#include <cassert>

#include "gorhom/errors.h"

namespace gorhom {

Resolution::Resolution(Representation m) {
    syzygies_.push_back(std::move(m));
}

void Resolution::extend_to(int i) {
    while ((int)covers_.size() <= i) {
        int j = (int)covers_.size();
        covers_.push_back(projective_cover(syzygies_[j]));
        Morphism incl = kernel_inclusion(covers_[j].epi);
        syzygies_.push_back(incl.source);
        inclusions_.push_back(std::move(incl));
        if (j >= 1)
            differentials_.push_back(compose(inclusions_[j - 1], covers_[j].epi));
    }
}

const Representation& Resolution::term(int i) {
    extend_to(i);
    return covers_[i].proj;
}

const Morphism& Resolution::differential(int i) {
    assert(i >= 1);
    extend_to(i);
    return differentials_[i - 1];
}

const Morphism& Resolution::augmentation() {
    extend_to(0);
    return covers_[0].epi;
}

const Representation& Resolution::syzygy(int i) {
    if (i > 0) extend_to(i - 1);
    return syzygies_[i];
}

const Morphism& Resolution::syzygy_inclusion(int i) {
    assert(i >= 1);
    extend_to(i - 1);
    return inclusions_[i - 1];
}

ExtCalculator::ExtCalculator(Resolution& res, Representation n)
    : res_(res), n_(std::move(n)) {
    if (res_.module().algebra != n_.algebra)
        throw AlgebraMismatch("Ext of modules over different algebras");
}

void ExtCalculator::ensure(int i) {
    while ((int)hom_bases_.size() <= i)
        hom_bases_.push_back(hom_space(res_.term((int)hom_bases_.size()), n_));
    while ((int)delta_ranks_.size() < i) {
        int d = (int)delta_ranks_.size() + 1; // rank of precomposition with d_{d}
        const std::vector<Morphism>& from = hom_bases_[d - 1];
        const std::vector<Morphism>& to = hom_bases_[d];
        Mat delta((int)to.size(), (int)from.size(), n_.algebra->characteristic());
        for (size_t j = 0; j < from.size(); ++j) {
            auto coords = coordinates_in(to, compose(from[j], res_.differential(d)));
            assert(coords && "composite escaped the hom basis");
            for (size_t r = 0; r < coords->size(); ++r) delta.at((int)r, (int)j) = (*coords)[r];
        }
        delta_ranks_.push_back(rank(delta));
    }
}

int ExtCalculator::dim(int i) {
    assert(i >= 0);
    ensure(i + 1);
    int d = (int)hom_bases_[i].size() - delta_ranks_[i]; // minus rank of delta_{i+1}
    if (i >= 1) d -= delta_ranks_[i - 1];                // minus rank of delta_i
    assert(d >= 0);
    return d;
}

int ext_dim(const Representation& m, const Representation& n, int i) {
    Resolution res(m);
    ExtCalculator calc(res, n);
    return calc.dim(i);
}

std::vector<int> ext_table(const Representation& m, const Representation& n, int upto) {
    Resolution res(m);
    ExtCalculator calc(res, n);
    std::vector<int> out;
    for (int i = 1; i <= upto; ++i) out.push_back(calc.dim(i));
    return out;
}

bool is_projective(const Representation& m) {
    return projective_cover(m).proj.total_dim() == m.total_dim();
}

int stable_hom_dim(const Representation& m, const Representation& n) {
    if (m.algebra != n.algebra)
        throw AlgebraMismatch("stable hom of modules over different algebras");
    std::vector<Morphism> homs = hom_space(m, n);
    if (homs.empty()) return 0;
    Cover cover = projective_cover(n);
    std::vector<Morphism> lifted = hom_space(m, cover.proj);
    Mat img((int)homs.size(), (int)lifted.size(), m.algebra->characteristic());
    for (size_t j = 0; j < lifted.size(); ++j) {
        auto coords = coordinates_in(homs, compose(cover.epi, lifted[j]));
        assert(coords && "composite escaped the hom basis");
        for (size_t r = 0; r < coords->size(); ++r) img.at((int)r, (int)j) = (*coords)[r];
    }
    return (int)homs.size() - rank(img);
}

namespace {

/* P(w) -> P(u) prepending the arrow a: u -> w: the path p starting at w
 * goes to the reduction of a.p, a path starting at u. */
Morphism prepend_morphism(const AlgebraPtr& alg, int a) {
    const Quiver& q = alg->quiver();
    uint32_t p = alg->characteristic();
    int u = q.arrows[a].source, w = q.arrows[a].target;
    Representation pw = projective_module(alg, w);
    Representation pu = projective_module(alg, u);
    ProjectiveBasis pbw = projective_basis(*alg, w);
    ProjectiveBasis pbu = projective_basis(*alg, u);
    std::vector<Mat> blocks;
    for (int x = 0; x < q.num_vertices(); ++x) {
        Mat b(pu.dims[x], pw.dims[x], p);
        for (int c = 0; c < pw.dims[x]; ++c) {
            int g = pbw.vertex_lists[x][c];
            AlgElem r = alg->reduce(concat(PathWord{u, w, {a}}, alg->basis_word(g)));
            for (int t = 0; t < alg->dim(); ++t)
                if (r[t]) b.at(pbu.local_of_global[t], c) = r[t];
        }
        blocks.push_back(std::move(b));
    }
    return Morphism{std::move(pw), std::move(pu), std::move(blocks)};
}

}  // namespace

StarDual dual_star_data(const Representation& m) {
    AlgebraPtr alg = m.algebra;
    AlgebraPtr opp = alg->opposite();
    const Quiver& q = alg->quiver();
    uint32_t p = alg->characteristic();

    StarDual sd;
    std::vector<Representation> projs;
    for (int w = 0; w < q.num_vertices(); ++w) {
        projs.push_back(projective_module(alg, w));
        sd.bases.push_back(hom_space(m, projs.back()));
    }
    std::vector<int> dims;
    for (const auto& b : sd.bases) dims.push_back((int)b.size());

    std::vector<Mat> action;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrows[a].source, w = q.arrows[a].target;
        Morphism lam = prepend_morphism(alg, a);
        Mat block(dims[u], dims[w], p);
        for (size_t j = 0; j < sd.bases[w].size(); ++j) {
            auto coords = coordinates_in(sd.bases[u], compose(lam, sd.bases[w][j]));
            assert(coords && "composite escaped the hom basis");
            for (size_t r = 0; r < coords->size(); ++r) block.at((int)r, (int)j) = (*coords)[r];
        }
        action.push_back(std::move(block));
    }
    sd.dual = make_representation(opp, std::move(dims), std::move(action));
    return sd;
}

Representation dual_star(const Representation& m) {
    return dual_star_data(m).dual;
}

Morphism star_morphism(const Morphism& f, const StarDual& source_star,
                       const StarDual& target_star) {
    uint32_t p = f.source.algebra->characteristic();
    std::vector<Mat> blocks;
    for (size_t w = 0; w < f.blocks.size(); ++w) {
        Mat b((int)source_star.bases[w].size(), (int)target_star.bases[w].size(), p);
        for (size_t j = 0; j < target_star.bases[w].size(); ++j) {
            auto coords = coordinates_in(source_star.bases[w],
                                         compose(target_star.bases[w][j], f));
            assert(coords && "composite escaped the hom basis");
            for (size_t r = 0; r < coords->size(); ++r) b.at((int)r, (int)j) = (*coords)[r];
        }
        blocks.push_back(std::move(b));
    }
    return Morphism{target_star.dual, source_star.dual, std::move(blocks)};
}

Representation transpose(const Representation& m) {
    Resolution res(m);
    const Morphism& d1 = res.differential(1);
    StarDual s1 = dual_star_data(res.term(1));
    StarDual s0 = dual_star_data(res.term(0));
    Morphism dualized = star_morphism(d1, s1, s0);
    return cokernel_projection(dualized).target;
}

bool is_self_injective(const AlgebraPtr& alg) {
    return is_projective(vs_dual(regular_module(alg->opposite())));
}

Certificate ext_vanishing_certificate(const Representation& m, const Representation& n,
                                      int bound) {
    if (bound < 1) throw PreconditionError("certificate bound must be at least 1");
    Certificate cert;
    cert.bound = bound;
    Resolution res(m);
    ExtCalculator calc(res, n);
    for (int i = 1; i <= bound; ++i) {
        int d = calc.dim(i);
        cert.ext_dims.push_back(d);
        if (d > 0) {
            cert.kind = CertKind::NonzeroAt;
            cert.nonzero_degree = i;
            cert.nonzero_dim = d;
            return cert;
        }
        for (int a = 0; a < i; ++a) {
            IsoResult iso = is_isomorphic(res.syzygy(i), res.syzygy(a));
            if (iso.verdict == IsoVerdict::Undetermined)
                throw UndeterminedIsomorphism("syzygy comparison at degrees " +
                                              std::to_string(a) + " and " + std::to_string(i) +
                                              " came back undetermined");
            if (iso.verdict == IsoVerdict::Yes) {
                cert.kind = CertKind::CertifiedVanishing;
                cert.period_start = a;
                cert.period_end = i;
                cert.witness = std::move(iso.witness);
                return cert;
            }
        }
    }
    cert.kind = CertKind::UnknownBeyond;
    return cert;
}

Certificate self_orthogonality_certificate(const Representation& m, int bound) {
    return ext_vanishing_certificate(m, m, bound);
}

GpResult is_gorenstein_projective(const Representation& m, int bound) {
    GpResult out;
    out.forward = ext_vanishing_certificate(m, regular_module(m.algebra), bound);
    if (out.forward.kind == CertKind::NonzeroAt) {
        out.verdict = GpVerdict::No;
        return out;
    }
    Representation tr = transpose(m);
    out.transposed = ext_vanishing_certificate(tr, regular_module(tr.algebra), bound);
    if (out.transposed.kind == CertKind::NonzeroAt) {
        out.verdict = GpVerdict::No;
        return out;
    }
    if (out.forward.kind == CertKind::CertifiedVanishing &&
        out.transposed.kind == CertKind::CertifiedVanishing)
        out.verdict = GpVerdict::Yes;
    else
        out.verdict = GpVerdict::Inconclusive;
    return out;
}

}  // namespace gorhom

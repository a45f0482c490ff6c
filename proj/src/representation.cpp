#include "gorhom/representation.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "gorhom/errors.h"

namespace gorhom {

int Representation::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

Mat Representation::act(const PathWord& w) const {
    Mat cur = Mat::identity(dims[w.source], algebra->characteristic());
    for (int a : w.arrows) cur = action[a] * cur;
    return cur;
}

Representation make_representation(AlgebraPtr algebra, std::vector<int> dims,
                                   std::vector<Mat> action) {
    const Quiver& q = algebra->quiver();
    uint32_t p = algebra->characteristic();
    if ((int)dims.size() != q.num_vertices())
        throw PreconditionError("expected one dimension per vertex");
    if ((int)action.size() != q.num_arrows())
        throw PreconditionError("expected one matrix per arrow");
    for (int v = 0; v < q.num_vertices(); ++v)
        if (dims[v] < 0) throw PreconditionError("negative dimension at a vertex");
    for (int a = 0; a < q.num_arrows(); ++a) {
        Mat& m = action[a];
        if (m.rows != dims[q.arrows[a].target] || m.cols != dims[q.arrows[a].source])
            throw PreconditionError("matrix for arrow " + q.arrows[a].label +
                                    " has the wrong shape");
        m.mod = p;
        for (auto& x : m.a) x %= p;
    }
    Representation rep{std::move(algebra), std::move(dims), std::move(action)};
    for (const auto& rel : rep.algebra->relations()) {
        const PathWord& first = rel.terms[0].second;
        Mat acc(rep.dims[first.target], rep.dims[first.source], p);
        for (const auto& [c, w] : rel.terms) acc.add_in_place(rep.act(w), c);
        if (!acc.is_zero())
            throw PreconditionError("relation " + format_sum(rep.algebra->quiver(), rel) +
                                    " does not act by zero");
    }
    return rep;
}

Representation zero_module(AlgebraPtr algebra) {
    const Quiver& q = algebra->quiver();
    uint32_t p = algebra->characteristic();
    std::vector<int> dims(q.num_vertices(), 0);
    std::vector<Mat> action;
    for (int a = 0; a < q.num_arrows(); ++a) action.emplace_back(0, 0, p);
    return Representation{std::move(algebra), std::move(dims), std::move(action)};
}

Representation simple_module(AlgebraPtr algebra, int v) {
    const Quiver& q = algebra->quiver();
    if (v < 0 || v >= q.num_vertices())
        throw UnknownVertex("vertex index " + std::to_string(v));
    uint32_t p = algebra->characteristic();
    std::vector<int> dims(q.num_vertices(), 0);
    dims[v] = 1;
    std::vector<Mat> action;
    for (int a = 0; a < q.num_arrows(); ++a)
        action.emplace_back(dims[q.arrows[a].target], dims[q.arrows[a].source], p);
    return Representation{std::move(algebra), std::move(dims), std::move(action)};
}

ProjectiveBasis projective_basis(const BoundQuiverAlgebra& alg, int v) {
    ProjectiveBasis pb;
    pb.vertex_lists.resize(alg.quiver().num_vertices());
    pb.local_of_global.assign(alg.dim(), -1);
    for (int g : alg.basis_with_source(v)) {
        int w = alg.word_target(g);
        pb.local_of_global[g] = (int)pb.vertex_lists[w].size();
        pb.vertex_lists[w].push_back(g);
    }
    return pb;
}

Representation projective_module(AlgebraPtr algebra, int v) {
    const Quiver& q = algebra->quiver();
    if (v < 0 || v >= q.num_vertices())
        throw UnknownVertex("vertex index " + std::to_string(v));
    uint32_t p = algebra->characteristic();
    ProjectiveBasis pb = projective_basis(*algebra, v);
    std::vector<int> dims(q.num_vertices());
    for (int w = 0; w < q.num_vertices(); ++w) dims[w] = (int)pb.vertex_lists[w].size();
    std::vector<Mat> action;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrows[a].source, w = q.arrows[a].target;
        Mat m(dims[w], dims[u], p);
        for (int c = 0; c < dims[u]; ++c) {
            int g = pb.vertex_lists[u][c];
            PathWord ext = concat(algebra->basis_word(g), PathWord{u, w, {a}});
            AlgElem r = algebra->reduce(ext);
            for (int k = 0; k < algebra->dim(); ++k)
                if (r[k]) m.at(pb.local_of_global[k], c) = r[k];
        }
        action.push_back(std::move(m));
    }
    return Representation{std::move(algebra), std::move(dims), std::move(action)};
}

Representation regular_module(AlgebraPtr algebra) {
    std::vector<Representation> parts;
    for (int v = 0; v < algebra->quiver().num_vertices(); ++v)
        parts.push_back(projective_module(algebra, v));
    return direct_sum(algebra, std::move(parts)).total;
}

bool Morphism::is_zero() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const Mat& b) { return b.is_zero(); });
}

bool is_valid_morphism(const Morphism& f) {
    const Quiver& q = f.source.algebra->quiver();
    if (f.source.algebra != f.target.algebra) return false;
    if ((int)f.blocks.size() != q.num_vertices()) return false;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (f.blocks[v].rows != f.target.dims[v] || f.blocks[v].cols != f.source.dims[v])
            return false;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrows[a].source, w = q.arrows[a].target;
        if (f.blocks[w] * f.source.action[a] != f.target.action[a] * f.blocks[u]) return false;
    }
    return true;
}

Morphism make_morphism(Representation source, Representation target, std::vector<Mat> blocks) {
    Morphism f{std::move(source), std::move(target), std::move(blocks)};
    if (f.source.algebra != f.target.algebra)
        throw AlgebraMismatch("morphism endpoints live over different algebras");
    if (!is_valid_morphism(f))
        throw PreconditionError("blocks do not define a module morphism");
    return f;
}

Morphism identity_morphism(const Representation& m) {
    std::vector<Mat> blocks;
    for (int d : m.dims) blocks.push_back(Mat::identity(d, m.algebra->characteristic()));
    return Morphism{m, m, std::move(blocks)};
}

Morphism zero_morphism(Representation source, Representation target) {
    if (source.algebra != target.algebra)
        throw AlgebraMismatch("morphism endpoints live over different algebras");
    std::vector<Mat> blocks;
    uint32_t p = source.algebra->characteristic();
    for (size_t v = 0; v < source.dims.size(); ++v)
        blocks.emplace_back(target.dims[v], source.dims[v], p);
    return Morphism{std::move(source), std::move(target), std::move(blocks)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source))
        throw PreconditionError("morphisms do not compose: middle modules differ");
    std::vector<Mat> blocks;
    for (size_t v = 0; v < f.blocks.size(); ++v) blocks.push_back(g.blocks[v] * f.blocks[v]);
    return Morphism{f.source, g.target, std::move(blocks)};
}

namespace {

/* Flattened coordinates of a vertex-indexed block family: blocks in vertex
 * order, each row-major. */
std::vector<int> block_offsets(const Representation& m, const Representation& n) {
    std::vector<int> off(m.dims.size() + 1, 0);
    for (size_t v = 0; v < m.dims.size(); ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    return off;
}

std::vector<uint32_t> flatten(const Morphism& f) {
    std::vector<uint32_t> out;
    for (const Mat& b : f.blocks) out.insert(out.end(), b.a.begin(), b.a.end());
    return out;
}

Morphism unflatten(const Representation& m, const Representation& n,
                   const std::vector<uint32_t>& coords) {
    uint32_t p = m.algebra->characteristic();
    std::vector<Mat> blocks;
    size_t pos = 0;
    for (size_t v = 0; v < m.dims.size(); ++v) {
        Mat b(n.dims[v], m.dims[v], p);
        std::copy(coords.begin() + pos, coords.begin() + pos + b.a.size(), b.a.begin());
        pos += b.a.size();
        blocks.push_back(std::move(b));
    }
    return Morphism{m, n, std::move(blocks)};
}

}  // namespace

std::vector<Morphism> hom_space(const Representation& m, const Representation& n) {
    if (m.algebra != n.algebra)
        throw AlgebraMismatch("hom space of modules over different algebras");
    const Quiver& q = m.algebra->quiver();
    uint32_t p = m.algebra->characteristic();
    std::vector<int> off = block_offsets(m, n);
    int unknowns = off.back();

    std::vector<std::vector<uint32_t>> rows;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrows[a].source, w = q.arrows[a].target;
        const Mat& am = m.action[a];
        const Mat& an = n.action[a];
        for (int r = 0; r < n.dims[w]; ++r)
            for (int c = 0; c < m.dims[u]; ++c) {
                std::vector<uint32_t> row(unknowns, 0);
                for (int j = 0; j < m.dims[w]; ++j) {
                    uint32_t coef = am.at(j, c);
                    if (coef) {
                        int idx = off[w] + r * m.dims[w] + j;
                        row[idx] = (row[idx] + coef) % p;
                    }
                }
                for (int i = 0; i < n.dims[u]; ++i) {
                    uint32_t coef = an.at(r, i);
                    if (coef) {
                        int idx = off[u] + i * m.dims[u] + c;
                        row[idx] = (row[idx] + p - coef) % p;
                    }
                }
                rows.push_back(std::move(row));
            }
    }
    if (unknowns == 0) return {}; /* only the zero morphism */
    Mat cmat((int)rows.size(), unknowns, p);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < unknowns; ++c) cmat.at((int)r, c) = rows[r][c];
    Mat basis = nullspace(cmat);
    std::vector<Morphism> out;
    for (int j = 0; j < basis.cols; ++j) {
        std::vector<uint32_t> coords(unknowns);
        for (int i = 0; i < unknowns; ++i) coords[i] = basis.at(i, j);
        out.push_back(unflatten(m, n, coords));
    }
    return out;
}

std::optional<std::vector<uint32_t>> coordinates_in(const std::vector<Morphism>& basis,
                                                    const Morphism& f) {
    uint32_t p = f.source.algebra->characteristic();
    std::vector<uint32_t> fb = flatten(f);
    Mat a((int)fb.size(), (int)basis.size(), p);
    for (size_t j = 0; j < basis.size(); ++j) {
        std::vector<uint32_t> col = flatten(basis[j]);
        for (size_t i = 0; i < col.size(); ++i) a.at((int)i, (int)j) = col[i];
    }
    Mat b((int)fb.size(), 1, p);
    for (size_t i = 0; i < fb.size(); ++i) b.at((int)i, 0) = fb[i];
    std::optional<Mat> x = solve(a, b);
    if (!x) return std::nullopt;
    std::vector<uint32_t> out(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) out[j] = x->at((int)j, 0);
    return out;
}

Morphism kernel_inclusion(const Morphism& f) {
    const Quiver& q = f.source.algebra->quiver();
    uint32_t p = f.source.algebra->characteristic();
    std::vector<Mat> incl;
    std::vector<int> kdims;
    for (size_t v = 0; v < f.blocks.size(); ++v) {
        incl.push_back(nullspace(f.blocks[v]));
        kdims.push_back(incl.back().cols);
    }
    std::vector<Mat> action;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrows[a].source, w = q.arrows[a].target;
        std::optional<Mat> ka = solve(incl[w], f.source.action[a] * incl[u]);
        assert(ka && "kernel is not arrow-stable");
        action.push_back(std::move(*ka));
    }
    (void)p;
    Representation kernel{f.source.algebra, std::move(kdims), std::move(action)};
    return Morphism{std::move(kernel), f.source, std::move(incl)};
}

Morphism cokernel_projection(const Morphism& f) {
    const Quiver& q = f.source.algebra->quiver();
    uint32_t p = f.source.algebra->characteristic();
    std::vector<Mat> proj;
    std::vector<Mat> section;
    std::vector<int> cdims;
    for (size_t v = 0; v < f.blocks.size(); ++v) {
        QuotientMap qm = quotient_map(f.blocks[v]);
        cdims.push_back(qm.projection.rows);
        Mat s(f.target.dims[v], qm.projection.rows, p);
        for (size_t k = 0; k < qm.kept.size(); ++k) s.at(qm.kept[k], (int)k) = 1;
        proj.push_back(std::move(qm.projection));
        section.push_back(std::move(s));
    }
    std::vector<Mat> action;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrows[a].source, w = q.arrows[a].target;
        action.push_back(proj[w] * (f.target.action[a] * section[u]));
    }
    Representation coker{f.source.algebra, std::move(cdims), std::move(action)};
    return Morphism{f.target, std::move(coker), std::move(proj)};
}

SumDecomposition direct_sum(AlgebraPtr algebra, std::vector<Representation> parts) {
    const Quiver& q = algebra->quiver();
    uint32_t p = algebra->characteristic();
    for (const auto& part : parts)
        if (part.algebra != algebra) throw AlgebraMismatch("direct sum over mixed algebras");

    std::vector<int> dims(q.num_vertices(), 0);
    std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(q.num_vertices(), 0));
    for (size_t k = 0; k < parts.size(); ++k)
        for (int v = 0; v < q.num_vertices(); ++v) {
            offsets[k][v] = dims[v];
            dims[v] += parts[k].dims[v];
        }
    std::vector<Mat> action;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrows[a].source, w = q.arrows[a].target;
        Mat m(dims[w], dims[u], p);
        for (size_t k = 0; k < parts.size(); ++k) {
            const Mat& b = parts[k].action[a];
            for (int r = 0; r < b.rows; ++r)
                for (int c = 0; c < b.cols; ++c)
                    if (b.at(r, c)) m.at(offsets[k][w] + r, offsets[k][u] + c) = b.at(r, c);
        }
        action.push_back(std::move(m));
    }
    SumDecomposition sum;
    sum.total = Representation{algebra, std::move(dims), std::move(action)};
    for (size_t k = 0; k < parts.size(); ++k) {
        std::vector<Mat> in, pr;
        for (int v = 0; v < q.num_vertices(); ++v) {
            Mat iv(sum.total.dims[v], parts[k].dims[v], p);
            Mat pv(parts[k].dims[v], sum.total.dims[v], p);
            for (int c = 0; c < parts[k].dims[v]; ++c) {
                iv.at(offsets[k][v] + c, c) = 1;
                pv.at(c, offsets[k][v] + c) = 1;
            }
            in.push_back(std::move(iv));
            pr.push_back(std::move(pv));
        }
        sum.inclusions.push_back(Morphism{parts[k], sum.total, std::move(in)});
        sum.projections.push_back(Morphism{sum.total, parts[k], std::move(pr)});
    }
    return sum;
}

Morphism from_sum(const SumDecomposition& sum, const std::vector<Morphism>& components) {
    if (components.size() != sum.inclusions.size())
        throw PreconditionError("one component morphism per summand required");
    if (components.empty()) throw PreconditionError("from_sum needs at least one summand");
    std::vector<Mat> blocks;
    for (size_t v = 0; v < sum.total.dims.size(); ++v) {
        Mat b = components[0].blocks[v];
        for (size_t k = 1; k < components.size(); ++k) b = hstack(b, components[k].blocks[v]);
        blocks.push_back(std::move(b));
    }
    return Morphism{sum.total, components[0].target, std::move(blocks)};
}

Morphism into_sum(const SumDecomposition& sum, const std::vector<Morphism>& components) {
    if (components.size() != sum.inclusions.size())
        throw PreconditionError("one component morphism per summand required");
    if (components.empty()) throw PreconditionError("into_sum needs at least one summand");
    std::vector<Mat> blocks;
    for (size_t v = 0; v < sum.total.dims.size(); ++v) {
        Mat b = components[0].blocks[v];
        for (size_t k = 1; k < components.size(); ++k) b = vstack(b, components[k].blocks[v]);
        blocks.push_back(std::move(b));
    }
    return Morphism{components[0].source, sum.total, std::move(blocks)};
}

Cover projective_cover(const Representation& m) {
    AlgebraPtr alg = m.algebra;
    const Quiver& q = alg->quiver();
    uint32_t p = alg->characteristic();

    Cover cover;
    cover.top_multiplicities.assign(q.num_vertices(), 0);
    std::vector<Representation> parts;
    std::vector<Morphism> comps;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Mat rad(m.dims[v], 0, p);
        for (int a = 0; a < q.num_arrows(); ++a)
            if (q.arrows[a].target == v) rad = hstack(rad, m.action[a]);
        QuotientMap qm = quotient_map(rad);
        cover.top_multiplicities[v] = (int)qm.kept.size();
        if (qm.kept.empty()) continue;

        Representation pv = projective_module(alg, v);
        ProjectiveBasis pb = projective_basis(*alg, v);
        /* matrix of each residue path from v acting on m, computed once */
        std::vector<Mat> acts(alg->dim());
        for (int w = 0; w < q.num_vertices(); ++w)
            for (int g : pb.vertex_lists[w]) acts[g] = m.act(alg->basis_word(g));

        for (int lift : qm.kept) {
            std::vector<Mat> blocks;
            for (int w = 0; w < q.num_vertices(); ++w) {
                Mat b(m.dims[w], pv.dims[w], p);
                for (int c = 0; c < pv.dims[w]; ++c) {
                    const Mat& pa = acts[pb.vertex_lists[w][c]];
                    for (int r = 0; r < m.dims[w]; ++r) b.at(r, c) = pa.at(r, lift);
                }
                blocks.push_back(std::move(b));
            }
            parts.push_back(pv);
            comps.push_back(Morphism{pv, m, std::move(blocks)});
        }
    }
    if (parts.empty()) {
        cover.proj = zero_module(alg);
        cover.epi = zero_morphism(cover.proj, m);
        return cover;
    }
    SumDecomposition sum = direct_sum(alg, std::move(parts));
    cover.epi = from_sum(sum, comps);
    cover.proj = std::move(sum.total);
    return cover;
}

Representation vs_dual(const Representation& m) {
    AlgebraPtr opp = m.algebra->opposite();
    std::vector<Mat> action;
    for (const Mat& b : m.action) action.push_back(b.transposed());
    return Representation{std::move(opp), m.dims, std::move(action)};
}

namespace {

bool invertible(const Morphism& f) {
    for (const Mat& b : f.blocks) {
        if (b.rows != b.cols) return false;
        if (rank(b) != b.rows) return false;
    }
    return true;
}

Morphism combine(const Representation& m, const Representation& n,
                 const std::vector<Morphism>& basis, const std::vector<uint32_t>& coeff) {
    Morphism f = zero_morphism(m, n);
    for (size_t k = 0; k < basis.size(); ++k) {
        if (!coeff[k]) continue;
        for (size_t v = 0; v < f.blocks.size(); ++v)
            f.blocks[v].add_in_place(basis[k].blocks[v], coeff[k]);
    }
    return f;
}

}  // namespace

IsoResult is_isomorphic(const Representation& m, const Representation& n) {
    if (m.algebra != n.algebra)
        throw AlgebraMismatch("isomorphism test across different algebras");
    if (m.dims != n.dims) return {IsoVerdict::No, std::nullopt};
    if (m.total_dim() == 0) return {IsoVerdict::Yes, identity_morphism(m)};
    if (m.action == n.action) return {IsoVerdict::Yes, identity_morphism(m)};

    std::vector<Morphism> mn = hom_space(m, n);
    if (mn.size() != hom_space(n, m).size()) return {IsoVerdict::No, std::nullopt};
    if (hom_space(m, m).size() != hom_space(n, n).size()) return {IsoVerdict::No, std::nullopt};
    if (mn.empty()) return {IsoVerdict::No, std::nullopt};

    uint32_t p = m.algebra->characteristic();
    uint64_t space = 1;
    bool exhaustive = true;
    for (size_t k = 0; k < mn.size(); ++k) {
        space *= p;
        if (space > 65536) {
            exhaustive = false;
            break;
        }
    }
    if (exhaustive) {
        std::vector<uint32_t> coeff(mn.size(), 0);
        for (uint64_t it = 1; it < space; ++it) {
            int pos = 0;
            while (true) {
                coeff[pos] = (coeff[pos] + 1) % p;
                if (coeff[pos]) break;
                ++pos;
            }
            Morphism f = combine(m, n, mn, coeff);
            if (invertible(f)) return {IsoVerdict::Yes, std::move(f)};
        }
        return {IsoVerdict::No, std::nullopt};
    }

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<uint32_t> dist(0, p - 1);
    for (int trial = 0; trial < 256; ++trial) {
        std::vector<uint32_t> coeff(mn.size());
        bool nonzero = false;
        for (auto& c : coeff) {
            c = dist(rng);
            nonzero |= (c != 0);
        }
        if (!nonzero) continue;
        Morphism f = combine(m, n, mn, coeff);
        if (invertible(f)) return {IsoVerdict::Yes, std::move(f)};
    }
    return {IsoVerdict::Undetermined, std::nullopt};
}

namespace {

bool uniserial_side(const BoundQuiverAlgebra& alg) {
    for (int v = 0; v < alg.quiver().num_vertices(); ++v) {
        std::vector<int> per_length;
        for (int g : alg.basis_with_source(v)) {
            int len = alg.basis_word(g).length();
            if ((int)per_length.size() <= len) per_length.resize(len + 1, 0);
            if (++per_length[len] > 1) return false;
        }
    }
    return true;
}

}  // namespace

bool is_nakayama(const BoundQuiverAlgebra& alg) {
    return uniserial_side(alg) && uniserial_side(*alg.opposite());
}

std::vector<Representation> nakayama_indecomposables(AlgebraPtr algebra) {
    if (!is_nakayama(*algebra))
        throw NotNakayama("indecomposables are only enumerated for Nakayama algebras");
    const Quiver& q = algebra->quiver();
    uint32_t p = algebra->characteristic();
    std::vector<Representation> out;
    for (int v = 0; v < q.num_vertices(); ++v) {
        /* one residue path per length, already in length order */
        const std::vector<int>& words = algebra->basis_with_source(v);
        for (int k = 1; k <= (int)words.size(); ++k) {
            std::vector<int> dims(q.num_vertices(), 0);
            std::vector<int> local(algebra->dim(), -1);
            for (int i = 0; i < k; ++i) {
                int g = words[i];
                local[g] = dims[algebra->word_target(g)]++;
            }
            std::vector<Mat> action;
            for (int a = 0; a < q.num_arrows(); ++a) {
                int u = q.arrows[a].source, w = q.arrows[a].target;
                Mat mat(dims[w], dims[u], p);
                for (int i = 0; i < k; ++i) {
                    int g = words[i];
                    if (algebra->word_target(g) != u) continue;
                    PathWord ext = concat(algebra->basis_word(g), PathWord{u, w, {a}});
                    AlgElem r = algebra->reduce(ext);
                    for (int t = 0; t < algebra->dim(); ++t)
                        if (r[t] && local[t] >= 0) mat.at(local[t], local[g]) = r[t];
                }
                action.push_back(std::move(mat));
            }
            out.push_back(Representation{algebra, std::move(dims), std::move(action)});
        }
    }
    return out;
}

}  // namespace gorhom

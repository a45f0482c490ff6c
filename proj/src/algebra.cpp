#include "gorhom/algebra.h"

#include <algorithm>
#include <cassert>

#include "gorhom/errors.h"

namespace gorhom {

namespace {

// safety valve against runaway enumeration on non-admissible inputs
constexpr size_t kLayerPathBudget = 200000;

}  // namespace

AlgebraPtr BoundQuiverAlgebra::build(Quiver quiver, std::vector<PathSum> relations, uint32_t p,
                                     int length_cap) {
    if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    quiver.validate();
    std::shared_ptr<BoundQuiverAlgebra> alg(new BoundQuiverAlgebra());
    alg->quiver_ = std::move(quiver);
    alg->p_ = p;
    alg->relations_ = std::move(relations);
    alg->length_cap_ = length_cap;
    alg->construct();
    return alg;
}

AlgebraPtr build_algebra(Quiver quiver, std::vector<PathSum> relations, uint32_t p,
                         int length_cap) {
    return BoundQuiverAlgebra::build(std::move(quiver), std::move(relations), p, length_cap);
}

void BoundQuiverAlgebra::construct() {
    const int nv = quiver_.num_vertices();
    const int na = quiver_.num_arrows();

    // normalize relations: coefficients mod p, drop vanished terms/relations,
    // enforce the admissibility lower bound
    std::vector<PathSum> rels;
    for (const auto& rel : relations_) {
        PathSum r;
        for (auto [c, w] : rel.terms) {
            c %= p_;
            if (!c) continue;
            if (!composable_in(quiver_, w))
                throw NotAdmissible("relation term is not a composable path");
            if (w.length() < 2)
                throw NotAdmissible("relation term " + format_word(quiver_, w) +
                                    " has length < 2");
            r.terms.emplace_back(c, w);
        }
        if (r.empty()) continue;
        for (const auto& [c, w] : r.terms) {
            if (w.source != r.terms[0].second.source || w.target != r.terms[0].second.target)
                throw NotAdmissible("relation mixes source/target pairs");
            if (w.length() != r.terms[0].second.length())
                throw NotAdmissible(
                    "relation mixes path lengths (length-inhomogeneous relations are not "
                    "supported)");
        }
        rels.push_back(std::move(r));
    }
    relations_ = std::move(rels);

    WordOrder order(quiver_);
    std::vector<std::vector<PathWord>> layers;  // raw paths by length
    layers.push_back({});
    for (int v = 0; v < nv; ++v) layers[0].push_back(vertex_path(v));
    std::sort(layers[0].begin(), layers[0].end(), order);

    // arrows out of each vertex, label order, for deterministic extension
    std::vector<std::vector<int>> out(nv);
    for (int a = 0; a < na; ++a) out[quiver_.arrows[a].source].push_back(a);
    for (auto& lst : out)
        std::sort(lst.begin(), lst.end(), [&](int lhs, int rhs) {
            return quiver_.arrows[lhs].label < quiver_.arrows[rhs].label;
        });

    dead_length_ = -1;
    for (int len = 1; len <= length_cap_; ++len) {
        std::vector<PathWord> layer;
        for (const auto& w : layers[len - 1])
            for (int a : out[w.target]) {
                PathWord ext = w;
                ext.arrows.push_back(a);
                ext.target = quiver_.arrows[a].target;
                layer.push_back(std::move(ext));
            }
        if (layer.size() > kLayerPathBudget)
            throw NotAdmissible("path layer exceeds enumeration budget at length " +
                                std::to_string(len));
        std::sort(layer.begin(), layer.end(), order);
        if (layer.empty()) {
            dead_length_ = len;
            layers.push_back({});
            break;
        }

        // split the layer into (source, target) blocks
        std::map<std::pair<int, int>, Block> layer_blocks;
        for (auto& w : layer) {
            auto& b = layer_blocks[{w.source, w.target}];
            b.local_index[w.arrows] = (int)b.paths.size();
            b.paths.push_back(w);
        }

        // ideal span inside each block: u * rel * w over raw paths
        std::map<std::pair<int, int>, std::vector<std::vector<uint32_t>>> ideal_rows;
        for (const auto& rel : relations_) {
            int rlen = rel.terms[0].second.length();
            if (rlen > len) continue;
            int rs = rel.terms[0].second.source, rt = rel.terms[0].second.target;
            for (int llen = 0; llen + rlen <= len; ++llen) {
                int wlen = len - rlen - llen;
                for (const auto& u : layers[llen]) {
                    if (u.target != rs) continue;
                    for (const auto& w : layers[wlen]) {
                        if (w.source != rt) continue;
                        auto& block = layer_blocks.at({u.source, w.target});
                        std::vector<uint32_t> row(block.paths.size(), 0);
                        for (const auto& [c, mid] : rel.terms) {
                            PathWord full = concat(concat(u, mid), w);
                            int j = block.local_index.at(full.arrows);
                            row[j] = (row[j] + c) % p_;
                        }
                        ideal_rows[{u.source, w.target}].push_back(std::move(row));
                    }
                }
            }
        }

        bool all_dead = true;
        for (auto& [st, block] : layer_blocks) {
            int n = (int)block.paths.size();
            Mat ideal(0, n, p_);
            auto it = ideal_rows.find(st);
            if (it != ideal_rows.end()) ideal = Mat::from_rows(std::move(it->second), p_);
            Rref e = rref(std::move(ideal));
            std::vector<bool> is_pivot(n, false);
            for (int c : e.pivot_cols) is_pivot[c] = true;
            for (int j = 0; j < n; ++j)
                if (!is_pivot[j]) block.kept_local.push_back(j);
            if (!block.kept_local.empty()) all_dead = false;
            // path j reduces to -(echelon tail) on kept coordinates
            block.reduction = Mat(n, (int)block.kept_local.size(), p_);
            for (int k = 0; k < (int)block.kept_local.size(); ++k)
                block.reduction.at(block.kept_local[k], k) = 1;
            for (int t = 0; t < (int)e.pivot_cols.size(); ++t)
                for (int k = 0; k < (int)block.kept_local.size(); ++k) {
                    uint32_t v = e.r.at(t, block.kept_local[k]);
                    if (v) block.reduction.at(e.pivot_cols[t], k) = p_ - v;
                }
            blocks_[{st.first, st.second, len}] = std::move(block);
        }
        layers.push_back(std::move(layer));
        if (all_dead) {
            dead_length_ = len;
            break;
        }
    }
    if (dead_length_ < 0)
        throw NotAdmissible("no zero path layer within length cap " +
                            std::to_string(length_cap_) +
                            " (ideal not admissible or cap too small)");

    // residue basis: vertex paths plus kept paths of every live layer
    basis_ = layers[0];
    for (auto& [key, block] : blocks_) {
        block.kept_global.resize(block.kept_local.size());
        for (int k = 0; k < (int)block.kept_local.size(); ++k) {
            block.kept_global[k] = -1;  // filled below
            basis_.push_back(block.paths[block.kept_local[k]]);
        }
    }
    std::sort(basis_.begin(), basis_.end(), order);
    for (auto& [key, block] : blocks_)
        for (int k = 0; k < (int)block.kept_local.size(); ++k) {
            const PathWord& w = block.paths[block.kept_local[k]];
            int g = (int)(std::lower_bound(basis_.begin(), basis_.end(), w, order) -
                          basis_.begin());
            assert(basis_[g] == w);
            block.kept_global[k] = g;
        }

    by_source_.assign(nv, {});
    for (int i = 0; i < dim(); ++i) by_source_[basis_[i].source].push_back(i);

    table_.assign((size_t)dim() * dim(), {});
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            if (basis_[i].target != basis_[j].source) {
                table_[(size_t)i * dim() + j] = zero_elem();
                continue;
            }
            table_[(size_t)i * dim() + j] = reduce(concat(basis_[i], basis_[j]));
        }
}

int BoundQuiverAlgebra::basis_index(const PathWord& w) const {
    WordOrder order(quiver_);
    auto it = std::lower_bound(basis_.begin(), basis_.end(), w, order);
    if (it != basis_.end() && *it == w) return (int)(it - basis_.begin());
    return -1;
}

AlgElem BoundQuiverAlgebra::unit() const {
    AlgElem e = zero_elem();
    for (int v = 0; v < quiver_.num_vertices(); ++v) e[basis_index(vertex_path(v))] = 1;
    return e;
}

AlgElem BoundQuiverAlgebra::idempotent(int v) const {
    if (v < 0 || v >= quiver_.num_vertices())
        throw UnknownVertex("vertex index " + std::to_string(v));
    AlgElem e = zero_elem();
    e[basis_index(vertex_path(v))] = 1;
    return e;
}

AlgElem BoundQuiverAlgebra::reduce(const PathWord& w) const {
    assert(composable_in(quiver_, w));
    AlgElem out = zero_elem();
    if (w.length() >= dead_length_) return out;
    if (w.is_vertex()) {
        out[basis_index(w)] = 1;
        return out;
    }
    const Block& block = blocks_.at({w.source, w.target, w.length()});
    int j = block.local_index.at(w.arrows);
    for (int k = 0; k < (int)block.kept_local.size(); ++k) {
        uint32_t c = block.reduction.at(j, k);
        if (c) out[block.kept_global[k]] = c;
    }
    return out;
}

AlgElem BoundQuiverAlgebra::reduce(const PathSum& s) const {
    AlgElem out = zero_elem();
    for (const auto& [c, w] : s.terms) {
        AlgElem t = reduce(w);
        for (int i = 0; i < dim(); ++i) out[i] = (uint32_t)((out[i] + (uint64_t)c * t[i]) % p_);
    }
    return out;
}

AlgElem BoundQuiverAlgebra::multiply(const AlgElem& x, const AlgElem& y) const {
    assert((int)x.size() == dim() && (int)y.size() == dim());
    AlgElem out = zero_elem();
    for (int i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < dim(); ++j) {
            if (!y[j]) continue;
            uint64_t c = (uint64_t)x[i] * y[j] % p_;
            if (!c) continue;
            const AlgElem& t = table(i, j);
            for (int k = 0; k < dim(); ++k)
                if (t[k]) out[k] = (uint32_t)((out[k] + c * t[k]) % p_);
        }
    }
    return out;
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
    std::call_once(opposite_once_, [this] {
        if (auto orig = opposite_of_.lock()) {
            opposite_ = orig;
            return;
        }
        std::vector<PathSum> rev_rels;
        Quiver rq = quiver_.reversed();
        for (const auto& rel : relations_) {
            PathSum r;
            for (const auto& [c, w] : rel.terms)
                r.terms.emplace_back(c, reversed_word(quiver_, rq, w));
            rev_rels.push_back(std::move(r));
        }
        AlgebraPtr opp = build(std::move(rq), std::move(rev_rels), p_, length_cap_);
        opp->opposite_of_ = shared_from_this();
        opposite_ = std::move(opp);
    });
    return opposite_;
}

bool BoundQuiverAlgebra::structurally_equal(const BoundQuiverAlgebra& other) const {
    return quiver_ == other.quiver_ && p_ == other.p_ && basis_ == other.basis_ &&
           table_ == other.table_;
}

}  // namespace gorhom

#include "gorhom/quiver.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "gorhom/errors.h"

namespace gorhom {

int Quiver::vertex_index(const std::string& id) const {
    for (int i = 0; i < (int)vertices.size(); ++i)
        if (vertices[i] == id) return i;
    return -1;
}

int Quiver::arrow_index(const std::string& label) const {
    for (int i = 0; i < (int)arrows.size(); ++i)
        if (arrows[i].label == label) return i;
    return -1;
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second) throw Error("duplicate vertex id: " + v);
    seen.clear();
    for (const auto& a : arrows) {
        if (!seen.insert(a.label).second) throw Error("duplicate arrow label: " + a.label);
        if (a.source < 0 || a.source >= num_vertices() || a.target < 0 ||
            a.target >= num_vertices())
            throw Error("arrow " + a.label + " has an undeclared endpoint");
    }
}

Quiver Quiver::reversed() const {
    Quiver r = *this;
    for (auto& a : r.arrows) std::swap(a.source, a.target);
    return r;
}

PathWord vertex_path(int v) {
    PathWord w;
    w.source = w.target = v;
    return w;
}

PathWord concat(const PathWord& lhs, const PathWord& rhs) {
    assert(lhs.target == rhs.source);
    PathWord w;
    w.source = lhs.source;
    w.target = rhs.target;
    w.arrows = lhs.arrows;
    w.arrows.insert(w.arrows.end(), rhs.arrows.begin(), rhs.arrows.end());
    return w;
}

PathWord reversed_word(const Quiver& q, const Quiver& qrev, const PathWord& w) {
    (void)q;
    (void)qrev;
    PathWord r;
    r.source = w.target;
    r.target = w.source;
    r.arrows.assign(w.arrows.rbegin(), w.arrows.rend());
    return r;
}

bool composable_in(const Quiver& q, const PathWord& w) {
    if (w.is_vertex()) return w.source == w.target;
    if (q.arrows[w.arrows.front()].source != w.source) return false;
    if (q.arrows[w.arrows.back()].target != w.target) return false;
    for (size_t i = 0; i + 1 < w.arrows.size(); ++i)
        if (q.arrows[w.arrows[i]].target != q.arrows[w.arrows[i + 1]].source) return false;
    return true;
}

std::string format_word(const Quiver& q, const PathWord& w) {
    if (w.is_vertex()) return "e(" + q.vertices[w.source] + ")";
    std::string s;
    for (size_t i = 0; i < w.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[w.arrows[i]].label;
    }
    return s;
}

WordOrder::WordOrder(const Quiver& quiver) : q(&quiver) {
    std::vector<int> idx(quiver.num_arrows());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int lhs, int rhs) {
        return quiver.arrows[lhs].label < quiver.arrows[rhs].label;
    });
    label_rank.assign(quiver.num_arrows(), 0);
    for (int r = 0; r < (int)idx.size(); ++r) label_rank[idx[r]] = r;
}

bool WordOrder::operator()(const PathWord& lhs, const PathWord& rhs) const {
    if (lhs.length() != rhs.length()) return lhs.length() < rhs.length();
    if (lhs.is_vertex()) return lhs.source < rhs.source;
    for (int i = 0; i < lhs.length(); ++i)
        if (label_rank[lhs.arrows[i]] != label_rank[rhs.arrows[i]])
            return label_rank[lhs.arrows[i]] < label_rank[rhs.arrows[i]];
    return false;
}

std::string format_sum(const Quiver& q, const PathSum& s) {
    if (s.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < s.terms.size(); ++i) {
        if (i) out += " + ";
        if (s.terms[i].first != 1) out += std::to_string(s.terms[i].first) + "*";
        out += format_word(q, s.terms[i].second);
    }
    return out;
}

}  // namespace gorhom

#pragma once

/* Quivers and formal path words. A path word lists its arrows in traversal
 * order: the word "a b" means "a then b", so consecutive arrows compose as
 * target(a) == source(b). Vertex idempotents are the empty words e_i. */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gorhom {

struct Arrow {
    std::string label;
    int source = 0, target = 0;  // vertex indices

    bool operator==(const Arrow&) const = default;
};

struct Quiver {
    std::vector<std::string> vertices;  // ids, in declaration order
    std::vector<Arrow> arrows;

    int num_vertices() const { return (int)vertices.size(); }
    int num_arrows() const { return (int)arrows.size(); }
    int vertex_index(const std::string& id) const;   // -1 if absent
    int arrow_index(const std::string& label) const; // -1 if absent

    /* Throws on duplicate ids/labels or undeclared endpoints. */
    void validate() const;

    /* Same quiver with every arrow reversed (labels kept). */
    Quiver reversed() const;

    bool operator==(const Quiver&) const = default;
};

struct PathWord {
    int source = 0, target = 0;
    std::vector<int> arrows;  // arrow indices, traversal order; empty = e_source

    int length() const { return (int)arrows.size(); }
    bool is_vertex() const { return arrows.empty(); }
    bool operator==(const PathWord&) const = default;
};

PathWord vertex_path(int v);
/* Concatenation "lhs then rhs"; requires lhs.target == rhs.source. */
PathWord concat(const PathWord& lhs, const PathWord& rhs);
PathWord reversed_word(const Quiver& q, const Quiver& qrev, const PathWord& w);
bool composable_in(const Quiver& q, const PathWord& w);
std::string format_word(const Quiver& q, const PathWord& w);

/* Deterministic basis order: by length, then lexicographically by arrow
 * labels (vertex paths by vertex position). */
struct WordOrder {
    const Quiver* q;
    std::vector<int> label_rank;  // arrow index -> rank of its label
    explicit WordOrder(const Quiver& quiver);
    bool operator()(const PathWord& lhs, const PathWord& rhs) const;
};

/* Formal F_p combination of parallel path words (all sharing source and
 * target); the carrier for relations. */
struct PathSum {
    std::vector<std::pair<uint32_t, PathWord>> terms;
    bool empty() const { return terms.empty(); }
};

std::string format_sum(const Quiver& q, const PathSum& s);

}  // namespace gorhom

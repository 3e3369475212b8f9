#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flipgraph/geometry.hpp"

namespace flipgraph {

// Set of valid arc ids, stored as a bitset in lexicographic arc order.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(int arc_count) : n_(arc_count), words_((arc_count + 63) / 64, 0) {}

    int universe() const { return n_; }
    bool contains(int id) const { return (words_[id >> 6] >> (id & 63)) & 1ULL; }
    void insert(int id) { words_[id >> 6] |= 1ULL << (id & 63); }
    void erase(int id) { words_[id >> 6] &= ~(1ULL << (id & 63)); }
    int count() const;
    std::vector<int> ids() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const Triangulation& o) const { return words_ == o.words_; }
    bool operator<(const Triangulation& o) const { return words_ < o.words_; }
    std::size_t hash() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct TriangulationHash {
    std::size_t operator()(const Triangulation& t) const { return t.hash(); }
};

// Number of arcs in a but not in b.
int difference_count(const Triangulation& a, const Triangulation& b);

Triangulation from_arcs(const PointConfig& cfg, const std::vector<Arc>& arcs, bool add_boundary = true);
std::vector<Arc> arcs_of(const PointConfig& cfg, const Triangulation& t);

// Pairwise non-crossing, contains every boundary edge, maximal.
bool is_triangulation(const PointConfig& cfg, const Triangulation& t, std::string* why = nullptr);
void require_triangulation(const PointConfig& cfg, const Triangulation& t, const char* what);

// Degree of v counting boundary edges.
int degree(const PointConfig& cfg, const Triangulation& t, int v);

struct FlipResult {
    int removed = -1;
    int inserted = -1;
    int quad[4] = {0, 0, 0, 0};  // counterclockwise: removed = (quad[0], quad[2])
};

// Triangulation with neighbor lists in counterclockwise angular order.
// For a boundary vertex the list starts at its next boundary neighbor and
// ends at its previous one; for a puncture the list is cyclic.
class Mesh {
public:
    Mesh(const PointConfig& cfg, const Triangulation& t);

    const PointConfig& config() const { return *cfg_; }
    const Triangulation& triangulation() const { return t_; }
    const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
    bool has_arc(int id) const { return t_.contains(id); }

    // Apexes of the two triangles on either side of arc id (left, right of a->b).
    // Returns false for boundary arcs.
    bool apexes(int id, int& left, int& right) const;
    std::optional<FlipResult> flip_info(int id) const;
    // Applies a flip; throws PreconditionError when not flippable.
    FlipResult flip(int id);

    std::vector<Triangle> triangles() const;

private:
    int position(int v, int u) const;
    void insert_neighbor(int v, int u);
    void erase_neighbor(int v, int u);
    bool angle_less(int v, int u, int w) const;

    const PointConfig* cfg_;
    Triangulation t_;
    std::vector<std::vector<int>> nbr_;
};

std::vector<Triangle> triangles_of(const PointConfig& cfg, const Triangulation& t);

// T - e + d, or none when e is a boundary edge, not in T, or not flippable.
std::optional<Triangulation> flip(const PointConfig& cfg, const Triangulation& t, int arc_id);
std::optional<Triangulation> flip(const PointConfig& cfg, const Triangulation& t, const Arc& e);

// Diagonals of the fan at apex over a cyclic vertex list; throws ObstructionError.
std::vector<Arc> comb_arcs(const PointConfig& cfg, const std::vector<int>& region, int apex);
// Lexicographically first maximal crossing-free arc set.
Triangulation greedy_triangulation(const PointConfig& cfg);
// Full triangulation of the convex hull of the boundary combed at apex.
Triangulation comb(const PointConfig& cfg, int apex);

// Zigzag diagonals of a cyclic region starting at start; the first diagonal
// cuts off the ear at avoid, which must be adjacent to start in the region.
std::vector<Arc> zigzag_arcs(const PointConfig& cfg, const std::vector<int>& region, int start, int avoid);

struct Contraction {
    PointConfig config;
    Triangulation triangulation;
    std::vector<int> vertex_map;  // old index -> new index
};

// Contracts boundary edge (x, y) onto x.
Contraction contract_edge(const PointConfig& cfg, const Triangulation& t, int x, int y);
std::vector<int> contraction_map(const PointConfig& cfg, int x, int y);
// Contracts t with a precomputed contracted config; throws ObstructionError.
Triangulation contract_triangulation(const PointConfig& cfg, const PointConfig& contracted,
                                     const std::vector<int>& vmap, const Triangulation& t, int x, int y);
PointConfig contract_config(const PointConfig& cfg, int y);

std::string format_triangulation(const PointConfig& cfg, const Triangulation& t);
Triangulation parse_triangulation(const PointConfig& cfg, const std::string& text);

}  // namespace flipgraph

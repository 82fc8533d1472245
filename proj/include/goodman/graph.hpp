#pragma once

#include "goodman/algebra.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace goodman {

// Vertices of the gluing graph are SL(2,Z) matrices with lower-left entry
// at most -1. Throws when the matrix does not qualify.
void requireGraphVertex(const Mat2Z& v);

// Level of a vertex: the negated lower-left entry, always >= 1.
inline Int graphLevel(const Mat2Z& v) { return -v.c; }

enum class TwistBranch { Positive, Negative };

// A directed edge: the target is twistMatrix(witness, +/-1) * source, with
// the witness satisfying the branch's sign system
//   positive: a y0 - c x0 >= 0 and y0 <= 0
//   negative: a y0 - c x0 <= 0 and y0 <= 0.
struct GEdge {
    Mat2Z source, target;
    HomologyClass witness;
    TwistBranch branch = TwistBranch::Positive;
};

// Builds the edge from a vertex along a witness and branch, checking the
// sign system, primitivity, determinant, and level monotonicity exactly.
GEdge makeEdge(const Mat2Z& source, const HomologyClass& witness, TwistBranch branch);

// All edges from v with primitive witnesses |x0|, |y0| <= bound, both
// branches, deduplicated by target. Deterministic order: witnesses scanned
// lexicographically, positive branch first.
std::vector<GEdge> neighbors(const Mat2Z& v, long long witness_bound);

struct LevelMonotoneReport {
    std::size_t vertices_sampled = 0;
    std::size_t edges_checked = 0;
    bool pass = true;
    std::optional<GEdge> counterexample;
};

// Samples random vertices with entries bounded by entry_bound and checks
// level monotonicity over every bounded edge. Deterministic for a fixed
// seed.
LevelMonotoneReport verifyLevelMonotone(std::size_t sample_count, long long entry_bound,
                                        long long witness_bound,
                                        unsigned long seed = 20240817);

struct G1ConnectivityReport {
    long long box = 0;
    bool connected = false;
    std::size_t vertex_count = 0;
    std::size_t max_path_length = 0;
};

// Pairwise reachability over the level-1 subgraph restricted to
// |a|, |d| <= box, using only the generator edges with witnesses (+/-1, 0)
// and (a, -1). Throws BoxTooSmall when some pair cannot connect inside the
// box.
G1ConnectivityReport verifyG1Connected(long long box);

// Explicit generator-edge path between two level-1 vertices, identified by
// their diagonal entries.
std::vector<GEdge> g1Path(const Int& a_from, const Int& d_from, const Int& a_to,
                          const Int& d_to);

// Edge chain from a vertex of strictly smaller level to v, following the
// recipe: descend d modulo the level with (a, c)-witness edges, step down a
// level with the (-b, -d) or (b, d) witness, then climb back. Requires
// level(v) >= 2.
std::vector<GEdge> predecessorChain(const Mat2Z& v);

struct ReachReport {
    bool found = false;
    std::vector<GEdge> path;
    std::size_t expanded = 0;
    bool exhausted = false;
};

// Bounded breadth-first search from source towards target. A found path is
// a certificate; exhaustion is inconclusive. Vertices beyond the target's
// level are pruned (edges never lower the level).
ReachReport reachable(const Mat2Z& source, const Mat2Z& target, long long witness_bound,
                      long long depth_bound);

}  // namespace goodman

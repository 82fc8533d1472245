#include "goodman/graph.hpp"

#include "goodman/errors.hpp"
#include "goodman/parallel.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <tuple>

namespace goodman {

namespace {

struct MatLess {
    bool operator()(const Mat2Z& x, const Mat2Z& y) const {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    }
};

Int absInt(const Int& v) { return v < 0 ? Int(-v) : v; }

// g = gcd(a, b) together with x, y solving a x + b y = g.
void extendedGcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    if (b == 0) {
        g = absInt(a);
        x = a < 0 ? -1 : 1;
        y = 0;
        return;
    }
    Int g1, x1, y1;
    extendedGcd(b, Int(a % b), g1, x1, y1);
    g = g1;
    x = y1;
    y = x1 - (a / b) * y1;
}

// A level-1 vertex from its diagonal entries.
Mat2Z g1Vertex(const Int& a, const Int& d) { return Mat2Z{a, -a * d + 1, -1, d}; }

}  // namespace

void requireGraphVertex(const Mat2Z& v) {
    v.requireDet(1);
    if (v.c > -1) throw Error("graph vertex needs lower-left entry <= -1, got " + v.str());
}

GEdge makeEdge(const Mat2Z& source, const HomologyClass& witness, TwistBranch branch) {
    requireGraphVertex(source);
    const Int t = source.a * witness.y - source.c * witness.x;
    if (witness.y > 0) throw Error("makeEdge: witness needs y0 <= 0");
    if (branch == TwistBranch::Positive && t < 0)
        throw Error("makeEdge: positive branch needs a y0 - c x0 >= 0");
    if (branch == TwistBranch::Negative && t > 0)
        throw Error("makeEdge: negative branch needs a y0 - c x0 <= 0");
    GEdge e;
    e.source = source;
    e.witness = witness;
    e.branch = branch;
    e.target = twistMatrix(witness, branch == TwistBranch::Positive ? 1 : -1) * source;
    e.target.requireDet(1);
    if (e.target.c > source.c)
        throw Error("makeEdge: level decreased along an edge");  // unreachable
    return e;
}

std::vector<GEdge> neighbors(const Mat2Z& v, long long witness_bound) {
    requireGraphVertex(v);
    if (witness_bound < 1) throw Error("neighbors: witness bound must be >= 1");
    std::vector<GEdge> out;
    std::map<Mat2Z, bool, MatLess> seen;
    for (long long x0 = -witness_bound; x0 <= witness_bound; ++x0) {
        for (long long y0 = -witness_bound; y0 <= 0; ++y0) {
            const HomologyClass w{x0, y0};
            if (!w.isPrimitive()) continue;
            const Int t = v.a * w.y - v.c * w.x;
            for (const TwistBranch branch : {TwistBranch::Positive, TwistBranch::Negative}) {
                if (branch == TwistBranch::Positive && t < 0) continue;
                if (branch == TwistBranch::Negative && t > 0) continue;
                GEdge e = makeEdge(v, w, branch);
                if (seen.emplace(e.target, true).second) out.push_back(std::move(e));
            }
        }
    }
    return out;
}

LevelMonotoneReport verifyLevelMonotone(std::size_t sample_count, long long entry_bound,
                                        long long witness_bound, unsigned long seed) {
    if (entry_bound < 1 || witness_bound < 1)
        throw Error("verifyLevelMonotone: bounds must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> pick_a(-entry_bound, entry_bound);
    std::uniform_int_distribution<long long> pick_c(1, entry_bound);
    std::uniform_int_distribution<long long> shift(-2, 2);

    LevelMonotoneReport report;
    while (report.vertices_sampled < sample_count) {
        const Int a = pick_a(rng);
        const Int c = -pick_c(rng);
        Int g, x, y;
        extendedGcd(a, c, g, x, y);
        if (g != 1) continue;
        // a d - b c = 1 via the Bezout pair, then a random row shift that
        // keeps the determinant.
        Int d = x;
        Int b = -y;
        const Int k = shift(rng);
        b += k * a;
        d += k * c;
        const Mat2Z v{a, b, c, d};
        v.requireDet(1);
        ++report.vertices_sampled;
        for (const GEdge& e : neighbors(v, witness_bound)) {
            ++report.edges_checked;
            if (graphLevel(e.target) < graphLevel(e.source)) {
                report.pass = false;
                report.counterexample = e;
                return report;
            }
        }
    }
    return report;
}

std::vector<GEdge> g1Path(const Int& a_from, const Int& d_from, const Int& a_to,
                          const Int& d_to) {
    std::vector<GEdge> path;
    Int a = a_from, d = d_from;
    while (a != a_to) {
        const bool up = a < a_to;
        const GEdge e = makeEdge(g1Vertex(a, d), {up ? 1 : -1, 0},
                                 up ? TwistBranch::Positive : TwistBranch::Negative);
        a += up ? 1 : -1;
        if (e.target != g1Vertex(a, d)) throw Error("g1Path: unexpected target");
        path.push_back(e);
    }
    while (d != d_to) {
        const bool up = d < d_to;
        const GEdge e = makeEdge(g1Vertex(a, d), {a, -1},
                                 up ? TwistBranch::Positive : TwistBranch::Negative);
        d += up ? 1 : -1;
        if (e.target != g1Vertex(a, d)) throw Error("g1Path: unexpected target");
        path.push_back(e);
    }
    return path;
}

G1ConnectivityReport verifyG1Connected(long long box) {
    if (box < 2) throw Error("verifyG1Connected: box must be >= 2");
    const long long side = 2 * box + 1;
    const std::size_t count = static_cast<std::size_t>(side * side);
    auto index = [&](long long a, long long d) {
        return static_cast<std::size_t>((a + box) * side + (d + box));
    };

    G1ConnectivityReport report;
    report.box = box;
    report.vertex_count = count;

    // Per-start breadth-first distances over the four generator moves,
    // staying inside the box.
    std::vector<std::size_t> worst(count, 0);
    parallelFor(count, [&](std::size_t start) {
        const long long sa = static_cast<long long>(start) / side - box;
        const long long sd = static_cast<long long>(start) % side - box;
        std::vector<long long> dist(count, -1);
        std::queue<std::pair<long long, long long>> queue;
        dist[index(sa, sd)] = 0;
        queue.push({sa, sd});
        while (!queue.empty()) {
            const auto [a, d] = queue.front();
            queue.pop();
            const long long here = dist[index(a, d)];
            const std::pair<long long, long long> moves[] = {
                {a + 1, d}, {a - 1, d}, {a, d + 1}, {a, d - 1}};
            for (const auto& [na, nd] : moves) {
                if (na < -box || na > box || nd < -box || nd > box) continue;
                if (dist[index(na, nd)] >= 0) continue;
                dist[index(na, nd)] = here + 1;
                queue.push({na, nd});
            }
        }
        std::size_t far = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (dist[i] < 0) {
                far = count + 1;  // marks a disconnected pair
                break;
            }
            far = std::max(far, static_cast<std::size_t>(dist[i]));
        }
        worst[start] = far;
    });

    for (std::size_t start = 0; start < count; ++start) {
        if (worst[start] > count)
            throw BoxTooSmall("verifyG1Connected: pair unreachable inside the box");
        report.max_path_length = std::max(report.max_path_length, worst[start]);
    }
    report.connected = true;
    return report;
}

std::vector<GEdge> predecessorChain(const Mat2Z& v) {
    requireGraphVertex(v);
    const Int n = graphLevel(v);
    if (n < 2) throw Error("predecessorChain: vertex level must be >= 2");

    // Reduce d modulo the level. The residue cannot vanish: d = 0 mod c
    // would force level 1 through the determinant.
    const Int r = ((v.d % n) + n) % n;
    if (r == 0) throw Error("predecessorChain: residue vanished");  // unreachable
    const Int q = (v.d - r) / n;
    const Mat2Z reduced{v.a, v.b + q * v.a, v.c, r};
    reduced.requireDet(1);

    std::vector<GEdge> chain;
    // Step down one or more levels: the residue vertex has 0 < d < |c|, so
    // the witness (-b, -d) produces it from a strictly shallower vertex.
    const Mat2Z head{reduced.a + reduced.b, reduced.b, reduced.c + reduced.d, reduced.d};
    const GEdge down = makeEdge(head, {-reduced.b, -reduced.d}, TwistBranch::Negative);
    if (down.target != reduced) throw Error("predecessorChain: descent edge mismatch");
    if (graphLevel(head) >= n) throw Error("predecessorChain: level did not drop");
    chain.push_back(down);

    // Climb back to v along (a, c)-witness edges, each moving d by the level.
    Mat2Z at = reduced;
    for (Int i = 0; i < absInt(q); ++i) {
        const GEdge e = makeEdge(at, {at.a, at.c},
                                 q > 0 ? TwistBranch::Positive : TwistBranch::Negative);
        chain.push_back(e);
        at = e.target;
    }
    if (at != v) throw Error("predecessorChain: chain does not land on the vertex");
    return chain;
}

ReachReport reachable(const Mat2Z& source, const Mat2Z& target, long long witness_bound,
                      long long depth_bound) {
    requireGraphVertex(source);
    requireGraphVertex(target);
    ReachReport report;
    if (source == target) {
        report.found = true;
        return report;
    }
    const Int level_cap = graphLevel(target);
    if (graphLevel(source) > level_cap) {
        report.exhausted = true;
        return report;
    }

    std::map<Mat2Z, GEdge, MatLess> parent;
    std::vector<Mat2Z> frontier{source};
    for (long long depth = 0; depth < depth_bound && !frontier.empty(); ++depth) {
        std::vector<std::vector<GEdge>> expansions(frontier.size());
        parallelFor(frontier.size(), [&](std::size_t i) {
            expansions[i] = neighbors(frontier[i], witness_bound);
        });
        std::vector<Mat2Z> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            ++report.expanded;
            for (const GEdge& e : expansions[i]) {
                if (graphLevel(e.target) > level_cap) continue;
                if (e.target == source || parent.count(e.target)) continue;
                parent.emplace(e.target, e);
                if (e.target == target) {
                    // Walk the parent edges back to the source.
                    std::vector<GEdge> path;
                    Mat2Z at = target;
                    while (at != source) {
                        const GEdge& back = parent.at(at);
                        path.push_back(back);
                        at = back.source;
                    }
                    std::reverse(path.begin(), path.end());
                    report.found = true;
                    report.path = std::move(path);
                    return report;
                }
                next.push_back(e.target);
            }
        }
        frontier = std::move(next);
    }
    report.exhausted = true;
    return report;
}

}  // namespace goodman

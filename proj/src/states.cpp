#include "dkh/states.hpp"

#include <algorithm>
#include <numeric>

namespace dkh {

std::string ResolutionWord::to_string() const {
    std::string s(length, '0');
    for (int t = 0; t < length; ++t) s[t] = bit(t) ? '1' : '0';
    return s;
}

std::string signs_to_string(uint32_t signs, int comp_count) {
    std::string s(comp_count, '+');
    for (int c = 0; c < comp_count; ++c)
        if (sign_of(signs, c, comp_count) < 0) s[c] = '-';
    return s;
}

int degree_j(const StateComponents& comps, const Gradings& gr, uint32_t signs) {
    int j = gr.k;
    for (int c = 0; c < comps.count(); ++c) j += sign_of(signs, c, comps.count()) * (comps.comps[c].closed ? 2 : 1);
    return j;
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4568bull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct UnionFind {
    std::vector<int32_t> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

// Shared resolver: `bit_at(t)` supplies the effective bit of base point t
// (pinned or from the word). Gradings count unresolved points only.
static std::pair<StateComponents, Gradings> resolve_impl(const Divide& divide, const SingularProfile& base,
                                                         const PartialDivide& partial, ResolutionWord word) {
    const SingularProfile free_profile = validate(partial);
    if (word.length != free_profile.n())
        throw ValidationError(Errc::WordLengthMismatch, "word has " + std::to_string(word.length) +
                                                            " bits for " + std::to_string(free_profile.n()) +
                                                            " unresolved points");

    // effective bit per base point
    std::vector<int> bits(base.n(), 0);
    {
        int t_free = 0;
        for (int t = 0; t < base.n(); ++t) {
            const int fb = partial.fixed_bit(t);
            bits[t] = (fb >= 0) ? fb : word.bit(t_free++);
        }
    }

    const int strands = base.strands;
    const int columns = static_cast<int>(divide.word.size());
    const int arcs = strands * (columns + 1);
    const auto arc = [strands](int gap, int level) { return gap * strands + (level - 1); };

    UnionFind uf(arcs);
    std::vector<uint8_t> end_nodes(arcs, 0);

    // crossings occupy base points [0, columns)
    for (int g = 0; g < columns; ++g) {
        const int p = divide.word[g].position;
        for (int level = 1; level <= strands; ++level) {
            if (level == p || level == p + 1) continue;
            uf.unite(arc(g, level), arc(g + 1, level));
        }
        if (bits[g] == 0) {
            uf.unite(arc(g, p), arc(g + 1, p));
            uf.unite(arc(g, p + 1), arc(g + 1, p + 1));
        } else {
            uf.unite(arc(g, p), arc(g, p + 1));
            uf.unite(arc(g + 1, p), arc(g + 1, p + 1));
        }
    }
    // walls: base points [columns, n) in left-then-right, top-to-bottom order
    int t = columns;
    const auto do_wall = [&](const std::vector<WallKind>& wall, int gap) {
        int level = 1;
        for (WallKind k : wall) {
            if (k == WallKind::Endpoint) {
                end_nodes[arc(gap, level)] += 1;
                level += 1;
            } else {
                if (bits[t] == 0) {
                    end_nodes[arc(gap, level)] += 1;
                    end_nodes[arc(gap, level + 1)] += 1;
                } else {
                    uf.unite(arc(gap, level), arc(gap, level + 1));
                }
                ++t;
                level += 2;
            }
        }
    };
    do_wall(divide.left_wall, 0);
    do_wall(divide.right_wall, columns);

    // collect components, ids sorted by smallest contained arc
    StateComponents sc;
    sc.comp_of_arc.assign(arcs, -1);
    std::vector<int32_t> root_to_comp(arcs, -1);
    for (int a = 0; a < arcs; ++a) {
        const int r = uf.find(a);
        if (root_to_comp[r] < 0) {
            root_to_comp[r] = static_cast<int32_t>(sc.comps.size());
            StateComponent comp;
            comp.id = root_to_comp[r];
            comp.min_arc = a;  // arcs scanned in increasing order
            sc.comps.push_back(comp);
        }
        const int c = root_to_comp[r];
        sc.comp_of_arc[a] = c;
        sc.comps[c].arc_count += 1;
        sc.comps[c].arc_hash ^= splitmix64(static_cast<uint64_t>(a) + 1);
    }
    std::vector<int> ends_per_comp(sc.comps.size(), 0);
    for (int a = 0; a < arcs; ++a) ends_per_comp[sc.comp_of_arc[a]] += end_nodes[a];
    for (size_t c = 0; c < sc.comps.size(); ++c) {
        if (ends_per_comp[c] != 0 && ends_per_comp[c] != 2)
            throw InvariantError(Errc::InternalError,
                                 "component with " + std::to_string(ends_per_comp[c]) + " end nodes");
        sc.comps[c].closed = (ends_per_comp[c] == 0);
        (sc.comps[c].closed ? sc.cl : sc.op) += 1;
    }

    Gradings gr;
    {
        int t_free = 0;
        for (int pt = 0; pt < base.n(); ++pt) {
            if (partial.fixed_bit(pt) >= 0) continue;
            if (word.bit(t_free++) == 1) {
                switch (base.points[pt].kind) {
                    case PointKind::PositiveCrossing: gr.r_plus++; break;
                    case PointKind::NegativeCrossing: gr.r_minus++; break;
                    case PointKind::TurnBack: gr.r_zero++; break;
                }
            }
        }
    }
    gr.i = gr.r_plus - gr.r_minus + gr.r_zero;
    gr.k = free_profile.writhe + 2 * gr.i - gr.r_zero;
    return {std::move(sc), gr};
}

std::pair<StateComponents, Gradings> resolve_state(const PartialDivide& divide, ResolutionWord word) {
    const SingularProfile base = validate(divide.base);
    return resolve_impl(divide.base, base, divide, word);
}

std::pair<StateComponents, Gradings> resolve_state(const Divide& divide, ResolutionWord word) {
    return resolve_state(as_partial(divide), word);
}

std::map<std::pair<int, int>, std::vector<EnhancedState>> enumerate_enhanced(const Divide& divide, int max_points) {
    const SingularProfile profile = validate(divide);
    const int n = profile.n();
    if (n > max_points)
        throw ValidationError(Errc::TooManyPoints,
                              std::to_string(n) + " singular points exceed the limit " + std::to_string(max_points));

    std::map<std::pair<int, int>, std::vector<EnhancedState>> out;
    for (uint32_t w = 0; w < (1u << n); ++w) {
        const ResolutionWord word{w, n};
        auto [comps, gr] = resolve_state(divide, word);
        const int m = comps.count();
        for (uint32_t sv = 0; sv < (1u << m); ++sv) {
            EnhancedState es;
            es.word = word;
            es.signs = sv;
            es.i = gr.i;
            es.j = degree_j(comps, gr, sv);
            out[{es.i, es.j}].push_back(es);
        }
    }
    return out;
}

}  // namespace dkh

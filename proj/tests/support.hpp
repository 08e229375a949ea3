#pragma once

// Shared helpers for the test suites: fixture loading, independent brute-force
// oracles, diagram surgeries, and the bounded search for a PR-tied pair of
// virtual links. Everything here is deterministic; random choices take an
// explicitly seeded engine.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rackinv/cohomology.hpp"
#include "rackinv/coloring.hpp"
#include "rackinv/gauss_code.hpp"
#include "rackinv/invariants.hpp"
#include "rackinv/rack.hpp"

namespace testsup {

using namespace rackinv;

inline std::string fixture_path(const std::string& name) {
    return std::string(RACKINV_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RackTable load_rack(const std::string& name) {
    ParseError err;
    const auto table = parse_rack_matrix(slurp(fixture_path("racks/" + name)), &err);
    if (!table) throw std::runtime_error(name + ": " + err.describe());
    std::vector<AxiomViolation> bad;
    const auto r = RackTable::validate(*table, &bad);
    if (!r) throw std::runtime_error(name + ": " + bad.front().describe());
    return *r;
}

inline GaussDiagram load_link(const std::string& name) {
    ParseError err;
    const auto d = GaussDiagram::parse(slurp(fixture_path("links/" + name)), &err);
    if (!d) throw std::runtime_error(name + ": " + err.describe());
    return *d;
}

inline Cochain2 load_cochain(const std::string& name) {
    ParseError err;
    const auto c = parse_cochain(slurp(fixture_path("cochains/" + name)), &err);
    if (!c) throw std::runtime_error(name + ": " + err.describe());
    return *c;
}

// Axiom check straight from the definitions, sharing nothing with RackTable.
inline bool oracle_is_rack(const std::vector<std::vector<int>>& t) {
    const std::size_t n = t.size();
    if (n == 0) return false;
    for (const auto& row : t) {
        if (row.size() != n) return false;
        for (int v : row)
            if (v < 1 || v > static_cast<int>(n)) return false;
    }
    for (std::size_t y = 0; y < n; ++y) {
        std::vector<bool> seen(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            const int img = t[x][y];
            if (seen[img - 1]) return false;
            seen[img - 1] = true;
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const int lhs = t[t[x][y] - 1][z];
                const int rhs = t[t[x][z] - 1][t[y][z] - 1];
                if (lhs != rhs) return false;
            }
    return true;
}

// Every n x n table with entries in 1..n, in odometer order. Meant for n <= 3.
inline void for_each_table(int n,
                           const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 1));
    for (;;) {
        fn(t);
        int i = n - 1, j = n - 1;
        for (;;) {
            if (t[i][j] < n) {
                ++t[i][j];
                break;
            }
            t[i][j] = 1;
            if (--j < 0) {
                j = n - 1;
                if (--i < 0) return;
            }
        }
    }
}

// Checks one full assignment against the crossing relation at every crossing.
inline bool oracle_satisfies(const ArcIndexing& ix, const RackTable& r,
                             const std::vector<ElementIndex>& colors) {
    for (const CrossingArcs& c : ix.crossings) {
        const ElementIndex in = colors[c.under_in - 1];
        const ElementIndex out = colors[c.under_out - 1];
        const ElementIndex over = colors[c.over_arc - 1];
        const ElementIndex expect = c.sign > 0 ? r.op(in, over) : r.inv_op(in, over);
        if (out != expect) return false;
    }
    return true;
}

// All colorings by exhaustion over n^(#arcs) assignments, sorted like
// enumerate_colorings sorts. Refuses search spaces above ~50M.
inline std::vector<Coloring> oracle_colorings(const GaussDiagram& d, const RackTable& r) {
    const ArcIndexing ix = arcs(d);
    const int n = r.size();
    double space = 1;
    for (int a = 0; a < ix.arc_count; ++a) space *= n;
    if (space > 5e7) throw std::runtime_error("oracle coloring space too large");

    std::vector<Coloring> out;
    std::vector<ElementIndex> colors(ix.arc_count, 1);
    for (;;) {
        if (oracle_satisfies(ix, r, colors)) out.push_back(Coloring{colors});
        int i = ix.arc_count - 1;
        for (;;) {
            if (i < 0) return out;
            if (colors[i] < n) {
                ++colors[i];
                break;
            }
            colors[i] = 1;
            --i;
        }
    }
}

inline std::vector<int> weight_multiset(const GaussDiagram& d, const RackTable& r,
                                        const Cochain2& phi) {
    std::vector<int> ws;
    for (const Coloring& f : enumerate_colorings(d, r)) {
        const auto w = boltzmann_weight(d, r, phi, f);
        if (!w) throw std::runtime_error("enumerated assignment rejected as a coloring");
        ws.push_back(*w);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

inline GaussDiagram rebuild(std::vector<std::vector<Visit>> comps) {
    std::string error;
    const auto d = GaussDiagram::from_components(std::move(comps), &error);
    if (!d) throw std::runtime_error("surgery produced a bad code: " + error);
    return *d;
}

inline GaussDiagram rotate_component(const GaussDiagram& d, int comp, int offset) {
    auto comps = d.components();
    auto& v = comps[comp - 1];
    if (!v.empty()) {
        const int len = static_cast<int>(v.size());
        const int k = ((offset % len) + len) % len;
        std::rotate(v.begin(), v.begin() + k, v.end());
    }
    return rebuild(std::move(comps));
}

// Kink with a fresh crossing id spliced in before position pos (0..size).
inline GaussDiagram insert_kink(const GaussDiagram& d, int comp, int pos, int sign) {
    auto comps = d.components();
    auto& v = comps[comp - 1];
    const int id = d.max_crossing_id() + 1;
    v.insert(v.begin() + pos, {Visit{id, Role::Over, sign}, Visit{id, Role::Under, sign}});
    return rebuild(std::move(comps));
}

// Slides one strand under another and straight back: a cancelling pair of
// opposite-sign crossings. The under component gets two adjacent Under visits
// at under_pos, the over component two adjacent Over visits at over_pos
// (reversed_over flips their order, the two planar variants). Positions index
// the ORIGINAL visit vectors; the two components must differ.
inline GaussDiagram insert_poke(const GaussDiagram& d, int under_comp, int under_pos,
                                int over_comp, int over_pos, int sign, bool reversed_over) {
    if (under_comp == over_comp) throw std::runtime_error("poke wants two components");
    auto comps = d.components();
    const int id1 = d.max_crossing_id() + 1;
    const int id2 = id1 + 1;
    auto& uv = comps[under_comp - 1];
    uv.insert(uv.begin() + under_pos,
              {Visit{id1, Role::Under, sign}, Visit{id2, Role::Under, -sign}});
    auto& ov = comps[over_comp - 1];
    std::vector<Visit> overs{Visit{id1, Role::Over, sign}, Visit{id2, Role::Over, -sign}};
    if (reversed_over) std::swap(overs[0], overs[1]);
    ov.insert(ov.begin() + over_pos, overs.begin(), overs.end());
    return rebuild(std::move(comps));
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline std::vector<std::vector<int>> random_table(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(1, n);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (auto& row : t)
        for (auto& v : row) v = entry(rng);
    return t;
}

struct VirtualPair {
    GaussDiagram a;
    GaussDiagram b;
    QPolynomial pr;
    PhiPolynomial phi_a;
    PhiPolynomial phi_b;
};

// Two-component signed Gauss codes generated from per-crossing choices of
// (over component, under component, sign), each component visiting its
// crossings in id order with Over before Under on a self-crossing. Covers
// split, classical, and virtual codes; k crossings yield 8^k candidates.
inline std::vector<GaussDiagram> canonical_two_component_codes(int max_crossings) {
    std::vector<GaussDiagram> out;
    for (int k = 1; k <= max_crossings; ++k) {
        std::vector<int> choice(k, 0);  // 3 bits: over comp, under comp, sign
        for (;;) {
            std::vector<std::vector<Visit>> comps(2);
            for (int c = 0; c < k; ++c) {
                const int over_comp = choice[c] & 1;
                const int under_comp = (choice[c] >> 1) & 1;
                const int sign = (choice[c] >> 2) ? -1 : +1;
                comps[over_comp].push_back(Visit{c + 1, Role::Over, sign});
                comps[under_comp].push_back(Visit{c + 1, Role::Under, sign});
            }
            out.push_back(rebuild(std::move(comps)));
            int i = k - 1;
            for (;;) {
                if (i < 0) break;
                if (choice[i] < 7) {
                    ++choice[i];
                    break;
                }
                choice[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return out;
}

// First pair (by generation order: smallest second index, then smallest
// first) of codes sharing PR but separated by the cocycle invariant.
inline std::optional<VirtualPair> find_virtual_pair(const RackTable& r, const Cochain2& phi,
                                                    int max_crossings = 4) {
    const std::vector<GaussDiagram> codes = canonical_two_component_codes(max_crossings);
    std::vector<QPolynomial> prs;
    std::vector<PhiPolynomial> phis;
    prs.reserve(codes.size());
    phis.reserve(codes.size());
    for (std::size_t j = 0; j < codes.size(); ++j) {
        prs.push_back(polynomial_counting(codes[j], r));
        std::string error;
        const auto p = cocycle_invariant(codes[j], r, phi, &error);
        if (!p) throw std::runtime_error("inadmissible cochain in pair search: " + error);
        phis.push_back(*p);
        for (std::size_t i = 0; i < j; ++i)
            if (prs[i] == prs[j] && !(phis[i] == phis[j]))
                return VirtualPair{codes[i], codes[j], prs[i], phis[i], phis[j]};
    }
    return std::nullopt;
}

}  // namespace testsup

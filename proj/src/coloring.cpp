#include "rackinv/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace rackinv {

namespace {

// Backtracking enumerator. Colors are 1..n, 0 marks an uncolored arc.
class Enumerator {
public:
    Enumerator(const ArcIndexing& ix, const RackTable& r,
               const std::function<void(const std::vector<ElementIndex>&)>& emit)
        : ix_(ix), r_(r), emit_(emit), colors_(ix.arc_count + 1, 0),
          touching_(ix.arc_count + 1) {
        for (std::size_t c = 0; c < ix_.crossings.size(); ++c) {
            const CrossingArcs& cr = ix_.crossings[c];
            touching_[cr.over_arc].push_back(c);
            touching_[cr.under_in].push_back(c);
            touching_[cr.under_out].push_back(c);
        }
    }

    void run() { descend(); }

private:
    // Re-examine crossings until no new color is forced. Returns false on a
    // contradiction; appends every arc it colored to `trail`.
    bool propagate(std::vector<int>& queue, std::vector<int>& trail) {
        while (!queue.empty()) {
            const CrossingArcs& cr = ix_.crossings[queue.back()];
            queue.pop_back();
            const int over = colors_[cr.over_arc];
            if (over == 0) continue;
            const int in = colors_[cr.under_in];
            const int out = colors_[cr.under_out];
            if (in != 0) {
                const int want = cr.sign > 0 ? r_.op(in, over) : r_.inv_op(in, over);
                if (out == 0) {
                    if (!assign(cr.under_out, want, queue, trail)) return false;
                } else if (out != want) {
                    return false;
                }
            } else if (out != 0) {
                const int want = cr.sign > 0 ? r_.inv_op(out, over) : r_.op(out, over);
                if (!assign(cr.under_in, want, queue, trail)) return false;
            }
        }
        return true;
    }

    bool assign(int arc, int color, std::vector<int>& queue, std::vector<int>& trail) {
        colors_[arc] = color;
        trail.push_back(arc);
        for (int c : touching_[arc]) queue.push_back(c);
        return true;
    }

    void descend() {
        int branch_arc = 0;
        for (int a = 1; a <= ix_.arc_count; ++a) {
            if (colors_[a] == 0) {
                branch_arc = a;
                break;
            }
        }
        if (branch_arc == 0) {
            emit_(colors_);
            return;
        }
        for (int color = 1; color <= r_.size(); ++color) {
            std::vector<int> queue;
            std::vector<int> trail;
            colors_[branch_arc] = color;
            trail.push_back(branch_arc);
            for (int c : touching_[branch_arc]) queue.push_back(c);
            if (propagate(queue, trail)) descend();
            for (int arc : trail) colors_[arc] = 0;
        }
    }

    const ArcIndexing& ix_;
    const RackTable& r_;
    const std::function<void(const std::vector<ElementIndex>&)>& emit_;
    std::vector<ElementIndex> colors_;        // 1-based by arc id
    std::vector<std::vector<int>> touching_;  // arc id -> crossing indices
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const GaussDiagram& d, const RackTable& r) {
    const ArcIndexing ix = arcs(d);
    std::vector<Coloring> out;
    const std::function<void(const std::vector<ElementIndex>&)> emit =
        [&](const std::vector<ElementIndex>& colors) {
            out.push_back({std::vector<ElementIndex>(colors.begin() + 1, colors.end())});
        };
    Enumerator(ix, r, emit).run();
    std::sort(out.begin(), out.end(),
              [](const Coloring& a, const Coloring& b) { return a.colors < b.colors; });
    return out;
}

std::uint64_t count_colorings(const GaussDiagram& d, const RackTable& r) {
    const ArcIndexing ix = arcs(d);
    std::uint64_t count = 0;
    const std::function<void(const std::vector<ElementIndex>&)> emit =
        [&](const std::vector<ElementIndex>&) { ++count; };
    Enumerator(ix, r, emit).run();
    return count;
}

std::optional<int> boltzmann_weight(const GaussDiagram& d, const RackTable& r,
                                    const Cochain2& phi, const Coloring& f) {
    assert(phi.n == r.size());
    const ArcIndexing ix = arcs(d);
    if (static_cast<int>(f.colors.size()) != ix.arc_count) return std::nullopt;
    for (ElementIndex c : f.colors)
        if (c < 1 || c > r.size()) return std::nullopt;

    auto color = [&](int arc) { return f.colors[arc - 1]; };
    const int m = phi.modulus;
    std::int64_t w = 0;
    for (const CrossingArcs& cr : ix.crossings) {
        const int over = color(cr.over_arc);
        const int in = color(cr.under_in);
        const int out = color(cr.under_out);
        const int want = cr.sign > 0 ? r.op(in, over) : r.inv_op(in, over);
        if (out != want) return std::nullopt;
        const int a = cr.sign > 0 ? in : out;
        w += cr.sign * phi.at(a, over);
    }
    return static_cast<int>(((w % m) + m) % m);
}

std::string format_coloring(const Coloring& f) {
    std::string out;
    for (std::size_t i = 0; i < f.colors.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(i + 1) + "=" + std::to_string(f.colors[i]);
    }
    return out;
}

}  // namespace rackinv

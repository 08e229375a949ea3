#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rackinv/parse_error.hpp"

namespace rackinv {

enum class Role { Over, Under };

struct Visit {
    int crossing = 0;  // positive id shared by the matching Over/Under pair
    Role role = Role::Over;
    int sign = +1;     // +1 or -1, equal at both visits of a crossing

    friend bool operator==(const Visit&, const Visit&) = default;
};

// Oriented blackboard-framed link diagram as a signed Gauss code: one cyclic
// visit sequence per component. Every crossing id appears exactly once as Over
// and once as Under, with the same sign. Codes with no planar realization are
// kept as-is; they denote virtual links.
//
// Text form: components separated by '|', visits by ','. A visit is
// O<id><sign> or U<id><sign>, e.g. "O1+,U2+ | U1+,O2+". A component that
// meets no crossing is written as the single token "0".
class GaussDiagram {
public:
    static std::optional<GaussDiagram> parse(std::string_view text, ParseError* err = nullptr);
    static std::optional<GaussDiagram> from_components(std::vector<std::vector<Visit>> components,
                                                       std::string* error = nullptr);

    std::string render() const;

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<std::vector<Visit>>& components() const { return components_; }
    int crossing_count() const;
    int max_crossing_id() const;

    // Sum of crossing signs within each component (blackboard framing).
    std::vector<int> self_writhe() const;

    // Half the signed count of crossings joining components i and j (1-based).
    // nullopt when that count is odd; no classical diagram does that, so an odd
    // count marks the pair as genuinely virtual.
    std::optional<int> linking_number(int i, int j) const;

    // Copy with k positive kinks spliced onto the front of one component
    // (1-based), using fresh crossing ids. Each kink adds 1 to that
    // component's self-writhe.
    GaussDiagram add_kinks(int component, int k) const;

private:
    std::vector<std::vector<Visit>> components_;
};

// Where each crossing sits relative to the arcs of a diagram. Arcs are the
// maximal runs between Under visits, numbered 1..arc_count component by
// component; a component that never goes under is one closed arc.
struct CrossingArcs {
    int crossing = 0;
    int sign = +1;
    int over_arc = 0;
    int under_in = 0;   // arc ending at the Under visit
    int under_out = 0;  // arc starting there
};

struct ArcIndexing {
    int arc_count = 0;
    std::vector<std::vector<int>> arcs_by_component;
    std::vector<CrossingArcs> crossings;  // ascending by crossing id
};

ArcIndexing arcs(const GaussDiagram& d);

struct FramingRepresentative {
    std::vector<int> writhe_vector;  // entries reduced into 0..rank-1
    GaussDiagram diagram;
};

// One kinked representative per writhe vector in (Z_rank)^components, in
// lexicographic order of the vectors. Component i receives
// (w_i - self_writhe_i) mod rank kinks, so each representative's self-writhe
// vector reduces to w. rank = 1 yields the single pair ((0,...,0), d).
std::vector<FramingRepresentative> framing_representatives(const GaussDiagram& d,
                                                           std::int64_t rank);

}  // namespace rackinv

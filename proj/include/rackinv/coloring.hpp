#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rackinv/cohomology.hpp"
#include "rackinv/gauss_code.hpp"
#include "rackinv/rack.hpp"

namespace rackinv {

// Rack coloring of a diagram: colors[i] is the color of global arc i+1.
// At every crossing the outbound under-arc must carry in |> over for positive
// sign and in |>^{-1} over for negative sign.
struct Coloring {
    std::vector<ElementIndex> colors;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// All colorings, sorted lexicographically by arc color vector. Enumeration
// propagates the crossing relation both ways (out from in, in from out) and
// branches on the lowest uncolored arc when propagation stalls.
std::vector<Coloring> enumerate_colorings(const GaussDiagram& d, const RackTable& r);

std::uint64_t count_colorings(const GaussDiagram& d, const RackTable& r);

// Sum over crossings of sign * phi(a, b) in Z_phi.modulus, where b is the
// over-arc color and a is the inbound under color at positive crossings, the
// outbound under color at negative ones. nullopt when f is not a coloring.
std::optional<int> boltzmann_weight(const GaussDiagram& d, const RackTable& r,
                                    const Cochain2& phi, const Coloring& f);

// "1=3,2=1,..." pairs, arcs ascending.
std::string format_coloring(const Coloring& f);

}  // namespace rackinv

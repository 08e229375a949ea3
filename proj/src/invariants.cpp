#include "rackinv/invariants.hpp"

#include <cassert>
#include <sstream>

namespace rackinv {

namespace {

// One printed term, e.g. "8", "4z", "8z^12", "4q1q2", "16q1^2q2^2".
void append_term(std::string& out, std::uint64_t mult, int z_exp, const std::vector<int>& w) {
    std::string mono;
    if (z_exp == 1) mono += "z";
    else if (z_exp > 1) mono += "z^" + std::to_string(z_exp);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        mono += "q" + std::to_string(i + 1);
        if (w[i] > 1) mono += "^" + std::to_string(w[i]);
    }
    if (mono.empty()) {
        out += std::to_string(mult);
    } else {
        if (mult != 1) out += std::to_string(mult);
        out += mono;
    }
}

std::string writhe_key(const std::vector<int>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(w[i]);
    }
    return out + ")";
}

}  // namespace

std::uint64_t QPolynomial::total() const {
    std::uint64_t sum = 0;
    for (const auto& [w, mult] : terms) sum += mult;
    return sum;
}

std::string QPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [w, mult] : terms) {
        if (!out.empty()) out += " + ";
        append_term(out, mult, 0, w);
    }
    return out;
}

std::string QPolynomial::machine_block() const {
    std::string out;
    for (const auto& [w, mult] : terms)
        out += writhe_key(w) + " 0 " + std::to_string(mult) + "\n";
    return out;
}

QPolynomial PhiPolynomial::specialize_z() const {
    QPolynomial q;
    q.rank = rank;
    q.components = components;
    for (const auto& [key, mult] : terms) q.terms[key.first] += mult;
    return q;
}

std::string PhiPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [key, mult] : terms) {
        if (!out.empty()) out += " + ";
        append_term(out, mult, key.second, key.first);
    }
    return out;
}

std::string PhiPolynomial::machine_block() const {
    std::string out;
    for (const auto& [key, mult] : terms)
        out += writhe_key(key.first) + " " + std::to_string(key.second) + " " +
               std::to_string(mult) + "\n";
    return out;
}

std::uint64_t integer_counting(const GaussDiagram& d, const RackTable& r) {
    std::uint64_t total = 0;
    for (const FramingRepresentative& rep : framing_representatives(d, rack_rank(r)))
        total += count_colorings(rep.diagram, r);
    return total;
}

QPolynomial polynomial_counting(const GaussDiagram& d, const RackTable& r) {
    QPolynomial out;
    out.rank = rack_rank(r);
    out.components = d.component_count();
    for (const FramingRepresentative& rep : framing_representatives(d, out.rank)) {
        const std::uint64_t count = count_colorings(rep.diagram, r);
        if (count > 0) out.terms[rep.writhe_vector] = count;
    }
    return out;
}

std::optional<PhiPolynomial> cocycle_invariant(const GaussDiagram& d, const RackTable& r,
                                               const Cochain2& phi, std::string* error) {
    auto fail = [&](std::string msg) -> std::optional<PhiPolynomial> {
        if (error) *error = std::move(msg);
        return std::nullopt;
    };
    if (phi.n != r.size())
        return fail("cochain is on " + std::to_string(phi.n) + " elements but the rack has " +
                    std::to_string(r.size()));
    if (const auto bad = find_cocycle_violation(r, phi))
        return fail("cochain is not a 2-cocycle: its coboundary is nonzero at (x,y,z)=(" +
                    std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," +
                    std::to_string((*bad)[2]) + ")");
    if (const auto bad = find_reduced_violation(r, phi))
        return fail("cochain is not reduced: the rank-step diagonal sum at x=" +
                    std::to_string(*bad) + " is nonzero");

    PhiPolynomial out;
    out.rank = rack_rank(r);
    out.components = d.component_count();
    out.modulus = phi.modulus;
    for (const FramingRepresentative& rep : framing_representatives(d, out.rank)) {
        for (const Coloring& f : enumerate_colorings(rep.diagram, r)) {
            const auto w = boltzmann_weight(rep.diagram, r, phi, f);
            assert(w.has_value());
            out.terms[{rep.writhe_vector, *w}] += 1;
        }
    }
    return out;
}

QPolynomial constant_action_closed_form(std::int64_t rank, int linking) {
    assert(rank >= 1);
    QPolynomial out;
    out.rank = rank;
    out.components = 2;
    const int l = static_cast<int>(((-static_cast<std::int64_t>(linking)) % rank + rank) % rank);
    out.terms[{l, l}] = static_cast<std::uint64_t>(rank) * static_cast<std::uint64_t>(rank);
    return out;
}

bool classicality_obstruction(const QPolynomial& p) {
    for (const auto& [w, mult] : p.terms) {
        assert(w.size() == 2);
        if (w[0] != w[1]) return true;
    }
    return false;
}

}  // namespace rackinv

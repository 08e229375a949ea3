#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rackinv/cohomology.hpp"
#include "rackinv/coloring.hpp"
#include "rackinv/gauss_code.hpp"
#include "rackinv/rack.hpp"

namespace rackinv {

// Framed coloring count, graded by writhe vector: sum over w in (Z_rank)^c of
// count(w) * q_1^{w_1} ... q_c^{w_c}. Zero-count terms are absent.
struct QPolynomial {
    std::int64_t rank = 1;
    int components = 0;
    std::map<std::vector<int>, std::uint64_t> terms;

    std::uint64_t total() const;  // evaluation at every q_i = 1
    std::string to_string() const;
    std::string machine_block() const;  // "(w) 0 mult" lines, one per term
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

// Cocycle-weighted refinement: multiplicity of z^{weight} q^w per (w, weight).
struct PhiPolynomial {
    std::int64_t rank = 1;
    int components = 0;
    int modulus = 2;
    std::map<std::pair<std::vector<int>, int>, std::uint64_t> terms;

    QPolynomial specialize_z() const;  // evaluation at z = 1
    std::string to_string() const;
    std::string machine_block() const;  // "(w) weight mult" lines
    friend bool operator==(const PhiPolynomial&, const PhiPolynomial&) = default;
};

// Total coloring count over all framing representatives of d.
std::uint64_t integer_counting(const GaussDiagram& d, const RackTable& r);

QPolynomial polynomial_counting(const GaussDiagram& d, const RackTable& r);

// Boltzmann-weighted state sum. Refuses phi that is not a 2-cocycle or not
// reduced; the error names the failed condition and a witness.
std::optional<PhiPolynomial> cocycle_invariant(const GaussDiagram& d, const RackTable& r,
                                               const Cochain2& phi, std::string* error = nullptr);

// What polynomial_counting yields for any 2-component classical link colored
// by a constant action rack of the given rank: rank^2 q_1^l q_2^l with
// l = -linking mod rank.
QPolynomial constant_action_closed_form(std::int64_t rank, int linking);

// True when some term of a 2-component polynomial has unequal q-exponents;
// no classical link does that.
bool classicality_obstruction(const QPolynomial& p);

}  // namespace rackinv

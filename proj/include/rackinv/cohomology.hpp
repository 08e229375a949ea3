#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rackinv/parse_error.hpp"
#include "rackinv/rack.hpp"

namespace rackinv {

// Cochains on a rack of size n with coefficients in Z_modulus. Values are
// kept reduced into 0..modulus-1.
struct Cochain1 {
    int modulus = 2;
    std::vector<int> values;  // values[x-1] = f(x)

    int at(ElementIndex x) const { return values[x - 1]; }
    friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

struct Cochain2 {
    int modulus = 2;
    int n = 0;
    std::vector<int> values;  // row-major n*n

    int at(ElementIndex x, ElementIndex y) const {
        return values[static_cast<std::size_t>(x - 1) * n + (y - 1)];
    }
    int& at(ElementIndex x, ElementIndex y) {
        return values[static_cast<std::size_t>(x - 1) * n + (y - 1)];
    }
    bool is_zero() const;
    friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

struct Cochain3 {
    int modulus = 2;
    int n = 0;
    std::vector<int> values;  // x-major n*n*n

    int at(ElementIndex x, ElementIndex y, ElementIndex z) const {
        return values[(static_cast<std::size_t>(x - 1) * n + (y - 1)) * n + (z - 1)];
    }
    bool is_zero() const;
    friend bool operator==(const Cochain3&, const Cochain3&) = default;
};

// Characteristic 2-cochain: 1 at (i, j), 0 elsewhere.
Cochain2 chi(int n, int modulus, ElementIndex i, ElementIndex j);

Cochain2 add(const Cochain2& a, const Cochain2& b);
Cochain2 scale(const Cochain2& a, int c);

// (delta1 f)(x, y) = f(x|>y) - f(x)
Cochain2 delta1(const RackTable& r, const Cochain1& f);

// (delta2 phi)(x, y, z) = phi(x,y) - phi(x,z) + phi(x|>y, z) - phi(x|>z, y|>z)
Cochain3 delta2(const RackTable& r, const Cochain2& phi);

bool is_cocycle(const RackTable& r, const Cochain2& phi);

// Sum of phi over the diagonal orbit of every element, each orbit walked
// rank-many steps, must vanish. For quandles this is phi(x, x) = 0.
bool is_n_reduced(const RackTable& r, const Cochain2& phi);

// First witnesses backing the predicates above, in lexicographic scan order.
std::optional<std::array<ElementIndex, 3>> find_cocycle_violation(const RackTable& r,
                                                                  const Cochain2& phi);
std::optional<ElementIndex> find_reduced_violation(const RackTable& r, const Cochain2& phi);

// Solutions of { delta2 phi = 0, phi reduced } over Z_modulus, presented by
// generators: every solution is a unique combination
//   sum_i c_i * generators[i]  with  0 <= c_i < orders[i].
// The zero cochain (empty combination) is always a solution.
struct ReducedCocycleModule {
    int n = 0;
    int modulus = 2;
    std::vector<Cochain2> generators;
    std::vector<std::int64_t> orders;  // orders[i] > 1, aligned with generators

    // Exact decimal count of solutions (the product of the orders).
    std::string solution_count() const;

    // All solutions in the combination order above (coefficients counted up
    // with the last generator fastest), truncated to at most `cap` cochains.
    // cap is clamped to kMaterializeCap.
    std::vector<Cochain2> materialize(std::uint64_t cap) const;

    static constexpr std::uint64_t kMaterializeCap = 1000000;
};

// Kernel of the stacked constraint system (all delta2 equations plus the
// reduction constraints) over Z_modulus. Works for composite moduli.
ReducedCocycleModule enumerate_reduced_cocycles(const RackTable& r, int modulus);

// Text format: first line "n modulus", then n lines of n residues.
std::optional<Cochain2> parse_cochain(std::string_view text, ParseError* err = nullptr);
std::string write_cochain(const Cochain2& phi);

}  // namespace rackinv

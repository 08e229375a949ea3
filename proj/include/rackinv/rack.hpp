#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rackinv/parse_error.hpp"

namespace rackinv {

// Elements of a finite rack are 1-based indices into its operation table.
using ElementIndex = int;

struct AxiomViolation {
    enum class Kind {
        NotSquare,          // ragged or empty table
        TooLarge,           // cardinality above kMaxCardinality
        EntryOutOfRange,    // entry not in 1..n
        ColumnNotBijection, // axiom (i): some y -> x |> y column repeats a value
        SelfDistributivity, // axiom (ii): (x|>y)|>z != (x|>z)|>(y|>z)
    };

    Kind kind;
    // Witness indices, 1-based. Meaning depends on kind:
    //   NotSquare:          i = offending row (0 for a row-count mismatch)
    //   EntryOutOfRange:    (i, j) = cell, k = the entry found there
    //   ColumnNotBijection: j = column, k = the repeated value
    //   SelfDistributivity: (i, j, k) = the violating triple
    int i = 0;
    int j = 0;
    int k = 0;

    std::string describe() const;
};

// Operation table of a finite rack: row x, column y holds x |> y.
// Both rack axioms are certified at construction, so op/inv_op never fail.
class RackTable {
public:
    static constexpr int kMaxCardinality = 255;

    // Checks shape and both rack axioms. On failure returns nullopt and, when
    // `violations` is given, fills it with every failure found.
    static std::optional<RackTable> validate(const std::vector<std::vector<int>>& table,
                                             std::vector<AxiomViolation>* violations = nullptr);

    int size() const { return n_; }

    // x |> y
    ElementIndex op(ElementIndex x, ElementIndex y) const { return table_[idx(x, y)]; }

    // The unique z with z |> y = x.
    ElementIndex inv_op(ElementIndex x, ElementIndex y) const { return inverse_[idx(x, y)]; }

    // k-fold diagonal iterate of x: x|>x, then (x|>x)|>(x|>x), and so on.
    // Requires k >= 1.
    ElementIndex triangle_power(ElementIndex x, std::int64_t k) const;

    // Copy of the table with 1-based entries.
    std::vector<std::vector<int>> rows() const;

private:
    RackTable() = default;

    std::size_t idx(ElementIndex x, ElementIndex y) const {
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(y - 1);
    }

    int n_ = 0;
    std::vector<std::uint8_t> table_;    // row-major, values 1..n
    std::vector<std::uint8_t> inverse_;  // inverse_[x][y] = z with z |> y = x
};

struct RackProfile {
    std::int64_t rank = 1;             // order of the diagonal permutation
    std::vector<int> exponents;        // exponents[x-1] = least k with x's diagonal orbit closing
    bool is_quandle = false;           // every x |> x = x
    std::vector<int> diagonal;         // diagonal[x-1] = x |> x
    // Partition of 1..n into classes acting identically on the right
    // (equal columns). Classes and their members are in ascending order.
    std::vector<std::vector<int>> operator_classes;
};

RackProfile profile(const RackTable& r);

// Order of the diagonal permutation alone; cheaper than profile().
std::int64_t rack_rank(const RackTable& r);

// Constant action rack x |> y = sigma(x). `sigma` lists 1-based images,
// sigma[i] being the image of i+1, and must be a permutation.
RackTable make_constant_action(const std::vector<int>& sigma);

// x |> y = t*x + s*y on residues mod `modulus`, with index i standing for the
// residue i (so index `modulus` is the zero residue). Requires gcd(modulus, t) = 1
// and s^2 = (1-t)*s mod modulus; on failure returns nullopt with a diagnostic.
std::optional<RackTable> make_ts_rack(int modulus, int t, int s, std::string* error = nullptr);

// Cycle notation for a permutation given as 1-based images, fixed points
// omitted: "(4 6)(5 7)". The identity renders as "id".
std::string cycle_notation(const std::vector<int>& perm);

// Text format: first line n, then n lines of n 1-based entries. '#' starts a
// comment. The parser only checks syntax; pass the matrix to RackTable::validate.
std::optional<std::vector<std::vector<int>>> parse_rack_matrix(std::string_view text,
                                                               ParseError* err = nullptr);
std::string write_rack(const RackTable& r);

}  // namespace rackinv

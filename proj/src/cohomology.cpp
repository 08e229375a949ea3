#include "rackinv/cohomology.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "text_tokens.hpp"

namespace rackinv {

namespace {

int reduce(std::int64_t v, int m) {
    const std::int64_t r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace

bool Cochain2::is_zero() const { return all_zero(values); }
bool Cochain3::is_zero() const { return all_zero(values); }

Cochain2 chi(int n, int modulus, ElementIndex i, ElementIndex j) {
    assert(modulus >= 2);
    Cochain2 c{modulus, n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
    c.at(i, j) = reduce(1, modulus);
    return c;
}

Cochain2 add(const Cochain2& a, const Cochain2& b) {
    assert(a.n == b.n && a.modulus == b.modulus);
    Cochain2 out = a;
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = reduce(static_cast<std::int64_t>(a.values[k]) + b.values[k], a.modulus);
    return out;
}

Cochain2 scale(const Cochain2& a, int c) {
    Cochain2 out = a;
    for (int& v : out.values) v = reduce(static_cast<std::int64_t>(v) * c, a.modulus);
    return out;
}

Cochain2 delta1(const RackTable& r, const Cochain1& f) {
    const int n = r.size();
    const int m = f.modulus;
    Cochain2 out{m, n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            out.at(x, y) = reduce(static_cast<std::int64_t>(f.at(r.op(x, y))) - f.at(x), m);
    return out;
}

namespace {

int delta2_entry(const RackTable& r, const Cochain2& phi, int x, int y, int z) {
    const std::int64_t v = static_cast<std::int64_t>(phi.at(x, y)) - phi.at(x, z) +
                           phi.at(r.op(x, y), z) - phi.at(r.op(x, z), r.op(y, z));
    return reduce(v, phi.modulus);
}

}  // namespace

Cochain3 delta2(const RackTable& r, const Cochain2& phi) {
    const int n = r.size();
    assert(phi.n == n);
    Cochain3 out{phi.modulus, n,
                 std::vector<int>(static_cast<std::size_t>(n) * n * n, 0)};
    std::size_t k = 0;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) out.values[k++] = delta2_entry(r, phi, x, y, z);
    return out;
}

std::optional<std::array<ElementIndex, 3>> find_cocycle_violation(const RackTable& r,
                                                                  const Cochain2& phi) {
    const int n = r.size();
    assert(phi.n == n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                if (delta2_entry(r, phi, x, y, z) != 0)
                    return std::array<ElementIndex, 3>{x, y, z};
    return std::nullopt;
}

bool is_cocycle(const RackTable& r, const Cochain2& phi) {
    return !find_cocycle_violation(r, phi).has_value();
}

std::optional<ElementIndex> find_reduced_violation(const RackTable& r, const Cochain2& phi) {
    const int n = r.size();
    assert(phi.n == n);
    const std::int64_t rank = rack_rank(r);
    const int m = phi.modulus;
    for (int a = 1; a <= n; ++a) {
        // Walk a's diagonal orbit once; the rank-step sum repeats it rank/len times.
        std::int64_t orbit_sum = 0;
        int len = 0;
        int cur = a;
        do {
            cur = r.op(cur, cur);
            orbit_sum += phi.at(cur, cur);
            ++len;
        } while (cur != a);
        const int total = reduce(orbit_sum % m * ((rank / len) % m), m);
        if (total != 0) return a;
    }
    return std::nullopt;
}

bool is_n_reduced(const RackTable& r, const Cochain2& phi) {
    return !find_reduced_violation(r, phi).has_value();
}

namespace {

struct Xgcd {
    std::int64_t g, s, t;  // g = s*a + t*b
};

Xgcd xgcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a, 1, 0};
    const Xgcd sub = xgcd(b, a % b);
    return {sub.g, sub.t, sub.s - (a / b) * sub.t};
}

// Row accumulator over Z_m. Feeding constraint rows through keeps at most one
// pivot row per leading column; elementary transforms are invertible mod m, so
// the kept rows span exactly what was fed.
class RowSpan {
public:
    RowSpan(int cols, int m) : cols_(cols), m_(m), pivot_rows_(cols) {}

    void add(std::vector<int> row) {
        int lead = first_nonzero(row, 0);
        while (lead < cols_) {
            std::vector<int>& p = pivot_rows_[lead];
            if (p.empty()) {
                p = std::move(row);
                return;
            }
            const std::int64_t a = p[lead];
            const std::int64_t b = row[lead];
            if (b % a == 0) {
                // Plain elimination; the pivot row stays put.
                const std::int64_t q = b / a;
                for (int c = lead; c < cols_; ++c)
                    row[c] = reduce(row[c] - q * p[c], m_);
            } else {
                const auto [g, s, t] = xgcd(a, b);
                for (int c = lead; c < cols_; ++c) {
                    const std::int64_t pc = p[c];
                    const std::int64_t rc = row[c];
                    p[c] = reduce(s * pc + t * rc, m_);
                    row[c] = reduce((-b / g) * pc + (a / g) * rc, m_);
                }
            }
            lead = first_nonzero(row, lead + 1);
        }
    }

    // Stored rows, ordered by leading column.
    std::vector<std::vector<int>> rows() && {
        std::vector<std::vector<int>> out;
        for (auto& p : pivot_rows_)
            if (!p.empty()) out.push_back(std::move(p));
        return out;
    }

private:
    int first_nonzero(const std::vector<int>& row, int from) const {
        int c = from;
        while (c < cols_ && row[c] == 0) ++c;
        return c;
    }

    int cols_;
    int m_;
    std::vector<std::vector<int>> pivot_rows_;
};

// Diagonalization D = U*B*V over Z_m via invertible row and column transforms.
// Only V is tracked: solutions of B*v = 0 are exactly v = V*w with
// diag[i]*w_i = 0. Entries of diag beyond the returned length are zero.
struct Diagonalized {
    std::vector<int> diag;
    std::vector<std::vector<int>> v_columns;  // v_columns[j] = column j of V
};

Diagonalized diagonalize(std::vector<std::vector<int>> b, int cols, int m) {
    const int rows = static_cast<int>(b.size());
    std::vector<std::vector<int>> v(cols, std::vector<int>(cols, 0));
    for (int j = 0; j < cols; ++j) v[j][j] = 1;  // v[j] is column j

    auto col_transform = [&](int u, int w, std::int64_t s, std::int64_t t, std::int64_t bs,
                             std::int64_t bt) {
        // col_u <- s*col_u + t*col_w ; col_w <- bs*col_u + bt*col_w (old values)
        for (int i = 0; i < rows; ++i) {
            const std::int64_t cu = b[i][u];
            const std::int64_t cw = b[i][w];
            b[i][u] = reduce(s * cu + t * cw, m);
            b[i][w] = reduce(bs * cu + bt * cw, m);
        }
        for (int i = 0; i < cols; ++i) {
            const std::int64_t cu = v[u][i];
            const std::int64_t cw = v[w][i];
            v[u][i] = reduce(s * cu + t * cw, m);
            v[w][i] = reduce(bs * cu + bt * cw, m);
        }
    };

    const int steps = std::min(rows, cols);
    std::vector<int> diag;
    for (int t = 0; t < steps; ++t) {
        // Find any nonzero entry in the trailing submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < rows && pi < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (b[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(b[t], b[pi]);
        if (pj != t) {
            for (int i = 0; i < rows; ++i) std::swap(b[i][t], b[i][pj]);
            std::swap(v[t], v[pj]);
        }

        // Each pass either leaves the pivot alone (divisible case) or strictly
        // shrinks it (gcd case), so the loop terminates.
        for (;;) {
            for (int i = t + 1; i < rows; ++i) {
                if (b[i][t] == 0) continue;
                const std::int64_t a = b[t][t];
                const std::int64_t bb = b[i][t];
                if (bb % a == 0) {
                    const std::int64_t q = bb / a;
                    for (int c = t; c < cols; ++c)
                        b[i][c] = reduce(b[i][c] - q * b[t][c], m);
                } else {
                    const auto [g, s, tt] = xgcd(a, bb);
                    for (int c = t; c < cols; ++c) {
                        const std::int64_t rc = b[t][c];
                        const std::int64_t ic = b[i][c];
                        b[t][c] = reduce(s * rc + tt * ic, m);
                        b[i][c] = reduce((-bb / g) * rc + (a / g) * ic, m);
                    }
                }
            }
            bool row_clear = true;
            for (int j = t + 1; j < cols; ++j) {
                if (b[t][j] == 0) continue;
                row_clear = false;
                const std::int64_t a = b[t][t];
                const std::int64_t bb = b[t][j];
                if (bb % a == 0) {
                    col_transform(t, j, 1, 0, -(bb / a), 1);
                } else {
                    const auto [g, s, tt] = xgcd(a, bb);
                    col_transform(t, j, s, tt, -bb / g, a / g);
                }
            }
            if (row_clear) {
                bool col_clear = true;
                for (int i = t + 1; i < rows; ++i)
                    if (b[i][t] != 0) col_clear = false;
                if (col_clear) break;
            }
        }
        diag.push_back(b[t][t]);
    }

    return {std::move(diag), std::move(v)};
}

// Little-endian base-1e9 product of small positive factors, as decimal text.
std::string decimal_product(const std::vector<std::int64_t>& factors) {
    std::vector<std::uint64_t> limbs{1};
    for (std::int64_t f : factors) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            const std::uint64_t cur = limb * static_cast<std::uint64_t>(f) + carry;
            limb = cur % 1000000000ull;
            carry = cur / 1000000000ull;
        }
        while (carry) {
            limbs.push_back(carry % 1000000000ull);
            carry /= 1000000000ull;
        }
    }
    std::string out = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

}  // namespace

std::string ReducedCocycleModule::solution_count() const { return decimal_product(orders); }

std::vector<Cochain2> ReducedCocycleModule::materialize(std::uint64_t cap) const {
    cap = std::min(cap, kMaterializeCap);
    std::vector<Cochain2> out;
    if (cap == 0) return out;

    const std::size_t cells = static_cast<std::size_t>(n) * n;
    std::vector<std::int64_t> coeff(orders.size(), 0);
    for (;;) {
        Cochain2 sol{modulus, n, std::vector<int>(cells, 0)};
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t k = 0; k < cells; ++k)
                sol.values[k] = reduce(
                    sol.values[k] + coeff[i] % modulus * generators[i].values[k], modulus);
        }
        out.push_back(std::move(sol));
        if (out.size() >= cap) break;

        // Odometer over the coefficient ranges, last generator fastest.
        std::size_t pos = coeff.size();
        while (pos > 0 && coeff[pos - 1] == orders[pos - 1] - 1) coeff[--pos] = 0;
        if (pos == 0) break;
        ++coeff[pos - 1];
    }
    return out;
}

ReducedCocycleModule enumerate_reduced_cocycles(const RackTable& r, int modulus) {
    assert(modulus >= 2);
    const int n = r.size();
    const int m = modulus;
    const int cols = n * n;
    auto cell = [n](int x, int y) { return (x - 1) * n + (y - 1); };

    RowSpan span(cols, m);
    std::vector<int> row(cols);

    // One row per triple: the coefficients of delta2 phi (x,y,z) = 0.
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
            for (int z = 1; z <= n; ++z) {
                std::fill(row.begin(), row.end(), 0);
                auto bump = [&](int cx, int cy, int delta) {
                    int& slot = row[cell(cx, cy)];
                    slot = reduce(slot + delta, m);
                };
                bump(x, y, +1);
                bump(x, z, -1);
                bump(r.op(x, y), z, +1);
                bump(r.op(x, z), r.op(y, z), -1);
                span.add(row);
            }
        }
    }

    // One row per element: the rank-step diagonal sum must vanish. Each orbit
    // member is hit rank/len times.
    const std::int64_t rank = rack_rank(r);
    for (int a = 1; a <= n; ++a) {
        std::fill(row.begin(), row.end(), 0);
        int len = 0;
        int cur = a;
        do {
            cur = r.op(cur, cur);
            ++len;
        } while (cur != a);
        const int mult = static_cast<int>((rank / len) % m);
        cur = a;
        do {
            cur = r.op(cur, cur);
            int& slot = row[cell(cur, cur)];
            slot = reduce(slot + mult, m);
        } while (cur != a);
        span.add(row);
    }

    const Diagonalized d = diagonalize(std::move(span).rows(), cols, m);

    ReducedCocycleModule out;
    out.n = n;
    out.modulus = m;
    for (int i = 0; i < cols; ++i) {
        const std::int64_t di = i < static_cast<int>(d.diag.size()) ? d.diag[i] : 0;
        const std::int64_t g = std::gcd(di, static_cast<std::int64_t>(m));
        if (g <= 1) continue;
        const std::int64_t step = m / g;
        Cochain2 gen{m, n, std::vector<int>(static_cast<std::size_t>(cols), 0)};
        for (int k = 0; k < cols; ++k)
            gen.values[k] = reduce(step * d.v_columns[i][k], m);
        out.generators.push_back(std::move(gen));
        out.orders.push_back(g);
    }
    return out;
}

std::optional<Cochain2> parse_cochain(std::string_view text, ParseError* err) {
    using detail::Token;
    using detail::token_to_int;
    using detail::tokenize;

    auto fail = [&](int line, int col, std::string msg) -> std::optional<Cochain2> {
        if (err) *err = {line, col, std::move(msg)};
        return std::nullopt;
    };

    const std::vector<Token> tokens = tokenize(text);
    if (tokens.size() < 2) return fail(0, 0, "expected a header line 'n modulus'");

    const auto n = token_to_int(tokens[0]);
    if (!n || *n < 1) return fail(tokens[0].line, tokens[0].column, "bad cochain size");
    if (*n > 100000) return fail(tokens[0].line, tokens[0].column, "cochain size is implausibly large");
    const auto m = token_to_int(tokens[1]);
    if (!m || *m < 2) return fail(tokens[1].line, tokens[1].column, "modulus must be at least 2");

    const std::size_t want = static_cast<std::size_t>(*n) * static_cast<std::size_t>(*n);
    if (tokens.size() - 2 < want) {
        const Token& last = tokens.back();
        return fail(last.line, last.column,
                    "expected " + std::to_string(want) + " values, found " +
                        std::to_string(tokens.size() - 2));
    }
    if (tokens.size() - 2 > want) {
        const Token& extra = tokens[want + 2];
        return fail(extra.line, extra.column, "trailing data after the cochain");
    }

    Cochain2 phi{*m, *n, std::vector<int>(want, 0)};
    for (std::size_t k = 0; k < want; ++k) {
        const Token& tok = tokens[k + 2];
        const auto v = token_to_int(tok);
        if (!v) return fail(tok.line, tok.column,
                            "expected an integer value, got '" + std::string(tok.text) + "'");
        phi.values[k] = reduce(*v, *m);
    }
    return phi;
}

std::string write_cochain(const Cochain2& phi) {
    std::ostringstream out;
    out << phi.n << " " << phi.modulus << "\n";
    for (int i = 1; i <= phi.n; ++i) {
        for (int j = 1; j <= phi.n; ++j) {
            if (j > 1) out << " ";
            out << phi.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace rackinv

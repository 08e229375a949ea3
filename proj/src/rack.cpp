#include "rackinv/rack.hpp"

#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "text_tokens.hpp"

namespace rackinv {

std::string ParseError::describe() const {
    std::string out;
    if (line > 0) {
        out += "line " + std::to_string(line);
        if (column > 0) out += ", column " + std::to_string(column);
        out += ": ";
    }
    return out + message;
}

std::string AxiomViolation::describe() const {
    switch (kind) {
        case Kind::NotSquare:
            if (i == 0) return "table is not square: row count does not match its width";
            return "table is not square: row " + std::to_string(i) + " has the wrong length";
        case Kind::TooLarge:
            return "table size " + std::to_string(i) + " exceeds the supported maximum " +
                   std::to_string(RackTable::kMaxCardinality);
        case Kind::EntryOutOfRange:
            return "entry at row " + std::to_string(i) + ", column " + std::to_string(j) +
                   " is " + std::to_string(k) + ", not an element index";
        case Kind::ColumnNotBijection:
            return "axiom (i): column " + std::to_string(j) +
                   " is not a permutation (value " + std::to_string(k) + " repeats)";
        case Kind::SelfDistributivity:
            return "axiom (ii) fails at (x,y,z)=(" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")";
    }
    return "unknown violation";
}

std::optional<RackTable> RackTable::validate(const std::vector<std::vector<int>>& table,
                                             std::vector<AxiomViolation>* violations) {
    std::vector<AxiomViolation> local;
    auto report = [&](AxiomViolation v) { local.push_back(v); };

    const int n = static_cast<int>(table.size());
    if (n == 0) {
        report({AxiomViolation::Kind::NotSquare, 0, 0, 0});
    } else if (n > kMaxCardinality) {
        report({AxiomViolation::Kind::TooLarge, n, 0, 0});
    }

    bool shape_ok = local.empty();
    if (shape_ok) {
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(table[i].size()) != n) {
                report({AxiomViolation::Kind::NotSquare, i + 1, 0, 0});
                shape_ok = false;
            }
        }
    }

    bool entries_ok = shape_ok;
    if (shape_ok) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int v = table[i][j];
                if (v < 1 || v > n) {
                    report({AxiomViolation::Kind::EntryOutOfRange, i + 1, j + 1, v});
                    entries_ok = false;
                }
            }
        }
    }

    if (entries_ok) {
        // Axiom (i): every column y -> (x |> y) must be a bijection.
        for (int j = 0; j < n; ++j) {
            std::vector<int> seen(n + 1, 0);
            for (int i = 0; i < n; ++i) seen[table[i][j]]++;
            for (int v = 1; v <= n; ++v) {
                if (seen[v] > 1) {
                    report({AxiomViolation::Kind::ColumnNotBijection, 0, j + 1, v});
                }
            }
        }
        // Axiom (ii): (x|>y)|>z = (x|>z)|>(y|>z).
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                for (int z = 0; z < n; ++z) {
                    const int lhs = table[table[x][y] - 1][z];
                    const int rhs = table[table[x][z] - 1][table[y][z] - 1];
                    if (lhs != rhs) {
                        report({AxiomViolation::Kind::SelfDistributivity, x + 1, y + 1, z + 1});
                    }
                }
            }
        }
    }

    if (!local.empty()) {
        if (violations) *violations = std::move(local);
        return std::nullopt;
    }

    RackTable r;
    r.n_ = n;
    r.table_.resize(static_cast<std::size_t>(n) * n);
    r.inverse_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.table_[r.idx(i + 1, j + 1)] = static_cast<std::uint8_t>(table[i][j]);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            r.inverse_[r.idx(r.op(i, j), j)] = static_cast<std::uint8_t>(i);
    return r;
}

ElementIndex RackTable::triangle_power(ElementIndex x, std::int64_t k) const {
    assert(k >= 1);
    assert(x >= 1 && x <= n_);
    // Walk the diagonal orbit of x once to learn its length, then reduce k.
    std::vector<ElementIndex> orbit{x};
    ElementIndex cur = op(x, x);
    while (cur != x) {
        orbit.push_back(cur);
        cur = op(cur, cur);
    }
    return orbit[static_cast<std::size_t>(k % static_cast<std::int64_t>(orbit.size()))];
}

std::vector<std::vector<int>> RackTable::rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = op(i, j);
    return out;
}

RackProfile profile(const RackTable& r) {
    const int n = r.size();
    RackProfile p;
    p.diagonal.resize(n);
    p.exponents.assign(n, 0);
    for (int x = 1; x <= n; ++x) p.diagonal[x - 1] = r.op(x, x);

    std::int64_t rank = 1;
    for (int x = 1; x <= n; ++x) {
        int len = 1;
        int cur = p.diagonal[x - 1];
        while (cur != x) {
            cur = p.diagonal[cur - 1];
            ++len;
        }
        p.exponents[x - 1] = len;
        rank = std::lcm(rank, static_cast<std::int64_t>(len));
    }
    p.rank = rank;
    p.is_quandle = (rank == 1);

    // Group elements by their right-translation columns.
    std::map<std::vector<int>, int> column_class;
    std::vector<std::vector<int>> classes;
    for (int y = 1; y <= n; ++y) {
        std::vector<int> col(n);
        for (int x = 1; x <= n; ++x) col[x - 1] = r.op(x, y);
        auto [it, fresh] = column_class.try_emplace(std::move(col), static_cast<int>(classes.size()));
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(y);
    }
    p.operator_classes = std::move(classes);
    return p;
}

std::int64_t rack_rank(const RackTable& r) {
    const int n = r.size();
    std::int64_t rank = 1;
    std::vector<char> done(n + 1, 0);
    for (int x = 1; x <= n; ++x) {
        if (done[x]) continue;
        int len = 0;
        int cur = x;
        do {
            done[cur] = 1;
            cur = r.op(cur, cur);
            ++len;
        } while (cur != x);
        rank = std::lcm(rank, static_cast<std::int64_t>(len));
    }
    return rank;
}

RackTable make_constant_action(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("sigma is not a permutation");
        seen[v] = 1;
    }
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = sigma[i];
    auto r = RackTable::validate(table);
    assert(r.has_value());
    return *r;
}

std::optional<RackTable> make_ts_rack(int modulus, int t, int s, std::string* error) {
    auto fail = [&](const std::string& msg) -> std::optional<RackTable> {
        if (error) *error = msg;
        return std::nullopt;
    };
    if (modulus < 1) return fail("modulus must be positive");
    if (modulus > RackTable::kMaxCardinality)
        return fail("modulus exceeds the supported maximum " +
                    std::to_string(RackTable::kMaxCardinality));
    const auto m = static_cast<std::int64_t>(modulus);
    auto reduce = [m](std::int64_t v) { return ((v % m) + m) % m; };
    const std::int64_t tm = reduce(t);
    const std::int64_t sm = reduce(s);
    if (std::gcd(tm, m) != 1)
        return fail("t = " + std::to_string(t) + " is not invertible mod " + std::to_string(modulus));
    if (reduce(sm * sm) != reduce((1 - tm) * sm))
        return fail("s^2 = (1-t)s fails: s^2 = " + std::to_string(reduce(sm * sm)) +
                    " but (1-t)s = " + std::to_string(reduce((1 - tm) * sm)) + " mod " +
                    std::to_string(modulus));

    // Index i stands for the residue i, with the zero residue written as `modulus`.
    std::vector<std::vector<int>> table(modulus, std::vector<int>(modulus));
    for (int i = 1; i <= modulus; ++i) {
        for (int j = 1; j <= modulus; ++j) {
            const std::int64_t v = reduce(tm * i + sm * j);
            table[i - 1][j - 1] = v == 0 ? modulus : static_cast<int>(v);
        }
    }
    auto r = RackTable::validate(table);
    assert(r.has_value());
    return r;
}

std::string cycle_notation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::string out;
    std::vector<char> seen(n + 1, 0);
    for (int x = 1; x <= n; ++x) {
        if (seen[x] || perm[x - 1] == x) continue;
        out += "(";
        int cur = x;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(cur);
            seen[cur] = 1;
            cur = perm[cur - 1];
            first = false;
        } while (cur != x);
        out += ")";
    }
    return out.empty() ? "id" : out;
}

std::optional<std::vector<std::vector<int>>> parse_rack_matrix(std::string_view text,
                                                               ParseError* err) {
    using detail::Token;
    using detail::token_to_int;
    using detail::tokenize;
    auto fail = [&](int line, int col, std::string msg)
        -> std::optional<std::vector<std::vector<int>>> {
        if (err) *err = {line, col, std::move(msg)};
        return std::nullopt;
    };

    const std::vector<Token> tokens = tokenize(text);
    if (tokens.empty()) return fail(0, 0, "empty input, expected a table size");

    const auto n = token_to_int(tokens[0]);
    if (!n) return fail(tokens[0].line, tokens[0].column,
                        "expected an integer table size, got '" + std::string(tokens[0].text) + "'");
    if (*n < 1) return fail(tokens[0].line, tokens[0].column, "table size must be positive");
    if (*n > 100000) return fail(tokens[0].line, tokens[0].column, "table size is implausibly large");

    const std::size_t want = static_cast<std::size_t>(*n) * static_cast<std::size_t>(*n);
    if (tokens.size() - 1 < want) {
        const Token& last = tokens.back();
        return fail(last.line, last.column,
                    "expected " + std::to_string(want) + " entries for a " + std::to_string(*n) +
                        "x" + std::to_string(*n) + " table, found " +
                        std::to_string(tokens.size() - 1));
    }
    if (tokens.size() - 1 > want) {
        const Token& extra = tokens[want + 1];
        return fail(extra.line, extra.column, "trailing data after the table");
    }

    std::vector<std::vector<int>> table(*n, std::vector<int>(*n));
    for (std::size_t k = 0; k < want; ++k) {
        const Token& tok = tokens[k + 1];
        const auto v = token_to_int(tok);
        if (!v) return fail(tok.line, tok.column,
                            "expected an integer entry, got '" + std::string(tok.text) + "'");
        table[k / *n][k % *n] = *v;
    }
    return table;
}

std::string write_rack(const RackTable& r) {
    std::ostringstream out;
    out << r.size() << "\n";
    for (int i = 1; i <= r.size(); ++i) {
        for (int j = 1; j <= r.size(); ++j) {
            if (j > 1) out << " ";
            out << r.op(i, j);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace rackinv

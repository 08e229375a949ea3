#include "rackinv/gauss_code.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

namespace rackinv {

namespace {

// Pairing check shared by parse and from_components: every id appears exactly
// once as Over and once as Under, with matching signs.
bool check_pairing(const std::vector<std::vector<Visit>>& components, std::string* error) {
    struct Seen {
        int over = 0;
        int under = 0;
        int over_sign = 0;
        int under_sign = 0;
    };
    std::map<int, Seen> seen;
    for (const auto& comp : components) {
        for (const Visit& v : comp) {
            if (v.crossing < 1) {
                if (error) *error = "crossing ids must be positive";
                return false;
            }
            if (v.sign != 1 && v.sign != -1) {
                if (error) *error = "crossing " + std::to_string(v.crossing) + " has a sign other than +1/-1";
                return false;
            }
            Seen& s = seen[v.crossing];
            if (v.role == Role::Over) {
                ++s.over;
                s.over_sign = v.sign;
            } else {
                ++s.under;
                s.under_sign = v.sign;
            }
        }
    }
    for (const auto& [id, s] : seen) {
        if (s.over != 1 || s.under != 1) {
            if (error)
                *error = "crossing " + std::to_string(id) + " must appear exactly once as Over and once as Under (found " +
                         std::to_string(s.over) + " Over, " + std::to_string(s.under) + " Under)";
            return false;
        }
        if (s.over_sign != s.under_sign) {
            if (error) *error = "crossing " + std::to_string(id) + " has mismatched signs at its two visits";
            return false;
        }
    }
    return true;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::optional<GaussDiagram> GaussDiagram::parse(std::string_view text, ParseError* err) {
    auto fail = [&](std::string msg) -> std::optional<GaussDiagram> {
        if (err) *err = {0, 0, std::move(msg)};
        return std::nullopt;
    };

    // Strip comments, then all whitespace; the grammar never needs either.
    std::string cleaned;
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        if (!in_comment && !std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    }
    if (cleaned.empty()) return fail("empty Gauss code");

    std::vector<std::vector<Visit>> components;
    for (const std::string& comp_text : split(cleaned, '|')) {
        if (comp_text.empty())
            return fail("empty component; write a crossingless component as '0'");
        if (comp_text == "0") {
            components.emplace_back();
            continue;
        }
        std::vector<Visit> comp;
        for (const std::string& tok : split(comp_text, ',')) {
            if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
                return fail("malformed visit '" + tok + "', expected O<id><sign> or U<id><sign>");
            const char sign_char = tok.back();
            if (sign_char != '+' && sign_char != '-')
                return fail("malformed visit '" + tok + "', missing trailing sign");
            int id = 0;
            const char* begin = tok.data() + 1;
            const char* end = tok.data() + tok.size() - 1;
            auto [ptr, ec] = std::from_chars(begin, end, id);
            if (ec != std::errc() || ptr != end || id < 1)
                return fail("malformed visit '" + tok + "', bad crossing id");
            comp.push_back({id, tok[0] == 'O' ? Role::Over : Role::Under,
                            sign_char == '+' ? +1 : -1});
        }
        components.push_back(std::move(comp));
    }

    std::string pairing_error;
    if (!check_pairing(components, &pairing_error)) return fail(std::move(pairing_error));

    GaussDiagram d;
    d.components_ = std::move(components);
    return d;
}

std::optional<GaussDiagram> GaussDiagram::from_components(std::vector<std::vector<Visit>> components,
                                                          std::string* error) {
    if (components.empty()) {
        if (error) *error = "a diagram needs at least one component";
        return std::nullopt;
    }
    if (!check_pairing(components, error)) return std::nullopt;
    GaussDiagram d;
    d.components_ = std::move(components);
    return d;
}

std::string GaussDiagram::render() const {
    std::string out;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        if (c > 0) out += " | ";
        if (components_[c].empty()) {
            out += "0";
            continue;
        }
        for (std::size_t i = 0; i < components_[c].size(); ++i) {
            const Visit& v = components_[c][i];
            if (i > 0) out += ",";
            out += v.role == Role::Over ? 'O' : 'U';
            out += std::to_string(v.crossing);
            out += v.sign > 0 ? '+' : '-';
        }
    }
    return out;
}

int GaussDiagram::crossing_count() const {
    int overs = 0;
    for (const auto& comp : components_)
        for (const Visit& v : comp)
            if (v.role == Role::Over) ++overs;
    return overs;
}

int GaussDiagram::max_crossing_id() const {
    int max_id = 0;
    for (const auto& comp : components_)
        for (const Visit& v : comp) max_id = std::max(max_id, v.crossing);
    return max_id;
}

std::vector<int> GaussDiagram::self_writhe() const {
    std::vector<int> sw(components_.size(), 0);
    std::map<int, std::pair<int, int>> comp_of;  // id -> (component of Over, of Under), 0-based
    for (std::size_t c = 0; c < components_.size(); ++c) {
        for (const Visit& v : components_[c]) {
            auto& e = comp_of[v.crossing];
            (v.role == Role::Over ? e.first : e.second) = static_cast<int>(c);
        }
    }
    for (const auto& comp : components_) {
        for (const Visit& v : comp) {
            if (v.role != Role::Over) continue;
            const auto& e = comp_of[v.crossing];
            if (e.first == e.second) sw[e.first] += v.sign;
        }
    }
    return sw;
}

std::optional<int> GaussDiagram::linking_number(int i, int j) const {
    assert(i >= 1 && i <= component_count());
    assert(j >= 1 && j <= component_count());
    assert(i != j);
    std::map<int, std::pair<int, int>> comp_of;
    for (std::size_t c = 0; c < components_.size(); ++c)
        for (const Visit& v : components_[c]) {
            auto& e = comp_of[v.crossing];
            (v.role == Role::Over ? e.first : e.second) = static_cast<int>(c) + 1;
        }
    int total = 0;
    int count = 0;
    for (const auto& comp : components_) {
        for (const Visit& v : comp) {
            if (v.role != Role::Over) continue;
            const auto& e = comp_of[v.crossing];
            if ((e.first == i && e.second == j) || (e.first == j && e.second == i)) {
                total += v.sign;
                ++count;
            }
        }
    }
    if (count % 2 != 0) return std::nullopt;
    return total / 2;
}

GaussDiagram GaussDiagram::add_kinks(int component, int k) const {
    assert(component >= 1 && component <= component_count());
    assert(k >= 0);
    GaussDiagram out = *this;
    auto& comp = out.components_[component - 1];
    std::vector<Visit> prefix;
    int next_id = max_crossing_id() + 1;
    for (int i = 0; i < k; ++i) {
        prefix.push_back({next_id, Role::Over, +1});
        prefix.push_back({next_id, Role::Under, +1});
        ++next_id;
    }
    comp.insert(comp.begin(), prefix.begin(), prefix.end());
    return out;
}

ArcIndexing arcs(const GaussDiagram& d) {
    ArcIndexing out;
    std::map<int, CrossingArcs> by_id;

    int next_arc = 1;
    for (const auto& comp : d.components()) {
        std::vector<int> under_pos;
        for (std::size_t p = 0; p < comp.size(); ++p)
            if (comp[p].role == Role::Under) under_pos.push_back(static_cast<int>(p));

        std::vector<int>& comp_arcs = out.arcs_by_component.emplace_back();
        if (under_pos.empty()) {
            // One closed arc; every Over visit of this component rides on it.
            const int arc = next_arc++;
            comp_arcs.push_back(arc);
            for (const Visit& v : comp) {
                CrossingArcs& c = by_id[v.crossing];
                c.crossing = v.crossing;
                c.sign = v.sign;
                c.over_arc = arc;
            }
            continue;
        }

        const int u = static_cast<int>(under_pos.size());
        // arc_ids[j] starts just after under_pos[j] and ends at under_pos[(j+1) % u].
        std::vector<int> arc_ids(u);
        for (int j = 0; j < u; ++j) {
            arc_ids[j] = next_arc++;
            comp_arcs.push_back(arc_ids[j]);
        }

        for (std::size_t p = 0; p < comp.size(); ++p) {
            const Visit& v = comp[p];
            CrossingArcs& c = by_id[v.crossing];
            c.crossing = v.crossing;
            c.sign = v.sign;
            if (v.role == Role::Under) {
                const int j = static_cast<int>(
                    std::lower_bound(under_pos.begin(), under_pos.end(), static_cast<int>(p)) -
                    under_pos.begin());
                c.under_in = arc_ids[(j - 1 + u) % u];
                c.under_out = arc_ids[j];
            } else {
                // Active arc: the one opened by the latest Under visit before p,
                // wrapping to the last one when p precedes them all.
                const int j = static_cast<int>(
                    std::lower_bound(under_pos.begin(), under_pos.end(), static_cast<int>(p)) -
                    under_pos.begin());
                c.over_arc = arc_ids[(j - 1 + u) % u];
            }
        }
    }

    out.arc_count = next_arc - 1;
    out.crossings.reserve(by_id.size());
    for (auto& [id, c] : by_id) out.crossings.push_back(c);
    return out;
}

std::vector<FramingRepresentative> framing_representatives(const GaussDiagram& d,
                                                           std::int64_t rank) {
    assert(rank >= 1);
    const int c = d.component_count();
    __int128 family = 1;
    for (int i = 0; i < c; ++i) {
        family *= rank;
        if (family > 100000000) throw std::length_error("framing family too large to enumerate");
    }
    const std::vector<int> sw = d.self_writhe();

    std::vector<FramingRepresentative> out;
    out.reserve(static_cast<std::size_t>(family));
    std::vector<int> w(c, 0);
    while (true) {
        GaussDiagram rep = d;
        for (int i = 0; i < c; ++i) {
            const std::int64_t k = (((w[i] - sw[i]) % rank) + rank) % rank;
            if (k > 0) rep = rep.add_kinks(i + 1, static_cast<int>(k));
        }
        out.push_back({w, std::move(rep)});

        // Lexicographic successor: last coordinate runs fastest.
        int pos = c - 1;
        while (pos >= 0 && w[pos] == rank - 1) {
            w[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

}  // namespace rackinv

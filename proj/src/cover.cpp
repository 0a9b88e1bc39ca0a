#include "abelcover/cover.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace abelcover {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Rank of a small integer matrix over F_p.
int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    auto inv_mod = [p](std::int64_t a) {
        std::int64_t r = 1;
        std::int64_t base = mod_p(a, p);
        for (std::int64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
        }
        return r;
    };
    int rank = 0;
    std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        std::size_t src = rank;
        while (src < m.size() && mod_p(m[src][col], p) == 0) ++src;
        if (src == m.size()) continue;
        std::swap(m[rank], m[src]);
        std::int64_t inv = inv_mod(m[rank][col]);
        for (auto& v : m[rank]) v = mod_p(v * inv, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(rank)) continue;
            std::int64_t f = mod_p(m[i][col], p);
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) m[i][c] = mod_p(m[i][c] - f * m[rank][c], p);
        }
        ++rank;
    }
    return rank;
}

std::string vec_str(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string labels_str(const std::vector<int>& labs) {
    std::string s = "{";
    for (std::size_t i = 0; i < labs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(labs[i]);
    }
    return s + "}";
}

}  // namespace

CharacterMap::CharacterMap(std::int64_t p_, int m_, std::vector<std::vector<std::int64_t>> w)
    : p(p_), m(m_), weights(std::move(w)) {
    if (!is_prime(p)) throw UnsupportedInputError("CharacterMap: p must be prime");
    if (m < 1) throw UnsupportedInputError("CharacterMap: rank must be >= 1");
    for (auto& vec : weights) {
        if (static_cast<int>(vec.size()) != m)
            throw ParseError("CharacterMap: weight vector of wrong rank");
        for (auto& e : vec) e = mod_p(e, p);
    }
}

std::int64_t CharacterMap::group_order() const {
    std::int64_t o = 1;
    for (int i = 0; i < m; ++i) o *= p;
    return o;
}

bool CharacterMap::surjective() const {
    return rank_mod_p(weights, p) == m;
}

bool CharacterMap::sum_is_zero() const {
    for (int k = 0; k < m; ++k) {
        std::int64_t s = 0;
        for (const auto& w : weights) s += w[k];
        if (mod_p(s, p) != 0) return false;
    }
    return true;
}

std::int64_t CharacterRow::sum() const {
    return std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
}

bool CharacterRow::all_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](std::int64_t e) { return e == 0; });
}

std::string CharacterRow::str() const { return vec_str(entries); }

std::vector<std::int64_t> weight_profile(const CharacterRow& row) {
    std::vector<std::int64_t> counts(row.p, 0);
    for (std::int64_t e : row.entries) ++counts[mod_p(e, row.p)];
    return counts;
}

CharacterMap ceva_character() {
    return CharacterMap(5, 2,
                        {{1, 1}, {1, 0}, {1, 1}, {3, 3}, {3, 0}, {0, 1}, {0, 1}, {0, 2}, {1, 1}});
}

ValidationReport validate_character(const CharacterMap& c, const Arrangement& arr) {
    if (static_cast<int>(c.weights.size()) != arr.line_count())
        throw ValidationError("validate_character: weight count " +
                              std::to_string(c.weights.size()) + " != line count " +
                              std::to_string(arr.line_count()));

    ValidationReport rep;
    rep.surjective = c.surjective();
    if (!rep.surjective)
        rep.issues.push_back({"surjectivity", "line weights do not span (Z/p)^m"});

    rep.sum_zero = c.sum_is_zero();
    if (!rep.sum_zero)
        rep.issues.push_back({"sum-zero", "total branch weight is nonzero mod p"});

    rep.all_lines_branched = true;
    for (int r = 1; r <= arr.line_count(); ++r) {
        const auto& w = c.weight(r);
        if (std::all_of(w.begin(), w.end(), [](std::int64_t e) { return e == 0; })) {
            rep.all_lines_branched = false;
            rep.issues.push_back({"branched-lines", "line " + std::to_string(r) + " has weight 0"});
        }
    }

    // Smoothness of the induced cover at every node of the branch divisor in
    // the blown-up plane. At a blown-up multiple point the exceptional curve
    // carries the sum of the incident line weights; at a simple double point
    // the two lines cross each other directly.
    rep.nodes_smooth = true;
    auto check_node = [&](const std::vector<std::int64_t>& w1, const std::vector<std::int64_t>& w2,
                          const std::string& where) {
        ++rep.nodes_checked;
        if (rank_mod_p({w1, w2}, c.p) != 2) {
            rep.nodes_smooth = false;
            rep.issues.push_back({"node-smoothness", "node " + where + ": weights " + vec_str(w1) +
                                                         " and " + vec_str(w2) +
                                                         " do not generate a subgroup of order p^2"});
        }
    };
    for (const auto& pt : arr.intersection_points()) {
        if (pt.multiplicity() >= 3) {
            std::vector<std::int64_t> exc(c.m, 0);
            for (int l : pt.lines)
                for (int k = 0; k < c.m; ++k) exc[k] = mod_p(exc[k] + c.weight(l)[k], c.p);
            for (int l : pt.lines)
                check_node(c.weight(l), exc,
                           "(line " + std::to_string(l) + ", exceptional over " +
                               labels_str(pt.lines) + ")");
        } else {
            check_node(c.weight(pt.lines[0]), c.weight(pt.lines[1]),
                       "(lines " + labels_str(pt.lines) + ")");
        }
    }
    return rep;
}

QuotientFamily quotient_rows(const CharacterMap& c) {
    const std::int64_t p = c.p;
    const int m = c.m;

    // All canonical characters: first nonzero entry 1, colexicographic order.
    std::vector<std::vector<std::int64_t>> chars;
    std::vector<std::int64_t> current(m, 0);
    auto emit = [&](auto&& self, int pos) -> void {
        if (pos == m) {
            auto first = std::find_if(current.begin(), current.end(),
                                      [](std::int64_t e) { return e != 0; });
            if (first != current.end() && *first == 1) chars.push_back(current);
            return;
        }
        for (std::int64_t v = 0; v < p; ++v) {
            current[pos] = v;
            self(self, pos + 1);
        }
        current[pos] = 0;
    };
    emit(emit, 0);
    std::sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    QuotientFamily fam;
    fam.p = p;
    fam.m = m;
    for (const auto& chi : chars) {
        QuotientSubgroup sub;
        sub.character = chi;
        if (m == 2) {
            // Kernel of chi, generated by (-chi2, chi1), scaled so the last
            // nonzero entry is 1.
            std::vector<std::int64_t> gen{mod_p(-chi[1], p), chi[0]};
            std::int64_t last = gen[1] != 0 ? gen[1] : gen[0];
            std::int64_t scale = 1;
            std::int64_t inv = 1;  // last^(p-2) mod p
            for (std::int64_t e = p - 2; e > 0; --e) inv = inv * last % p;
            scale = inv;
            gen[0] = mod_p(gen[0] * scale, p);
            gen[1] = mod_p(gen[1] * scale, p);
            sub.generator = gen;
        }
        CharacterRow base;
        base.p = p;
        for (const auto& w : c.weights) {
            std::int64_t e = 0;
            for (int k = 0; k < m; ++k) e += chi[k] * w[k];
            base.entries.push_back(mod_p(e, p));
        }
        for (std::int64_t t = 1; t < p; ++t) {
            CharacterRow row;
            row.p = p;
            for (std::int64_t e : base.entries) row.entries.push_back(mod_p(t * e, p));
            sub.rows.push_back(std::move(row));
        }
        // Canonical representative: minimal total degree, tie-break by the
        // smallest first nonzero entry.
        auto key = [](const CharacterRow& r) {
            std::int64_t lead = 0;
            for (std::int64_t e : r.entries)
                if (e != 0) {
                    lead = e;
                    break;
                }
            return std::make_pair(r.sum(), lead);
        };
        sub.canonical_row = *std::min_element(
            sub.rows.begin(), sub.rows.end(),
            [&key](const CharacterRow& a, const CharacterRow& b) { return key(a) < key(b); });
        fam.subgroups.push_back(std::move(sub));
    }
    return fam;
}

std::vector<CharacterRow> QuotientFamily::all_rows() const {
    std::vector<CharacterRow> out;
    for (const auto& s : subgroups) out.insert(out.end(), s.rows.begin(), s.rows.end());
    return out;
}

std::string character_to_json(const CharacterMap& c) {
    nlohmann::json doc;
    doc["p"] = c.p;
    doc["m"] = c.m;
    doc["weights"] = c.weights;
    return doc.dump(2) + "\n";
}

CharacterMap character_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("character: malformed JSON: ") + e.what());
    }
    if (!doc.contains("p") || !doc.contains("m") || !doc.contains("weights"))
        throw ParseError("character: need fields p, m, weights");
    if (!doc["p"].is_number_integer() || !doc["m"].is_number_integer() ||
        !doc["weights"].is_array())
        throw ParseError("character: malformed fields");
    return CharacterMap(doc["p"].get<std::int64_t>(), doc["m"].get<int>(),
                        doc["weights"].get<std::vector<std::vector<std::int64_t>>>());
}

}  // namespace abelcover

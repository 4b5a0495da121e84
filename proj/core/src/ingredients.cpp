#include "semitoric/ingredients.hpp"

namespace semitoric {

ValidationReport validate(const IngredientList& l) {
    ValidationReport rep;
    auto push = [&rep](int item, bool ok, std::string witness) {
        rep.items.push_back({item, ok, std::move(witness)});
        rep.ok = rep.ok && ok;
    };

    // (i) m_f and list lengths
    {
        bool ok = l.series.size() == l.m_f && l.heights.size() == l.m_f &&
                  l.polygon.base.complexity() == l.m_f && l.polygon.indices.size() == l.m_f;
        push(1, ok, ok ? "" : "list lengths disagree with m_f");
    }
    // (ii) normalized series
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < l.series.size(); ++i) {
            if (!l.series[i].normalized()) {
                ok = false;
                w = "series " + std::to_string(i) + ": sigma2 = " +
                    rat_to_string(l.series[i].sigma2()) + " outside [0, 2pi)";
                break;
            }
        }
        push(2, ok, w);
    }
    // (iii) Delzant semitoric polygon of complexity m_f
    {
        DelzantReport dr = delzant_semitoric_report(l.polygon.base);
        push(3, dr.ok, dr.ok ? "" : dr.failure);
    }
    // (iv) heights strictly between 0 and the slice length
    {
        bool ok = true;
        std::string w;
        for (size_t j = 0; j < l.heights.size() && j < l.polygon.base.complexity(); ++j) {
            bool hok = false;
            try {
                hok = validate_height(l.polygon.base, j, l.heights[j]);
            } catch (const Error&) {
                hok = false;
            }
            if (!hok) {
                ok = false;
                w = "h_" + std::to_string(j + 1) + " = " + rat_to_string(l.heights[j]) +
                    " not strictly inside its slice";
                break;
            }
        }
        push(4, ok, w);
    }
    // (v) one twisting index per cut
    {
        bool ok = l.polygon.indices.size() == l.m_f;
        push(5, ok, ok ? "" : "twisting index count differs from m_f");
    }
    return rep;
}

bool is_valid(const IngredientList& l) { return validate(l).ok; }

std::vector<Node> nodes(const IngredientList& l) {
    if (!is_valid(l)) fail(ErrorCode::InvalidIngredients, "nodes of an invalid list");
    std::vector<Node> out;
    for (size_t j = 0; j < l.m_f; ++j) {
        VerticalSlice s = l.polygon.base.polygon.vertical_slice(l.polygon.base.lines[j]);
        Pt c{l.polygon.base.lines[j], l.heights[j] + s.bottom.y};
        if (!l.polygon.base.polygon.interior_contains(c))
            fail(ErrorCode::InvalidIngredients, "node " + pt_to_string(c) + " not interior");
        out.push_back({j, c});
    }
    return out;
}

bool isomorphic(const IngredientList& a, const IngredientList& b) {
    if (!is_valid(a) || !is_valid(b))
        fail(ErrorCode::InvalidIngredients, "isomorphic on invalid lists");
    if (a.m_f != b.m_f) return false;
    for (size_t i = 0; i < a.m_f; ++i)
        if (!a.series[i].equal_up_to_common_order(b.series[i])) return false;
    if (a.heights != b.heights) return false;
    return pondered_orbits_equal(a.polygon, b.polygon);
}

bool predicted_compactness(const IngredientList& l) {
    if (!is_valid(l)) fail(ErrorCode::InvalidIngredients, "compactness of an invalid list");
    return l.polygon.base.polygon.is_compact();
}

} // namespace semitoric

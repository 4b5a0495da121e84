#pragma once

#include <string>
#include <vector>

#include "semitoric/taylor.hpp"
#include "semitoric/weighted_polygon.hpp"

namespace semitoric {

// The five-item classifying record: m_f, Taylor series, a pondered weighted
// polygon representative, and the heights.
struct IngredientList {
    size_t m_f;
    std::vector<TaylorSeries2> series;
    PonderedWeightedPolygon polygon;
    std::vector<Rational> heights;

    bool operator==(const IngredientList&) const = default;
};

struct Node {
    size_t j;
    Pt c;
};

struct ItemResult {
    int item; // 1..5
    bool ok;
    std::string witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ItemResult> items;

    const ItemResult* first_failure() const {
        for (const auto& it : items)
            if (!it.ok) return &it;
        return nullptr;
    }
};

ValidationReport validate(const IngredientList& l);
bool is_valid(const IngredientList& l);

// c_j = (lambda_j, h_j + bottom of the slice), strictly interior.
std::vector<Node> nodes(const IngredientList& l);

// Classification-theorem decision procedure on ingredient lists.
bool isomorphic(const IngredientList& a, const IngredientList& b);

bool predicted_compactness(const IngredientList& l);

} // namespace semitoric

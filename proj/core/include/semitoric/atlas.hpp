#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitoric/ingredients.hpp"

namespace semitoric {

enum class ChartModel { Regular, Elliptic, EllipticElliptic, FocusFocus, CutChart };
const char* chart_model_name(ChartModel m);

// Rational axis-aligned box, used as the atlas window for unbounded polygons.
struct WindowBox {
    Rational x0, x1, y0, y1;

    bool contains(const Pt& p) const {
        return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
    }
    WindowBox inset(const Rational& m) const { return {x0 + m, x1 - m, y0 + m, y1 - m}; }
};

// One open set of the cover. The frame maps model coordinates onto the
// working plane; for cut charts the working plane is the unfolded polygon
// t_j(Delta) and the real footprint is pulled back through t_j.
struct Chart {
    int id = 0;
    Pt center;
    Rational rho;
    AffineMapZ frame;
    ChartModel model = ChartModel::Regular;
    ChartModel unfolded = ChartModel::Regular; // meaningful for cut charts
    std::optional<size_t> cut;                 // cut index for cut charts
    bool partial = false;

    // real-plane footprint, one or two convex CCW pieces
    std::vector<std::vector<Pt>> footprint;

    bool is_cut() const { return cut.has_value(); }
    ChartModel effective_model() const { return is_cut() ? unfolded : model; }
};

enum class CaseTag { RR, RE, REE, EE, EEE, FFR };
const char* case_tag_name(CaseTag t);

struct Transition {
    int source = 0;
    int target = 0;
    CaseTag tag = CaseTag::RR;
    AffineMapZ frame_delta; // source model coords -> target model coords
    BigInt shear_k;         // EE / EEE decomposition
    Pt translation;         // horizontal vector (u1, 0) for EE / EEE
    bool horizontal_axis = true; // EEE: which axis carries the shared edge
    std::optional<AffineMapZ> ff_affine; // FFR bookkeeping R_b^-1 R_a T^{k_j}
};

struct ModelCensus {
    int regular = 0;
    int elliptic = 0;
    int elliptic_elliptic = 0;
    int focus_focus = 0;
    int cut_charts = 0;

    bool operator==(const ModelCensus&) const = default;
};

struct CocycleResult {
    bool ok = true;
    std::string witness; // first failing triple, if any
    size_t triples_checked = 0;
};

struct AtlasCertificate {
    IngredientList source;           // all-plus representative
    std::optional<WindowBox> window;
    Rational rho;                    // effective, uniform
    std::vector<Chart> charts;
    std::vector<Transition> transitions;
    bool coverage_ok = false;
    bool cocycle_ok = false;
    bool special_disjoint = false;
    bool census_ok = false;
    ModelCensus census;
    int max_overlap_depth = 0;
    std::string failure;

    bool ok() const { return coverage_ok && cocycle_ok && special_disjoint && census_ok; }
};

struct CompactnessReport {
    bool polygon_compact = false;
    bool atlas_finite_windowless = false;
    bool consistent = false;
};

// rho selection: a quarter of the smallest Chebyshev separation between
// special points, together with node-to-boundary clearances.
Rational choose_rho(const IngredientList& l);

std::vector<Chart> build_cover(const IngredientList& l,
                               const std::optional<WindowBox>& window = std::nullopt);

// Re-derives every cut chart's unfolded model inside t_j(Delta) and checks
// the cuts are covered.
void unfold_cuts(const IngredientList& l, std::vector<Chart>& charts);

std::vector<Transition> transitions(const std::vector<Chart>& charts,
                                    const IngredientList& l);

CocycleResult verify_cocycle(const std::vector<Chart>& charts,
                             const std::vector<Transition>& ts);

// Full pipeline with all certificate checks.
AtlasCertificate build_atlas(const IngredientList& l,
                             const std::optional<WindowBox>& window = std::nullopt);

// Re-runs the certificate checks from its own data, without rebuilding.
bool recheck(const AtlasCertificate& cert, std::string* why = nullptr);

CompactnessReport compactness_report(const IngredientList& l, const AtlasCertificate& cert);

} // namespace semitoric

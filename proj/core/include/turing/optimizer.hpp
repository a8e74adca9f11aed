#pragma once

// Deterministic lattice search over the convexity parameters (c, d).
//
// The two published searches step c and d along coupled arithmetic
// progressions; because every family objective splits as F(c, d) =
// F_c(c) + F_d(d), minimizing each axis independently is the same as
// minimizing over the Cartesian product of the two axis grids, and that
// product is what grid_minimize evaluates. Points outside the proven box
// 1 < c <= 5/4, 1/2 < d <= 1 are skipped and recorded, never clamped.

#include <turing/constants.hpp>

#include <string>
#include <variant>
#include <vector>

namespace turing {

enum class Coupling {
    stage1,  // c axis advances by c_step, d axis by 2*d_step
    stage2,  // both axes advance by their own step
    full_grid,     // Cartesian product with the steps as given
};

struct LatticeSpec {
    double c_start = 0.0;
    double d_start = 0.0;
    double c_step = 0.0;
    double d_step = 0.0;
    int count = 0;  // points per axis; the lattice has count^2 points
    Coupling coupling = Coupling::full_grid;
};

struct SearchRow {
    int index;  // lattice index (row-major over the product grid)
    double c, d;
    double a, b;
    std::optional<double> g;
    double objective;
};

struct SkippedPoint {
    int index;
    double c, d;
    std::string reason;
};

struct SearchResult {
    ConvexityParams best_params;
    double best_value;
    std::vector<SearchRow> table;      // lattice order, admissible points only
    std::vector<SkippedPoint> skipped; // table.size() + skipped.size() = count^2
};

struct ZetaContext {
    GrowthBound growth;
    double g_p;
};
struct DirichletContext {
    long conductor;
    double t2;
    double t0;
};
struct DedekindContext {
    DedekindShape shape;
    double t2;
    double t0;
};
using FamilyContext = std::variant<ZetaContext, DirichletContext, DedekindContext>;

// Evaluates the family objective at every admissible lattice point.
// Ties break toward the smallest objective, then smallest d, then smallest c.
// Rows come back in lattice order regardless of how evaluation is scheduled.
SearchResult grid_minimize(Family family, const LatticeSpec& lattice, const FamilyContext& ctx,
                           const QuadratureSpec& spec = {}, int threads = 1);

// Full-grid pass over the admissible part of the box seed +- radius, with the
// grid anchored at the seed (so the seed itself is always evaluated).
SearchResult refine(Family family, const ConvexityParams& seed, double radius, double step,
                    const FamilyContext& ctx, const QuadratureSpec& spec = {}, int threads = 1);

}  // namespace turing

#include <turing/optimizer.hpp>

#include <algorithm>
#include <cmath>
#include <thread>
#include <tuple>

namespace turing {

namespace {

struct LatticePoint {
    int index;
    double c, d;
};

std::vector<LatticePoint> product_lattice(const LatticeSpec& s) {
    if (s.count < 1) throw validation_error("grid_minimize: lattice is empty");
    const double d_stride = (s.coupling == Coupling::stage1) ? 2.0 * s.d_step : s.d_step;
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(s.count) * s.count);
    int index = 0;
    for (int i = 0; i < s.count; ++i) {
        const double c = s.c_start + i * s.c_step;
        for (int j = 0; j < s.count; ++j) {
            pts.push_back({index++, c, s.d_start + j * d_stride});
        }
    }
    return pts;
}

struct Evaluation {
    bool ok;
    SearchRow row;
    std::string reason;
};

Evaluation evaluate_point(Family family, const LatticePoint& pt, const FamilyContext& ctx,
                          const QuadratureSpec& spec) {
    Evaluation ev;
    ev.row.index = pt.index;
    ev.row.c = pt.c;
    ev.row.d = pt.d;
    if (!ConvexityParams::admissible(pt.c, pt.d)) {
        ev.ok = false;
        ev.reason = "outside the box 1 < c <= 5/4, 1/2 < d <= 1";
        return ev;
    }
    const ConvexityParams p{pt.c, pt.d};
    try {
        switch (family) {
            case Family::zeta: {
                const auto& z = std::get<ZetaContext>(ctx);
                const auto consts = zeta_constants(p, z.growth, spec);
                ev.row.a = consts.a;
                ev.row.b = consts.b;
                ev.row.objective = zeta_objective(consts, z.g_p);
                break;
            }
            case Family::dirichlet: {
                const auto& dc = std::get<DirichletContext>(ctx);
                const auto consts = dirichlet_constants(p, dc.t0, spec);
                ev.row.a = consts.a;
                ev.row.b = consts.b;
                ev.row.objective = dirichlet_budget(consts, dc.conductor, dc.t2);
                break;
            }
            case Family::dedekind: {
                const auto& dd = std::get<DedekindContext>(ctx);
                const auto consts = dedekind_constants(p, dd.t0, spec);
                ev.row.a = consts.a;
                ev.row.b = consts.b;
                ev.row.g = consts.g;
                ev.row.objective = dedekind_budget(consts, dd.shape, dd.t2);
                break;
            }
        }
    } catch (const convergence_error& e) {
        ev.ok = false;
        ev.reason = e.what();
        return ev;
    }
    ev.ok = true;
    return ev;
}

SearchResult search(Family family, const std::vector<LatticePoint>& pts,
                    const FamilyContext& ctx, const QuadratureSpec& spec, int threads) {
    if (std::holds_alternative<ZetaContext>(ctx) != (family == Family::zeta) ||
        std::holds_alternative<DirichletContext>(ctx) != (family == Family::dirichlet) ||
        std::holds_alternative<DedekindContext>(ctx) != (family == Family::dedekind))
        throw validation_error("grid_minimize: context does not match the family");
    if (pts.empty()) throw validation_error("grid_minimize: lattice is empty");

    std::vector<Evaluation> evals(pts.size());
    threads = std::clamp<int>(threads, 1,
                              std::max(1u, std::thread::hardware_concurrency()));
    if (threads <= 1 || pts.size() < 4) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            evals[i] = evaluate_point(family, pts[i], ctx, spec);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < pts.size(); i += threads)
                    evals[i] = evaluate_point(family, pts[i], ctx, spec);
            });
        }
        for (auto& th : pool) th.join();
    }

    SearchResult out;
    out.best_value = 0.0;
    bool have_best = false;
    for (const auto& ev : evals) {
        if (!ev.ok) {
            out.skipped.push_back({ev.row.index, ev.row.c, ev.row.d, ev.reason});
            continue;
        }
        out.table.push_back(ev.row);
        const auto key = std::make_tuple(ev.row.objective, ev.row.d, ev.row.c);
        if (!have_best ||
            key < std::make_tuple(out.best_value, out.best_params.d, out.best_params.c)) {
            have_best = true;
            out.best_value = ev.row.objective;
            out.best_params = ConvexityParams{ev.row.c, ev.row.d};
        }
    }
    if (!have_best)
        throw validation_error("grid_minimize: no admissible lattice point");
    return out;
}

}  // namespace

SearchResult grid_minimize(Family family, const LatticeSpec& lattice, const FamilyContext& ctx,
                           const QuadratureSpec& spec, int threads) {
    return search(family, product_lattice(lattice), ctx, spec, threads);
}

SearchResult refine(Family family, const ConvexityParams& seed, double radius, double step,
                    const FamilyContext& ctx, const QuadratureSpec& spec, int threads) {
    seed.validate();
    if (!(step > 0.0)) throw validation_error("refine: step must be positive");
    if (radius < 0.0) throw validation_error("refine: radius must be nonnegative");

    const int span = static_cast<int>(std::floor(radius / step + 1e-12));
    std::vector<double> cs, ds;
    for (int k = -span; k <= span; ++k) {
        const double c = seed.c + k * step;
        const double d = seed.d + k * step;
        if (c > 1.0 && c <= 1.25 + 1e-9) cs.push_back(c);
        if (d > 0.5 && d <= 1.0 + 1e-9) ds.push_back(d);
    }
    std::vector<LatticePoint> pts;
    pts.reserve(cs.size() * ds.size());
    int index = 0;
    for (double c : cs)
        for (double d : ds) pts.push_back({index++, c, d});
    return search(family, pts, ctx, spec, threads);
}

}  // namespace turing

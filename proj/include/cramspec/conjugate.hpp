#pragma once

/*
 * One-dimensional extended-real convex calculus on grids.
 *
 *   lf_transform   f*(a) = sup_x { a·x - f(x) }, evaluated over the sampled
 *                  grid points with finite value.  Two interchangeable
 *                  algorithms: a direct O(n·m) max (reference) and an
 *                  O(n+m) lower-hull merge (fast path).
 *   biconjugate    (f*)* on f's own grid; equals the lower convex envelope
 *                  of the samples, and equals f itself when f is convex.
 *   exp_conjugate  the conjugate of exp: c ln c - c for c > 0, 0 at c = 0,
 *                  +inf for c < 0.
 *   compose_with_exp_conjugate
 *                  (f o exp)*(a) = min_{alpha} { f*(alpha) - a ln alpha }
 *                                  + exp_conjugate(a)   for a > 0,
 *                  and min_{alpha >= 0} f*(alpha) at a = 0.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cramspec/extended_real.hpp"
#include "cramspec/grid_function.hpp"

namespace cramspec {

enum class lf_algorithm { fast, reference };

/// Conjugate values plus per-point metadata: `unreliable_edge[i]` is set when
/// the maximizer for dual point i landed on the first or last grid abscissa,
/// so the true supremum may lie outside the sampled window.
struct lf_result {
    grid_function fn;
    std::vector<bool> unreliable_edge;
};

namespace detail {

struct hull_point {
    double x;
    double y;
    std::size_t index; // position in the source grid
};

/// Lower convex hull of the finite samples, left to right.
/// Chord slopes between consecutive hull vertices strictly increase.
inline std::vector<hull_point> lower_hull(const grid_function& f) {
    std::vector<hull_point> h;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f.value(i).is_finite())
            continue;
        hull_point p{f.x(i), f.value(i).value(), i};
        while (h.size() >= 2) {
            const hull_point& a = h[h.size() - 2];
            const hull_point& b = h[h.size() - 1];
            // pop b unless it makes slopes strictly increase
            if ((b.y - a.y) * (p.x - b.x) < (p.y - b.y) * (b.x - a.x))
                break;
            h.pop_back();
        }
        h.push_back(p);
    }
    return h;
}

inline void require_increasing(const std::vector<double>& g, const char* who) {
    if (g.empty())
        throw std::invalid_argument(std::string(who) + ": empty dual grid");
    for (std::size_t i = 1; i < g.size(); ++i)
        if (!(g[i - 1] < g[i]))
            throw std::invalid_argument(std::string(who) + ": dual grid must be strictly increasing");
}

} // namespace detail

/// Discrete Legendre-Fenchel transform of a grid function, evaluated at
/// every point of `dual_grid`.  Infinite samples are skipped; a function
/// with no finite sample has an empty effective domain and is rejected.
inline lf_result lf_transform(const grid_function& f,
                              const std::vector<double>& dual_grid,
                              lf_algorithm algo = lf_algorithm::fast) {
    detail::require_increasing(dual_grid, "lf_transform");
    if (!f.finite_range())
        throw std::invalid_argument("empty effective domain");

    const std::size_t m = dual_grid.size();
    std::vector<extended_real> out(m);
    std::vector<bool> edge(m, false);

    if (algo == lf_algorithm::reference) {
        for (std::size_t k = 0; k < m; ++k) {
            const double a = dual_grid[k];
            double best = -std::numeric_limits<double>::infinity();
            std::size_t arg = 0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (!f.value(i).is_finite())
                    continue;
                double v = a * f.x(i) - f.value(i).value();
                if (v > best) {
                    best = v;
                    arg = i;
                }
            }
            out[k] = extended_real(best);
            edge[k] = (arg == 0 || arg + 1 == f.size());
        }
    } else {
        const auto hull = detail::lower_hull(f);
        std::size_t j = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const double a = dual_grid[k];
            while (j + 1 < hull.size() &&
                   a * hull[j + 1].x - hull[j + 1].y >= a * hull[j].x - hull[j].y)
                ++j;
            out[k] = extended_real(a * hull[j].x - hull[j].y);
            edge[k] = (hull[j].index == 0 || hull[j].index + 1 == f.size());
        }
    }

    if (m == 1) {
        // grid_function needs two points; duplicate the lone dual abscissa's
        // value at a padded point so callers still get a well-formed carrier.
        std::vector<double> xs{dual_grid[0], dual_grid[0] + 1.0};
        std::vector<extended_real> vs{out[0], out[0]};
        return lf_result{grid_function(std::move(xs), std::move(vs)), {edge[0], edge[0]}};
    }
    return lf_result{grid_function(dual_grid, std::move(out)), std::move(edge)};
}

/// Convenience: conjugate at a single dual point.
inline extended_real lf_transform_at(const grid_function& f, double a,
                                     lf_algorithm algo = lf_algorithm::fast) {
    return lf_transform(f, std::vector<double>{a}, algo).fn.value(0);
}

/// Result of a double conjugation.  When the input was not convex as a grid
/// function the returned values are its lower convex envelope and
/// `convex_envelope_warning` is set (never silently).
struct biconjugate_result {
    grid_function fn;
    bool convex_envelope_warning = false;
    std::string warning;
};

/// (f*)* on f's own grid.  Values outside the sampled effective domain stay
/// +inf; inside it the result is the lower convex envelope of the samples,
/// which reproduces f exactly when f is convex and lsc as a grid function.
inline biconjugate_result biconjugate(const grid_function& f) {
    auto fr = f.finite_range();
    if (!fr)
        throw std::invalid_argument("empty effective domain");
    const auto hull = detail::lower_hull(f);

    std::vector<extended_real> out(f.size(), extended_real::infinity());
    std::size_t seg = 0;
    for (std::size_t i = fr->first; i <= fr->second; ++i) {
        const double x = f.x(i);
        while (seg + 2 < hull.size() && hull[seg + 1].x <= x)
            ++seg;
        if (hull.size() == 1) {
            out[i] = extended_real(hull[0].y);
            continue;
        }
        const auto& a = hull[seg];
        const auto& b = hull[seg + 1];
        const double t = (x - a.x) / (b.x - a.x);
        out[i] = extended_real(a.y + t * (b.y - a.y));
    }

    biconjugate_result res{grid_function(f.grid(), std::move(out)), false, ""};
    if (!f.is_discretely_convex()) {
        res.convex_envelope_warning = true;
        res.warning = "biconjugate of non-convex input is the convex envelope";
    }
    return res;
}

/// exp*(c) = sup_t { c t - e^t }.
inline extended_real exp_conjugate(double c) {
    if (c < 0.0)
        return extended_real::infinity();
    if (c == 0.0)
        return extended_real(0.0);
    return extended_real(c * std::log(c) - c);
}

enum class minimizer_domain {
    positive,   // the minimum of f* is attained at a positive point
    nonnegative // alpha = 0 must be considered as well
};

namespace detail {

/// Golden-section minimum of a unimodal extended-real objective on [lo, hi],
/// refined to the given relative interval width.  Returns the best value seen.
template <class F>
double golden_min(F&& fn, double lo, double hi, double rel_width) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = fn(c), fd = fn(d);
    double best = std::min(fc, fd);
    const double span = std::max({1.0, std::abs(lo), std::abs(hi)});
    int guard = 0;
    while (b - a > rel_width * span && guard++ < 400) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
        best = std::min({best, fc, fd});
    }
    return best;
}

} // namespace detail

/// (f o exp)*(a) via the composition rule, for f convex, increasing and lsc
/// with conjugate f_star.  The inner minimum is searched over log(alpha) in
/// [log 1e-8, log 1e8]: a coarse scan locates the basin, golden-section
/// refines it (the objective is unimodal in log(alpha) for every conjugate
/// in scope).  a < 0 lies outside the conjugate's domain and yields +inf.
template <class FStar>
extended_real compose_with_exp_conjugate(FStar&& f_star, double a,
                                         minimizer_domain dom = minimizer_domain::positive) {
    if (a < 0.0)
        return extended_real::infinity();

    const double u_lo = std::log(1e-8), u_hi = std::log(1e8);
    auto objective = [&](double u) -> double {
        extended_real fs = f_star(std::exp(u));
        if (!fs.is_finite())
            return std::numeric_limits<double>::infinity();
        return a > 0.0 ? fs.value() - a * u : fs.value();
    };

    // coarse scan, then golden-section inside the bracketing cells
    constexpr int scan = 257;
    double best = std::numeric_limits<double>::infinity();
    int best_i = -1;
    for (int i = 0; i < scan; ++i) {
        double u = u_lo + (u_hi - u_lo) * double(i) / double(scan - 1);
        double v = objective(u);
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    extended_real min_pos = extended_real::infinity();
    if (best_i >= 0) {
        const double cell = (u_hi - u_lo) / double(scan - 1);
        double lo = u_lo + cell * double(std::max(0, best_i - 1));
        double hi = u_lo + cell * double(std::min(scan - 1, best_i + 1));
        double refined = detail::golden_min(objective, lo, hi, 1e-10);
        min_pos = extended_real(std::min(best, refined));
    }

    if (a == 0.0) {
        if (dom == minimizer_domain::nonnegative)
            min_pos = min(min_pos, f_star(0.0));
        return min_pos;
    }
    return min_pos + exp_conjugate(a);
}

} // namespace cramspec

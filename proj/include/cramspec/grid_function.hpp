#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cramspec/extended_real.hpp"

namespace cramspec {

/// An extended-real-valued convex function sampled on a strictly increasing
/// 1-D grid.  +inf entries are stored explicitly; a value of +inf at x means
/// x is outside the effective domain.  Carrier for every numeric conjugation
/// in the library.
class grid_function {
public:
    grid_function(std::vector<double> grid, std::vector<extended_real> values)
        : xs_(std::move(grid)), vs_(std::move(values)) {
        if (xs_.size() < 2)
            throw std::invalid_argument("grid_function: grid needs at least 2 points");
        if (xs_.size() != vs_.size())
            throw std::invalid_argument("grid_function: grid/value size mismatch");
        for (std::size_t i = 1; i < xs_.size(); ++i)
            if (!(xs_[i - 1] < xs_[i]))
                throw std::invalid_argument("grid_function: grid must be strictly increasing");
    }

    /// Samples a callable on a uniform grid of `count` points over [lo, hi].
    template <class F>
    static grid_function sample(F&& f, double lo, double hi, std::size_t count) {
        if (count < 2)
            throw std::invalid_argument("grid_function::sample: need at least 2 points");
        std::vector<double> xs(count);
        std::vector<extended_real> vs(count);
        const double step = (hi - lo) / double(count - 1);
        for (std::size_t i = 0; i < count; ++i) {
            xs[i] = (i + 1 == count) ? hi : lo + step * double(i);
            vs[i] = f(xs[i]);
        }
        return grid_function(std::move(xs), std::move(vs));
    }

    std::size_t size() const { return xs_.size(); }
    double x(std::size_t i) const { return xs_[i]; }
    extended_real value(std::size_t i) const { return vs_[i]; }
    const std::vector<double>& grid() const { return xs_; }
    const std::vector<extended_real>& values() const { return vs_; }

    /// Largest grid spacing; the resolution entering conjugation error bounds.
    double max_step() const {
        double s = 0.0;
        for (std::size_t i = 1; i < xs_.size(); ++i)
            s = std::max(s, xs_[i] - xs_[i - 1]);
        return s;
    }

    /// Index range [first, last] of finite values, if any.
    std::optional<std::pair<std::size_t, std::size_t>> finite_range() const {
        std::size_t first = xs_.size(), last = 0;
        for (std::size_t i = 0; i < vs_.size(); ++i) {
            if (vs_[i].is_finite()) {
                first = std::min(first, i);
                last = std::max(last, i);
            }
        }
        if (first == xs_.size())
            return std::nullopt;
        return std::make_pair(first, last);
    }

    /// True when the finite values occupy one contiguous index range
    /// (the grid witness of effective-domain convexity).
    bool has_contiguous_domain() const {
        auto r = finite_range();
        if (!r)
            return false;
        for (std::size_t i = r->first; i <= r->second; ++i)
            if (!vs_[i].is_finite())
                return false;
        return true;
    }

    /// Discrete convexity: contiguous domain and nondecreasing chord slopes
    /// over the finite range, up to `tol` per slope comparison.
    bool is_discretely_convex(double tol = 1e-12) const {
        if (!has_contiguous_domain())
            return false;
        auto [first, last] = *finite_range();
        double prev_slope = -std::numeric_limits<double>::infinity();
        for (std::size_t i = first; i + 1 <= last; ++i) {
            double slope = (vs_[i + 1].value() - vs_[i].value()) / (xs_[i + 1] - xs_[i]);
            if (slope < prev_slope - tol)
                return false;
            prev_slope = slope;
        }
        return true;
    }

    /// Two-column CSV (abscissa, value); +inf is written as the token `inf`.
    void to_csv(std::ostream& os) const {
        os << "x,value\n";
        char buf[64];
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", xs_[i]);
            os << buf << ',' << vs_[i].str() << '\n';
        }
    }

    static grid_function from_csv(std::istream& is) {
        std::vector<double> xs;
        std::vector<extended_real> vs;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty())
                continue;
            auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("grid_function: malformed CSV line '" + line + "'");
            std::string a = line.substr(0, comma);
            std::string b = line.substr(comma + 1);
            if (!b.empty() && b.back() == '\r')
                b.pop_back();
            if (a == "x") // header
                continue;
            xs.push_back(std::stod(a));
            vs.push_back(parse_extended_real(b));
        }
        return grid_function(std::move(xs), std::move(vs));
    }

private:
    std::vector<double> xs_;
    std::vector<extended_real> vs_;
};

} // namespace cramspec

#pragma once

/*
 * Nonnegative probability laws with closed-form transform calculus:
 *
 *   Exponential(mu):   M(t) = mu/(mu - t) for t < mu, +inf otherwise
 *                      cramer(a) = mu a - ln(mu a) - 1            (a > 0)
 *                      (cgf o exp)*(a) = a ln(mu a) - (a+1)ln(a+1) (a > 0)
 *                      ((cgf)* o exp)*(a) = (a+1)ln(a+1) - a ln mu - a
 *   Poisson(mu):       ln M(t) = mu(e^t - 1)
 *                      cramer(a) = mu - a + a ln(a/mu) (a > 0), mu at a = 0
 *   FiniteDiscrete(p): ln M(t) = ln sum p_n e^{nt}; cramer computed
 *                      numerically on [0, N] with -ln p_0 / -ln p_N at the
 *                      endpoints.
 *
 * Everything is immutable after construction and safe to share across
 * threads.
 */

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cramspec/conjugate.hpp"
#include "cramspec/extended_real.hpp"
#include "cramspec/grid_function.hpp"

namespace cramspec {

namespace detail {

/// log(sum exp(terms)) with the usual max shift; empty sum -> -inf.
inline double log_sum_exp(const std::vector<double>& terms) {
    double m = -std::numeric_limits<double>::infinity();
    for (double t : terms)
        m = std::max(m, t);
    if (!std::isfinite(m))
        return m;
    double s = 0.0;
    for (double t : terms)
        s += std::exp(t - m);
    return m + std::log(s);
}

} // namespace detail

/// Moments EX^n of a nonnegative law, held in log space so large orders
/// never overflow (the sign is always +).
class moment_sequence {
public:
    explicit moment_sequence(std::vector<double> log_moments)
        : log_moments_(std::move(log_moments)) {}

    int max_order() const { return int(log_moments_.size()) - 1; }

    /// ln EX^n; -inf when the moment is exactly zero.
    double log_moment(int n) const { return log_moments_.at(std::size_t(n)); }

    /// EX^n; may round to +inf for very large orders.
    double moment(int n) const { return std::exp(log_moment(n)); }

private:
    std::vector<double> log_moments_;
};

class distribution {
public:
    enum class kind_t { exponential, poisson, finite_discrete };

    static distribution exponential(double rate) {
        if (!(rate > 0.0))
            throw std::invalid_argument("exponential: rate must be positive");
        distribution d;
        d.kind_ = kind_t::exponential;
        d.mu_ = rate;
        return d;
    }

    static distribution poisson(double mean) {
        if (!(mean > 0.0))
            throw std::invalid_argument("poisson: mean must be positive");
        distribution d;
        d.kind_ = kind_t::poisson;
        d.mu_ = mean;
        return d;
    }

    static distribution finite_discrete(std::vector<double> p) {
        if (p.empty())
            throw std::invalid_argument("finite_discrete: empty pmf");
        double sum = 0.0;
        for (double v : p) {
            if (v < 0.0)
                throw std::invalid_argument("finite_discrete: negative probability");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("finite_discrete: probabilities must sum to 1");
        distribution d;
        d.kind_ = kind_t::finite_discrete;
        d.p_ = std::move(p);
        return d;
    }

    kind_t kind() const { return kind_; }
    bool is_discrete() const { return kind_ != kind_t::exponential; }
    double mu() const { return mu_; }
    const std::vector<double>& pmf() const { return p_; }

    double mean() const {
        switch (kind_) {
        case kind_t::exponential: return 1.0 / mu_;
        case kind_t::poisson: return mu_;
        default: {
            double m = 0.0;
            for (std::size_t j = 0; j < p_.size(); ++j)
                m += double(j) * p_[j];
            return m;
        }
        }
    }

    /// P(X = 0); enters the zero-measure clause of the pgf-side conjugate.
    double p0() const {
        switch (kind_) {
        case kind_t::exponential:
            throw std::invalid_argument("p0: law is not discrete");
        case kind_t::poisson: return std::exp(-mu_);
        default: return p_[0];
        }
    }

    /// Convergence radius R of the moment-generating series.
    extended_real mgf_radius() const {
        return kind_ == kind_t::exponential ? extended_real(mu_)
                                            : extended_real::infinity();
    }

    /// Whether M(t) -> +inf as t -> R^-; required by the moment-form
    /// entropy minimization.  False only for a point mass at zero.
    bool mgf_blows_up_at_radius() const {
        if (kind_ == kind_t::finite_discrete)
            return mean() > 0.0;
        return true;
    }

    /// Convergence radius of the probability-generating function.
    extended_real pgf_radius() const {
        if (!is_discrete())
            throw std::invalid_argument("pgf_radius: law is not discrete");
        return extended_real::infinity();
    }

    /// M(t) = E e^{tX}; +inf is an ordinary value.
    extended_real mgf(double t) const {
        extended_real c = cgf(t);
        if (!c.is_finite())
            return extended_real::infinity();
        return extended_real(std::exp(c.value()));
    }

    /// ln M(t), computed directly in log space.
    extended_real cgf(double t) const {
        switch (kind_) {
        case kind_t::exponential:
            if (t >= mu_)
                return extended_real::infinity();
            return extended_real(std::log(mu_) - std::log(mu_ - t));
        case kind_t::poisson:
            return extended_real(mu_ * std::expm1(t));
        default: {
            std::vector<double> terms;
            terms.reserve(p_.size());
            for (std::size_t n = 0; n < p_.size(); ++n)
                if (p_[n] > 0.0)
                    terms.push_back(std::log(p_[n]) + double(n) * t);
            return extended_real(detail::log_sum_exp(terms));
        }
        }
    }

    /// The cumulant generating function sampled on the library's standard
    /// conjugation grid: t in [-20, R - 1e-6] (or [-20, 20] when R = +inf),
    /// 20001 points.
    grid_function sample_cgf() const {
        const double hi = kind_ == kind_t::exponential ? mu_ - 1e-6 : 20.0;
        return grid_function::sample([this](double t) { return cgf(t); }, -20.0, hi,
                                     cgf_grid_points);
    }

    /// Cramer transform (ln M)*(a): the large-deviations rate function.
    extended_real cramer_transform(double a) const {
        switch (kind_) {
        case kind_t::exponential:
            if (a <= 0.0)
                return extended_real::infinity();
            return extended_real(mu_ * a - std::log(mu_ * a) - 1.0);
        case kind_t::poisson:
            if (a < 0.0)
                return extended_real::infinity();
            if (a == 0.0)
                return extended_real(mu_);
            return extended_real(mu_ - a + a * std::log(a / mu_));
        default: {
            const double support_max = double(p_.size() - 1);
            if (a < 0.0 || a > support_max)
                return extended_real::infinity();
            if (a == 0.0)
                return extended_real(-std::log(p_.front()));
            if (a == support_max)
                return extended_real(-std::log(p_.back()));
            return lf_transform_at(sample_cgf(), a);
        }
        }
    }

    /// (ln M o exp)*(a): closed form for the exponential law, the
    /// composition rule over the Cramer transform otherwise.
    extended_real cgf_exp_conjugate(double a) const {
        if (a < 0.0)
            return extended_real::infinity();
        if (a == 0.0)
            return extended_real(0.0);
        if (kind_ == kind_t::exponential)
            return extended_real(a * std::log(mu_ * a) - (a + 1.0) * std::log(a + 1.0));
        if (mean() == 0.0)
            throw std::invalid_argument("cgf_exp_conjugate: law is identically zero");
        return compose_with_exp_conjugate(
            [this](double alpha) { return cramer_transform(alpha); }, a,
            minimizer_domain::positive);
    }

    /// ((ln M)* o exp)*(a) on [0, +inf); closed form for the exponential
    /// law, numeric double conjugation otherwise.
    extended_real cramer_star_exp_conjugate(double a) const {
        if (a < 0.0)
            return extended_real::infinity();
        if (kind_ == kind_t::exponential)
            return extended_real((a + 1.0) * std::log(a + 1.0) - a * std::log(mu_) - a);
        auto composed = grid_function::sample(
            [this](double t) { return cramer_transform(std::exp(t)); }, -20.0, 20.0,
            cgf_grid_points);
        return lf_transform_at(composed, a);
    }

    /// EX^0..EX^{n_max} in log space.  Poisson moments use the Touchard
    /// recurrence EX^{n+1} = mu * sum_k C(n,k) EX^k, which is exact.
    moment_sequence moments(int n_max) const {
        if (n_max < 0)
            throw std::invalid_argument("moments: n_max must be >= 0");
        std::vector<double> lm(std::size_t(n_max) + 1);
        lm[0] = 0.0;
        switch (kind_) {
        case kind_t::exponential:
            for (int n = 1; n <= n_max; ++n)
                lm[std::size_t(n)] = std::lgamma(double(n) + 1.0) - double(n) * std::log(mu_);
            break;
        case kind_t::poisson: {
            const double log_mu = std::log(mu_);
            for (int n = 0; n < n_max; ++n) {
                std::vector<double> terms(std::size_t(n) + 1);
                for (int k = 0; k <= n; ++k) {
                    double log_binom = std::lgamma(double(n) + 1.0) -
                                       std::lgamma(double(k) + 1.0) -
                                       std::lgamma(double(n - k) + 1.0);
                    terms[std::size_t(k)] = log_binom + lm[std::size_t(k)];
                }
                lm[std::size_t(n) + 1] = log_mu + detail::log_sum_exp(terms);
            }
            break;
        }
        default:
            for (int n = 1; n <= n_max; ++n) {
                std::vector<double> terms;
                for (std::size_t j = 1; j < p_.size(); ++j)
                    if (p_[j] > 0.0)
                        terms.push_back(std::log(p_[j]) + double(n) * std::log(double(j)));
                lm[std::size_t(n)] = detail::log_sum_exp(terms);
            }
            break;
        }
        return moment_sequence(std::move(lm));
    }

    /// g(s) = sum p_n s^n for discrete laws; satisfies ln M(t) = ln g(e^t).
    extended_real pgf(double s) const {
        if (!is_discrete())
            throw std::invalid_argument("pgf requires a discrete law");
        if (s < 0.0)
            throw std::invalid_argument("pgf: s must be nonnegative");
        if (extended_real(s) >= pgf_radius())
            return extended_real::infinity();
        if (kind_ == kind_t::poisson)
            return extended_real(std::exp(mu_ * (s - 1.0)));
        double acc = 0.0;
        for (std::size_t n = p_.size(); n-- > 0;)
            acc = acc * s + p_[n];
        return extended_real(acc);
    }

    /// {"kind": "exponential"|"poisson"|"finite", "mu": x | "p": [..]}
    static distribution from_json(const nlohmann::json& j) {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "exponential")
            return exponential(j.at("mu").get<double>());
        if (kind == "poisson")
            return poisson(j.at("mu").get<double>());
        if (kind == "finite")
            return finite_discrete(j.at("p").get<std::vector<double>>());
        throw std::invalid_argument("distribution: unknown kind '" + kind + "'");
    }

    nlohmann::json to_json() const {
        switch (kind_) {
        case kind_t::exponential: return {{"kind", "exponential"}, {"mu", mu_}};
        case kind_t::poisson: return {{"kind", "poisson"}, {"mu", mu_}};
        default: return {{"kind", "finite"}, {"p", p_}};
        }
    }

    static constexpr std::size_t cgf_grid_points = 20001;

private:
    distribution() = default;

    kind_t kind_ = kind_t::exponential;
    double mu_ = 1.0;
    std::vector<double> p_;
};

} // namespace cramspec

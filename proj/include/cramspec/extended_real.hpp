#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace cramspec {

/// A real number extended with +infinity.  Negative infinity is excluded:
/// none of the conjugates computed by this library can take the value -inf,
/// so constructing one is treated as a logic error.  Arithmetic is total
/// (x + inf = inf) and the order is total with +inf maximal.
class extended_real {
public:
    extended_real() : v_(0.0) {}

    extended_real(double v) : v_(v) {
        if (std::isnan(v))
            throw std::invalid_argument("extended_real: NaN is not a value");
        if (v == -std::numeric_limits<double>::infinity())
            throw std::invalid_argument("extended_real: -inf is not a value");
    }

    static extended_real infinity() {
        extended_real r;
        r.v_ = std::numeric_limits<double>::infinity();
        return r;
    }

    bool is_finite() const { return std::isfinite(v_); }
    bool is_infinite() const { return std::isinf(v_); }

    /// Underlying double; +inf when infinite.
    double value() const { return v_; }

    /// Finite value or throw.
    double finite_value() const {
        if (!is_finite())
            throw std::domain_error("extended_real: value is +inf");
        return v_;
    }

    friend extended_real operator+(extended_real a, extended_real b) {
        extended_real r;
        r.v_ = a.v_ + b.v_; // inf absorbs; no -inf so no inf - inf
        return r;
    }
    friend extended_real operator-(extended_real a, double b) {
        extended_real r;
        r.v_ = a.v_ - b;
        return r;
    }
    extended_real& operator+=(extended_real b) {
        v_ += b.v_;
        return *this;
    }

    friend auto operator<=>(extended_real a, extended_real b) {
        return a.v_ <=> b.v_;
    }
    friend bool operator==(extended_real a, extended_real b) {
        return a.v_ == b.v_;
    }

    friend extended_real min(extended_real a, extended_real b) {
        return a.v_ < b.v_ ? a : b;
    }
    friend extended_real max(extended_real a, extended_real b) {
        return a.v_ < b.v_ ? b : a;
    }

    /// "inf" for +infinity, shortest-round-trip decimal otherwise.
    std::string str() const;

private:
    double v_;
};

inline std::string extended_real::str() const {
    if (is_infinite())
        return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v_);
    return buf;
}

/// Parses the token produced by str(); accepts "inf" for +infinity.
inline extended_real parse_extended_real(const std::string& tok) {
    if (tok == "inf" || tok == "+inf" || tok == "Inf" || tok == "INF")
        return extended_real::infinity();
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size())
        throw std::invalid_argument("extended_real: cannot parse '" + tok + "'");
    return extended_real(v);
}

} // namespace cramspec

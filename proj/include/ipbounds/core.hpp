#pragma once

// Core types for inner-product-space computations: complex vectors,
// weighted spaces, scalar band / vector ball hypothesis objects, chain
// reports and the shared tolerance policy.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ipb {

using Scalar = std::complex<double>;

inline double re(const Scalar& z) { return z.real(); }
inline double im(const Scalar& z) { return z.imag(); }
inline double abs2(const Scalar& z) { return z.real() * z.real() + z.imag() * z.imag(); }

// An inequality "lhs <= rhs" passes iff lhs <= rhs + abs + rel*max(1,|lhs|,|rhs|).
// The bounds are exact in R; the slack absorbs rounding only.
struct Tol {
    double abs = 1e-12;
    double rel = 1e-9;

    double slack(double lhs, double rhs) const {
        return abs + rel * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    }
    bool leq(double lhs, double rhs) const { return lhs <= rhs + slack(lhs, rhs); }
    bool geq(double lhs, double rhs) const { return leq(rhs, lhs); }
    bool near(double a, double b) const { return leq(a, b) && leq(b, a); }
};

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t d) : c_(d, Scalar{0.0, 0.0}) {}
    Vec(std::initializer_list<Scalar> init) : c_(init) {}
    explicit Vec(std::vector<Scalar> c) : c_(std::move(c)) {}

    static Vec real(std::initializer_list<double> init) {
        Vec v;
        v.c_.reserve(init.size());
        for (double x : init) v.c_.emplace_back(x, 0.0);
        return v;
    }

    std::size_t dim() const { return c_.size(); }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Scalar>& components() const { return c_; }

    Vec& operator+=(const Vec& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vec& operator*=(const Scalar& s) {
        for (auto& z : c_) z *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
    friend Vec operator*(Vec v, const Scalar& s) { return v *= s; }
    friend Vec operator*(double s, Vec v) { return v *= Scalar{s, 0.0}; }
    friend Vec operator-(Vec v) { return v *= Scalar{-1.0, 0.0}; }

    bool finite() const {
        for (const auto& z : c_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
        return true;
    }

private:
    void require_same_dim(const Vec& o) const {
        if (c_.size() != o.c_.size()) throw std::invalid_argument("Vec: dimension mismatch");
    }
    std::vector<Scalar> c_;
};

using CoeffVec = std::vector<Scalar>;

enum class Mode { real, complex };

// Inner product <x,y> = sum_i w_i x_i conj(y_i); weights default to 1.
class IpSpace {
public:
    IpSpace() = default;
    explicit IpSpace(Mode m) : mode_(m) {}
    IpSpace(Mode m, std::vector<double> weights) : mode_(m), weights_(std::move(weights)) {
        for (double w : weights_)
            if (w < 0.0 || !std::isfinite(w)) throw std::invalid_argument("IpSpace: weights must be nonnegative");
    }

    Mode mode() const { return mode_; }
    bool weighted() const { return !weights_.empty(); }
    const std::vector<double>& weights() const { return weights_; }

    Scalar inner(const Vec& x, const Vec& y) const {
        if (x.dim() != y.dim()) throw std::invalid_argument("inner: dimension mismatch");
        if (weighted() && weights_.size() != x.dim())
            throw std::invalid_argument("inner: weight length mismatch");
        Scalar s{0.0, 0.0};
        for (std::size_t i = 0; i < x.dim(); ++i) {
            Scalar t = x[i] * std::conj(y[i]);
            if (weighted()) t *= weights_[i];
            s += t;
        }
        return s;
    }
    double norm2(const Vec& x) const { return std::max(0.0, re(inner(x, x))); }
    double norm(const Vec& x) const { return std::sqrt(norm2(x)); }

private:
    Mode mode_ = Mode::real;
    std::vector<double> weights_;
};

// Scalar pair (lo, hi) = (a, A), (phi, Phi), (gamma, Gamma), (m, M).
struct ScalarBand {
    Scalar lo{0.0, 0.0};
    Scalar hi{0.0, 0.0};

    Scalar sum() const { return lo + hi; }
    Scalar mid() const { return 0.5 * (lo + hi); }
    double width() const { return std::abs(hi - lo); }
    double re_product() const { return re(std::conj(lo) * hi); }
};

// Closed ball: either a center with radius, or endpoint form with
// center (lo+hi)/2 and radius ||hi-lo||/2.
struct VectorBall {
    Vec center;
    double radius = 0.0;

    static VectorBall from_center(Vec c, double r) {
        if (r < 0.0) throw std::invalid_argument("VectorBall: negative radius");
        return VectorBall{std::move(c), r};
    }
    static VectorBall from_endpoints(const IpSpace& space, const Vec& lo, const Vec& hi) {
        VectorBall b;
        b.center = 0.5 * (lo + hi);
        b.radius = 0.5 * space.norm(hi - lo);
        return b;
    }
    double diameter() const { return 2.0 * radius; }
};

struct Hypothesis {
    std::string name;
    bool holds = false;
    double slack = 0.0;
};

struct Term {
    std::string eq;
    double value = 0.0;
};

// Evaluated inequality chain: lhs <= rhs_chain[0] <= rhs_chain[1] <= ...
// Extra scalar diagnostics (identity residuals, cross-checks) go in extras.
struct ChainReport {
    std::string id;
    double lhs = 0.0;
    std::vector<Term> rhs_chain;
    std::vector<Hypothesis> hypotheses;
    std::vector<Term> extras;
    std::vector<std::string> notes;

    bool hypotheses_ok() const {
        for (const auto& h : hypotheses)
            if (!h.holds) return false;
        return true;
    }
    double rhs() const { return rhs_chain.empty() ? 0.0 : rhs_chain.front().value; }
    double gap() const { return rhs() - lhs; }
    double tightness() const {
        double r = rhs();
        if (r == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        return lhs / r;
    }
    bool holds(const Tol& tol = {}) const {
        if (rhs_chain.empty()) return true;
        return tol.leq(lhs, rhs_chain.front().value);
    }
    bool chain_monotone(const Tol& tol = {}) const {
        for (std::size_t i = 0; i + 1 < rhs_chain.size(); ++i)
            if (!tol.leq(rhs_chain[i].value, rhs_chain[i + 1].value)) return false;
        return true;
    }
    const Term* find(const std::string& eq) const {
        for (const auto& t : rhs_chain)
            if (t.eq == eq) return &t;
        for (const auto& t : extras)
            if (t.eq == eq) return &t;
        return nullptr;
    }
};

using Reports = std::vector<ChainReport>;

inline const ChainReport& report_by_id(const Reports& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.id == id) return r;
    throw std::out_of_range("no report with id " + id);
}

// --- basic operations -------------------------------------------------

struct BandCondition {
    bool holds = false;
    double slack = 0.0;      // Re<hi*y - x, x - lo*y>
    double ball_residual = 0.0;  // (1/2)|hi-lo|*||y|| - ||x - mid*y||
};

// Re<A y - x, x - a y> >= 0, equivalently ||x - (a+A)/2 y|| <= |A-a| ||y|| / 2.
// Both forms are computed; they agree in sign up to rounding.
inline BandCondition band_condition(const IpSpace& space, const ScalarBand& band, const Vec& x,
                                    const Vec& y, const Tol& tol = {}) {
    BandCondition out;
    out.slack = re(space.inner(band.hi * y - x, x - band.lo * y));
    double ny = space.norm(y);
    out.ball_residual = 0.5 * band.width() * ny - space.norm(x - band.mid() * y);
    double scale = std::max({1.0, space.norm2(x), abs2(band.hi) * ny * ny, abs2(band.lo) * ny * ny});
    out.holds = out.slack >= -tol.slack(0.0, scale);
    return out;
}

// Unit-vector form of the band condition: y = e with ||e|| = 1.
inline BandCondition band_condition_unit(const IpSpace& space, const ScalarBand& band, const Vec& x,
                                         const Vec& e, const Tol& tol = {}) {
    return band_condition(space, band, x, e, tol);
}

struct BallCondition {
    bool holds = false;
    double residual = 0.0;  // radius - ||x - center||
};

inline BallCondition ball_condition(const IpSpace& space, const VectorBall& ball, const Vec& x,
                                    const Tol& tol = {}) {
    BallCondition out;
    out.residual = ball.radius - space.norm(x - ball.center);
    double scale = std::max(1.0, space.norm(x) + space.norm(ball.center));
    out.holds = out.residual >= -tol.slack(0.0, scale);
    return out;
}

inline std::vector<Vec> forward_diff(const std::vector<Vec>& seq) {
    if (seq.size() < 2) throw std::invalid_argument("forward_diff: need at least two elements");
    std::vector<Vec> d;
    d.reserve(seq.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) d.push_back(seq[i + 1] - seq[i]);
    return d;
}

inline std::vector<Scalar> forward_diff(const CoeffVec& seq) {
    if (seq.size() < 2) throw std::invalid_argument("forward_diff: need at least two elements");
    std::vector<Scalar> d;
    d.reserve(seq.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) d.push_back(seq[i + 1] - seq[i]);
    return d;
}

// Partial sums P_i = sum_{k<=i} p_k and A_i(p) = sum_{k<=i} p_k a_k, with the
// complementary tails Pbar_i = P_n - P_i, Abar_i = A_n - A_i.
struct PrefixAggregates {
    std::vector<double> P;
    std::vector<double> Pbar;
    std::vector<Vec> A;
    std::vector<Vec> Abar;
};

inline PrefixAggregates prefix_aggregates(const std::vector<double>& p, const std::vector<Vec>& a) {
    if (p.size() != a.size()) throw std::invalid_argument("prefix_aggregates: length mismatch");
    if (p.empty()) throw std::invalid_argument("prefix_aggregates: empty input");
    PrefixAggregates out;
    const std::size_t n = p.size();
    out.P.resize(n);
    out.A.resize(n);
    double run = 0.0;
    Vec acc(a[0].dim());
    for (std::size_t i = 0; i < n; ++i) {
        run += p[i];
        acc += p[i] * a[i];
        out.P[i] = run;
        out.A[i] = acc;
    }
    out.Pbar.resize(n);
    out.Abar.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.Pbar[i] = out.P[n - 1] - out.P[i];
        out.Abar[i] = out.A[n - 1] - out.A[i];
    }
    return out;
}

class OrthonormalFamily {
public:
    OrthonormalFamily() = default;
    OrthonormalFamily(std::vector<Vec> vectors, IpSpace space, double tolerance = 1e-10)
        : vectors_(std::move(vectors)), space_(std::move(space)), tolerance_(tolerance) {
        if (!valid()) throw std::invalid_argument("OrthonormalFamily: vectors not orthonormal to tolerance");
    }

    bool valid() const {
        for (std::size_t i = 0; i < vectors_.size(); ++i)
            for (std::size_t j = i; j < vectors_.size(); ++j) {
                double target = (i == j) ? 1.0 : 0.0;
                if (std::abs(space_.inner(vectors_[i], vectors_[j]) - Scalar{target, 0.0}) > tolerance_)
                    return false;
            }
        return true;
    }

    std::size_t size() const { return vectors_.size(); }
    const Vec& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<Vec>& vectors() const { return vectors_; }
    const IpSpace& space() const { return space_; }
    double tolerance() const { return tolerance_; }

    Scalar coefficient(const Vec& x, std::size_t i) const { return space_.inner(x, vectors_[i]); }

    Vec combine(const CoeffVec& coeff) const {
        if (coeff.size() != vectors_.size())
            throw std::invalid_argument("OrthonormalFamily::combine: length mismatch");
        if (vectors_.empty()) throw std::invalid_argument("OrthonormalFamily::combine: empty family");
        Vec s(vectors_[0].dim());
        for (std::size_t i = 0; i < coeff.size(); ++i) s += coeff[i] * vectors_[i];
        return s;
    }

private:
    std::vector<Vec> vectors_;
    IpSpace space_;
    double tolerance_ = 1e-10;
};

struct GramSchmidtError : std::runtime_error {
    std::size_t index;
    GramSchmidtError(std::size_t i, const std::string& msg) : std::runtime_error(msg), index(i) {}
};

// Modified Gram-Schmidt with one re-orthogonalization pass.
// Throws GramSchmidtError with the offending index on rank deficiency.
inline OrthonormalFamily gram_schmidt(const IpSpace& space, const std::vector<Vec>& raw,
                                      double tol = 1e-10) {
    std::vector<Vec> basis;
    basis.reserve(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        Vec v = raw[k];
        double original = space.norm(v);
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& e : basis) v -= space.inner(v, e) * e;
        double nv = space.norm(v);
        if (nv <= tol * std::max(1.0, original))
            throw GramSchmidtError(k, "gram_schmidt: rank deficiency at index " + std::to_string(k));
        basis.push_back((1.0 / nv) * v);
    }
    return OrthonormalFamily(std::move(basis), space, 1e-12);
}

// Cauchy-Bunyakovsky-Schwarz deficit ||x||^2 ||y||^2 - |<x,y>|^2 >= 0.
inline double cbs_gap(const IpSpace& space, const Vec& x, const Vec& y) {
    return space.norm2(x) * space.norm2(y) - abs2(space.inner(x, y));
}

inline double sq(double x) { return x * x; }

// Clamps tiny negative radicands produced by rounding; the argument is
// nonnegative in exact arithmetic.
inline double safe_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

}  // namespace ipb

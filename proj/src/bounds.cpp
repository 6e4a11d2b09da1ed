#include "hcm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hcm/errors.hpp"
#include "hcm/lambert.hpp"

namespace hcm {

SparsitySetting SparsitySetting::triangle_free() { return {}; }
SparsitySetting SparsitySetting::ck_free(int k) {
    SparsitySetting s;
    s.kind = Kind::CkFree;
    s.k = k;
    s.validate();
    return s;
}
SparsitySetting SparsitySetting::triangle_count(double t) {
    SparsitySetting s;
    s.kind = Kind::TriangleCount;
    s.t = t;
    s.validate();
    return s;
}
SparsitySetting SparsitySetting::path_count(int k, double t) {
    SparsitySetting s;
    s.kind = Kind::PathCount;
    s.k = k;
    s.t = t;
    s.validate();
    return s;
}
SparsitySetting SparsitySetting::hall_ratio(double rho) {
    SparsitySetting s;
    s.kind = Kind::HallRatio;
    s.rho = rho;
    s.validate();
    return s;
}
SparsitySetting SparsitySetting::clique(int omega) {
    SparsitySetting s;
    s.kind = Kind::Clique;
    s.omega = omega;
    s.validate();
    return s;
}

void SparsitySetting::validate() const {
    switch (kind) {
        case Kind::TriangleFree:
            break;
        case Kind::CkFree:
            if (k < 3) throw regime_error("ck_free requires k >= 3");
            break;
        case Kind::TriangleCount:
            if (!(t >= 0.5)) throw regime_error("triangle_count requires t >= 1/2");
            break;
        case Kind::PathCount:
            if (k < 3) throw regime_error("path_count requires k >= 3");
            if (!(t >= 0.5)) throw regime_error("path_count requires t >= 1/2");
            break;
        case Kind::HallRatio:
            if (!(rho >= 1)) throw regime_error("hall_ratio requires rho >= 1");
            break;
        case Kind::Clique:
            if (omega < 3) throw regime_error("clique setting requires omega >= 3");
            break;
    }
}

double SparsitySetting::mad_exponent() const {
    switch (kind) {
        case Kind::TriangleFree:
            return 0.0;
        case Kind::CkFree:
            return k - 3.0;
        case Kind::TriangleCount:
            return std::sqrt(2.0 * t);
        case Kind::PathCount:
            return k - 3.0 + std::sqrt(2.0 * t);
        default:
            throw regime_error("no average-degree exponent for this setting");
    }
}

std::string SparsitySetting::name() const {
    switch (kind) {
        case Kind::TriangleFree:
            return "triangle-free";
        case Kind::CkFree:
            return "cycle-free";
        case Kind::TriangleCount:
            return "triangle-count";
        case Kind::PathCount:
            return "path-count";
        case Kind::HallRatio:
            return "hall-ratio";
        case Kind::Clique:
            return "clique";
    }
    return "?";
}

namespace {

// grid scan + golden-section refinement of a unimodal-enough objective on
// (eps_x, hi]; compares the refined interior point against the endpoints.
std::pair<double, double> maximize_on(double hi, const std::function<double(double)>& f) {
    const double eps_x = 1e-12;
    const int grid = 160;
    double best_x = hi, best_v = f(hi);
    for (int i = 0; i < grid; ++i) {
        // half log-spaced toward 0, half linear
        double x;
        if (i < grid / 2) {
            double frac = static_cast<double>(i + 1) / (grid / 2);
            x = hi * std::pow(eps_x / hi, 1.0 - frac);
        } else {
            x = hi * (i - grid / 2 + 1) / (grid - grid / 2);
        }
        if (x <= eps_x || x > hi) continue;
        double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double lo = std::max(eps_x, best_x * 0.5), hi2 = std::min(hi, best_x * 2.0);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi2;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b), vm = f(xm);
    if (vm > best_v) {
        best_v = vm;
        best_x = xm;
    }
    return {best_x, best_v};
}

}  // namespace

BoundResult occupancy_lower_bound(const SparsitySetting& setting, int Delta, double lambda) {
    setting.validate();
    if (Delta < 1) throw regime_error("occupancy bound requires Delta >= 1");
    if (!(lambda > 0)) throw regime_error("occupancy bound requires lambda > 0");
    BoundResult r;
    r.formula = "occupancy/" + setting.name();

    using Kind = SparsitySetting::Kind;
    if (setting.kind == Kind::Clique) {
        // two-arm closed form; no x-maximisation appears in it
        if (Delta < 3) throw regime_error("clique occupancy bound needs Delta >= 3");
        double ld = std::log(static_cast<double>(Delta));
        double lld = std::log(ld);
        if (!(lld > 0)) throw regime_error("clique occupancy bound needs log log Delta > 0");
        double lw = std::log(static_cast<double>(setting.omega - 1));
        double arm1 = ld / ((setting.omega - 2) * static_cast<double>(Delta) * lld);
        double arm2 = 0.5 / Delta * std::sqrt(ld / lw);
        r.value = std::max(arm1, arm2);
        r.o1_set_to_one = true;
        return r;
    }

    std::function<double(double)> f;
    if (setting.kind == Kind::HallRatio) {
        double rho = setting.rho;
        f = [rho, Delta](double x) {
            double arg_k = rho * x / std::log1p(x);
            if (arg_k < 1.0) return 0.0;  // outside K's domain; skipped
            double kx = k_function(arg_k);
            return lambert_w0(kx * Delta * x / (1.0 + x)) / (kx * Delta);
        };
    } else {
        double a = setting.mad_exponent();
        f = [a, Delta](double x) {
            double D = Delta * std::exp(a * std::log1p(x)) * std::log1p(x);
            if (!(D > 0)) return 0.0;
            // W(D)/D = exp(-W(D))
            return x / (1.0 + x) * std::exp(-lambert_w0(D));
        };
    }
    auto [xs, v] = maximize_on(lambda, f);
    r.maximizer = xs;
    r.value = v;
    return r;
}

namespace {

double checked_log(double arg, const char* what) {
    if (!(arg > 1.0))
        throw regime_error(std::string(what) + ": log argument must exceed 1, got " +
                           std::to_string(arg));
    return std::log(arg);
}

double checked_loglog(double arg, const char* what) {
    double l = checked_log(arg, what);
    if (!(l > 1.0))
        throw regime_error(std::string(what) + ": log log argument not positive");
    return std::log(l);
}

}  // namespace

double chromatic_budget(const SparsitySetting& setting, const BudgetParams& p) {
    setting.validate();
    if (!(p.deg > 0)) throw regime_error("budget requires deg > 0");
    if (!(p.eps >= 0)) throw regime_error("budget requires eps >= 0");
    const bool list = p.mode == BudgetMode::List;
    double logDelta = 0;
    if (list) {
        if (p.Delta < 2) throw regime_error("list budget requires Delta >= 2");
        logDelta = std::log(static_cast<double>(p.Delta));
    }
    const double one_eps = 1.0 + p.eps;

    using Kind = SparsitySetting::Kind;
    switch (setting.kind) {
        case Kind::TriangleFree:
        case Kind::CkFree:
        case Kind::TriangleCount:
        case Kind::PathCount: {
            // scale s: k, sqrt(t), or k + sqrt(t)
            double s;
            if (setting.kind == Kind::TriangleFree)
                s = 3.0;
            else if (setting.kind == Kind::CkFree)
                s = setting.k;
            else if (setting.kind == Kind::TriangleCount)
                s = std::sqrt(setting.t);
            else
                s = setting.k + std::sqrt(setting.t);
            double scale = list ? s * logDelta : s;
            double arm1 = p.deg / checked_log(p.deg / scale, "budget");
            double arm2 = p.delta0 / checked_log(p.delta0, "budget delta0") * scale;
            return one_eps * std::max(arm1, arm2);
        }
        case Kind::HallRatio: {
            double K = k_function(setting.rho);
            if (list) {
                double delta = p.delta0 * setting.rho * logDelta;
                double arm1 =
                    K * p.deg / checked_log(K * p.deg / (setting.rho * logDelta), "budget");
                double arm2 =
                    K * delta / checked_log(K * delta / (setting.rho * logDelta), "budget");
                return one_eps * std::max(arm1, arm2);
            }
            double arm1 = K * p.deg / checked_log(K * p.deg, "budget");
            double arm2 = K * p.delta0 / checked_log(K * p.delta0, "budget delta0");
            return one_eps * std::max(arm1, arm2);
        }
        case Kind::Clique: {
            const double om = setting.omega;
            const double lw = std::log(om - 1.0);
            // correspondence mode rescales the log arguments by the colour
            // surplus k and the minimum-degree scale by delta = delta0 * k
            double kcorr = 1.0, delta = p.delta0;
            if (list) {
                double l8 = std::log(8.0 * std::pow(static_cast<double>(p.Delta), 4));
                kcorr = std::min(std::pow(std::exp(2.0) * l8, om - 1.0),
                                 std::exp(std::sqrt(4.0 * lw * one_eps * l8)));
                delta = p.delta0 * kcorr;
            }
            double log_deg = checked_log(p.deg / kcorr, "budget");
            double log_delta = checked_log(delta / kcorr, "budget delta0");
            double llog_deg = checked_loglog(p.deg / kcorr, "budget");
            double llog_delta = checked_loglog(delta / kcorr, "budget delta0");
            double arm_a = std::max((om - 2.0) * p.deg * llog_deg / log_deg,
                                    (om - 2.0) * delta * llog_delta / log_delta);
            double arm_b = std::max(2.0 * p.deg * std::sqrt(lw / log_deg),
                                    2.0 * delta * std::sqrt(lw / log_delta));
            return one_eps * std::min(arm_a, arm_b);
        }
    }
    throw regime_error("unknown setting");
}

double list_size_requirement(double beta, double gamma, double deg, double lambda, double ell,
                             int Delta) {
    if (Delta < 64) throw regime_error("list size threshold requires Delta >= 64");
    double seven_log = 7.0 * std::log(static_cast<double>(Delta));
    if (!(ell > seven_log)) throw regime_error("list size threshold requires ell > 7 log Delta");
    if (!(lambda > 0) || !(beta > 0) || !(gamma > 0) || !(deg >= 0))
        throw regime_error("list size threshold requires positive parameters");
    double eta = std::sqrt(seven_log / ell);
    return beta * lambda / (1.0 + lambda) * ell / (1.0 - eta) + gamma * deg;
}

}  // namespace hcm

#include "glacier/model.hpp"

#include <cmath>

#include "glacier/errors.hpp"

namespace glacier {

namespace {

// The flux exponents are small integers in every configuration of interest;
// std::pow with a non-constant exponent dominates the step cost otherwise.
double pow_fast(double base, double e) {
    const int ie = static_cast<int>(e);
    if (e == static_cast<double>(ie) && ie >= 0 && ie <= 16) {
        double r = 1.0, b = base;
        for (int k = ie; k > 0; k >>= 1) {
            if (k & 1) r *= b;
            b *= b;
        }
        return r;
    }
    return std::pow(base, e);
}

}  // namespace

double bed_elevation(double x, const ModelParams& p) {
    const double smin = p.sill_min * kThicknessUnit;  // km -> m
    const double smax = p.sill_max * kThicknessUnit;
    const double b_at_smin = p.b0 + p.b_x * smin;
    if (x <= smin) return p.b0 + p.b_x * x;
    if (x <= smax) return b_at_smin + p.sill_slope * (x - smin);
    return b_at_smin + p.sill_slope * (smax - smin) + p.b_x * (x - smax);
}

double grounding_thickness(double L, const ModelParams& p) {
    const double b = bed_elevation(L, p);
    if (b >= 0.0) throw NonMarineBed(L, b);
    return -p.lambda * b;
}

double interior_flux(const GlacierState& s, const ModelParams& p) {
    return p.gamma * pow_fast(s.H, 2.0 * p.n + 1.0) / pow_fast(s.L, p.n);
}

double grounding_flux(double h_g, const ModelParams& p) {
    return p.omega * pow_fast(h_g, p.beta);
}

double smb_forcing(double t, const ModelParams& p) {
    if (t <= 0.0) return p.smb_o;
    if (t <= p.t_mid) return p.smb_o + (p.smb_1 - p.smb_o) * (t / p.t_mid);
    if (t <= p.t_end) return p.smb_1 + (p.smb_f - p.smb_1) * ((t - p.t_mid) / (p.t_end - p.t_mid));
    return p.smb_f;
}

TendencyResult tendency(double t, const GlacierState& s, const ModelParams& p) {
    const double h_g = grounding_thickness(s.L, p);
    const double Q = interior_flux(s, p);
    const double Q_g = grounding_flux(h_g, p);
    const double P = smb_forcing(t, p);
    TendencyResult r;
    r.flux = {h_g, Q, Q_g};
    r.d.dH_dt = P - Q_g / s.L - (s.H / (h_g * s.L)) * (Q - Q_g);
    r.d.dL_dt = (Q - Q_g) / h_g;
    return r;
}

GlacierState rk4_step(double t, const GlacierState& s, double dt, const ModelParams& p) {
    const auto at = [&](double tt, double H, double L) { return tendency(tt, {H, L}, p).d; };
    const Derivative k1 = at(t, s.H, s.L);
    const Derivative k2 = at(t + dt / 2, s.H + dt / 2 * k1.dH_dt, s.L + dt / 2 * k1.dL_dt);
    const Derivative k3 = at(t + dt / 2, s.H + dt / 2 * k2.dH_dt, s.L + dt / 2 * k2.dL_dt);
    const Derivative k4 = at(t + dt, s.H + dt * k3.dH_dt, s.L + dt * k3.dL_dt);
    GlacierState out;
    out.H = s.H + dt / 6.0 * (k1.dH_dt + 2.0 * k2.dH_dt + 2.0 * k3.dH_dt + k4.dH_dt);
    out.L = s.L + dt / 6.0 * (k1.dL_dt + 2.0 * k2.dL_dt + 2.0 * k3.dL_dt + k4.dL_dt);
    if (!std::isfinite(out.H) || !std::isfinite(out.L) || out.H <= 0.0 || out.L <= 0.0)
        throw StateBlowup(t + dt, out.H, out.L);
    return out;
}

ModelParams calibrate_constants(ModelParams p) {
    const GlacierState s0 = p.initial_state();
    const double P0 = p.smb_o;
    const double h0 = grounding_thickness(s0.L, p);
    p.gamma = P0 * pow_fast(s0.L, p.n + 1.0) / pow_fast(s0.H, 2.0 * p.n + 1.0);
    p.omega = P0 * s0.L / pow_fast(h0, p.beta);
    return p;
}

std::vector<TrajectoryPoint> integrate(double t0, double t1, const GlacierState& s0,
                                       const ModelParams& p, double dt) {
    std::vector<TrajectoryPoint> out;
    const double span = t1 - t0;
    const long nsteps = span > 0.0 ? static_cast<long>(std::ceil(span / dt - 1e-9)) : 0;
    out.reserve(static_cast<std::size_t>(nsteps) + 1);
    GlacierState s = s0;
    out.push_back({t0, s, tendency(t0, s, p).flux});
    for (long k = 0; k < nsteps; ++k) {
        const double ta = t0 + static_cast<double>(k) * dt;
        const double tb = (k + 1 == nsteps) ? t1 : t0 + static_cast<double>(k + 1) * dt;
        s = rk4_step(ta, s, tb - ta, p);
        out.push_back({tb, s, tendency(tb, s, p).flux});
    }
    return out;
}

}  // namespace glacier

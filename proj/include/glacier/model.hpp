#pragma once

#include <vector>

namespace glacier {

// All model arithmetic is in SI meters and years. Configuration fields keep
// the customary display units of the parameter tables: thickness in km,
// length in units of 1e5 m, sill positions in km. The two constants below
// convert display values to meters.
inline constexpr double kThicknessUnit = 1.0e3;  // display thickness -> m
inline constexpr double kLengthUnit = 1.0e5;     // display length -> m

// Assimilated state of the two-stage glacier: mean interior thickness H and
// glacier length L, both in meters.
struct GlacierState {
    double H = 0.0;
    double L = 0.0;
};

struct Derivative {
    double dH_dt = 0.0;  // m/yr
    double dL_dt = 0.0;  // m/yr
};

struct FluxDiagnostics {
    double h_g = 0.0;  // grounding-line thickness, m
    double Q = 0.0;    // interior flux, m^2/yr
    double Q_g = 0.0;  // grounding-line flux, m^2/yr
};

// Forcing, geometry and physical constants. smb_* give the surface mass
// balance at years 0, t_mid and t_end; the bed is piecewise linear with a
// reverse-slope sill between sill_min and sill_max.
struct ModelParams {
    double smb_o = 0.3;    // m ice / yr at year 0
    double smb_1 = 0.15;   // m ice / yr at t_mid
    double smb_f = 0.0;    // m ice / yr at t_end
    double H_o = 2.18;     // initial thickness, display units (km)
    double L_o = 4.44;     // initial length, display units (1e5 m)
    double b_x = -0.001;   // bed slope
    double sill_min = 415.0;  // sill start, km
    double sill_max = 425.0;  // sill end, km
    double sill_slope = 0.01;
    double b0 = -300.0;    // bed elevation at x = 0, m
    double lambda = 1028.0 / 917.0;  // seawater / ice density ratio
    double n = 3.0;        // interior-flux exponent
    double beta = 4.0;     // grounding-flux exponent
    double gamma = 0.0;    // interior flux coefficient; see calibrate_constants
    double omega = 0.0;    // grounding flux coefficient; see calibrate_constants
    double t_mid = 1950.0;  // forcing breakpoint, yr
    double t_end = 2300.0;  // forcing breakpoint, yr

    GlacierState initial_state() const { return {H_o * kThicknessUnit, L_o * kLengthUnit}; }
};

struct TendencyResult {
    Derivative d;
    FluxDiagnostics flux;
};

struct TrajectoryPoint {
    double t = 0.0;  // yr
    GlacierState state;
    FluxDiagnostics flux;
};

// Bed elevation (m) at distance x (m) from the ice divide. Piecewise linear:
// slope b_x up to the sill, sill_slope across it, b_x again beyond. Continuous
// everywhere.
double bed_elevation(double x, const ModelParams& p);

// Flotation thickness h_g = -lambda * b(L). Throws NonMarineBed if b(L) >= 0.
double grounding_thickness(double L, const ModelParams& p);

// Q = gamma * H^(2n+1) / L^n
double interior_flux(const GlacierState& s, const ModelParams& p);

// Q_g = omega * h_g^beta
double grounding_flux(double h_g, const ModelParams& p);

// Surface mass balance at year t: piecewise linear through (0, smb_o),
// (t_mid, smb_1), (t_end, smb_f); clamped to the endpoint values outside.
double smb_forcing(double t, const ModelParams& p);

// dH/dt = P - Q_g/L - (H / (h_g L)) (Q - Q_g),  dL/dt = (Q - Q_g) / h_g
TendencyResult tendency(double t, const GlacierState& s, const ModelParams& p);

// Classical RK4 update over dt. Throws StateBlowup if the result is
// non-finite or non-positive.
GlacierState rk4_step(double t, const GlacierState& s, double dt, const ModelParams& p);

// Sets gamma and omega so that the initial state is an exact equilibrium of
// the flux laws under P = smb_o:
//   gamma = P0 L0^(n+1) / H0^(2n+1),  omega = P0 L0 / h_g(L0)^beta
ModelParams calibrate_constants(ModelParams p);

// Fixed-step RK4 trajectory from t0 to t1 with a final partial step landing
// exactly on t1. Records state and flux diagnostics at every output time,
// including t0.
std::vector<TrajectoryPoint> integrate(double t0, double t1, const GlacierState& s0,
                                       const ModelParams& p, double dt);

}  // namespace glacier

#pragma once

#include <stdexcept>
#include <string>

namespace glacier {

// Grounding line sits on bed at or above sea level; the flotation relation
// h_g = -lambda * b(L) has no positive solution there.
class NonMarineBed : public std::runtime_error {
  public:
    NonMarineBed(double position_m, double elevation_m)
        : std::runtime_error("grounding line at x=" + std::to_string(position_m) +
                             " m rests on non-marine bed (b=" + std::to_string(elevation_m) + " m)"),
          position_m(position_m), elevation_m(elevation_m) {}
    double position_m;
    double elevation_m;
};

// Integrator produced a non-finite or non-positive state.
class StateBlowup : public std::runtime_error {
  public:
    StateBlowup(double t, double H, double L)
        : std::runtime_error("state blowup at t=" + std::to_string(t) +
                             " (H=" + std::to_string(H) + ", L=" + std::to_string(L) + ")"),
          t(t), H(H), L(L) {}
    double t;
    double H;
    double L;
};

// Innovation covariance H C H' + R is numerically singular.
class SingularInnovation : public std::runtime_error {
  public:
    SingularInnovation() : std::runtime_error("innovation covariance is singular") {}
};

// Config text could not be parsed; line is 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

// A parsed config violates a module precondition.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what)
        : std::runtime_error("invalid config: " + what) {}
};

}  // namespace glacier

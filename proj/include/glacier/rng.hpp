#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace glacier::rng {

// Substream scheme
// ----------------
// Every random draw in the project comes from a stream whose seed is derived
// from (root seed, purpose tag, counter path) by folding splitmix64 finalizers.
// Streams are therefore independent of execution order and worker count:
// serial and parallel runs of the same configuration draw identical numbers.
//
// Counter paths in use:
//   {init_member, i}          ensemble initialization, member i
//   {obs_noise, j}            synthetic observation j of a schedule
//   {obs_perturb, c, i}       analysis perturbation, assimilation cycle c, member i
//   {model_noise, c, i}       additive model noise, cycle c, member i
//   {sweep_job, axis, k}      per-job root seed for sweep replicate k

enum class Stream : std::uint64_t {
    init_member = 1,
    obs_noise = 2,
    obs_perturb = 3,
    model_noise = 4,
    sweep_job = 5,
};

constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive(std::uint64_t root, Stream purpose,
                            std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = mix64(root ^ mix64(static_cast<std::uint64_t>(purpose)));
    for (std::uint64_t id : path) h = mix64(h ^ mix64(id));
    return h;
}

// Deterministic normal generator: mt19937_64 + Box-Muller (cosine branch only,
// two uniforms per draw). Avoids std::normal_distribution so that byte-for-byte
// reproducibility does not depend on the standard library implementation.
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace glacier::rng

// Random-state generators used by the planners: uniform free sampling, goal
// bias, goal zoom and the narrow-channel sampler with its cluster test.

#pragma once

#include <stdexcept>

#include "ncrrt/rng.hpp"
#include "ncrrt/space.hpp"
#include "ncrrt/tree.hpp"

namespace ncrrt {

struct SamplerParams {
    /// Probability of drawing a plain uniform sample. The goal-directed branch
    /// of goal bias / goal zoom fires with probability 1 - p.
    double p{0.9};
    /// Cluster radius around a candidate.
    double lambda{20.0};
    /// Narrowness threshold in percent of cluster points that collide.
    double sigma{40.0};
    int cluster_size{50};
    /// Candidate budget for narrow_state and rejection budget for the goal-zoom
    /// disk. random_state gives up after 10 * max_attempts rejections.
    int max_attempts{100};
};

void validate(const SamplerParams& params);

/// Raised when rejection sampling cannot find a free configuration.
class SamplingExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Uniform over the bounds, rejection-resampled until collision-free.
[[nodiscard]] Config random_state(const Scenario& s, RngStream& rng, int max_rejections = 1000);

/// Exact-uniform point in the disk of `radius` around `center`; consumes
/// exactly two uniforms.
[[nodiscard]] Config sample_disk(const Config& center, double radius, RngStream& rng);

/// Returns the goal with probability 1 - p, otherwise random_state.
[[nodiscard]] Config goal_bias_state(const Scenario& s, RngStream& rng, double p,
                                     int max_rejections = 1000);

/// With probability 1 - p samples the disk centred on the goal whose radius is
/// the distance from the goal to its nearest tree node.
[[nodiscard]] Config goal_zoom_state(const Scenario& s, const Tree& t, RngStream& rng,
                                     const SamplerParams& params);

/// Cluster test: draws `cluster_size` points uniformly in the disk of radius
/// `lambda` around `c` and reports whether at least `sigma` percent collide.
/// Always consumes exactly `cluster_size` disk draws.
[[nodiscard]] bool is_narrow(const Config& c, const Scenario& s, RngStream& rng, double lambda,
                             double sigma, int cluster_size);

/// Draws free candidates until one passes is_narrow; after max_attempts
/// failures the last candidate is returned as is.
[[nodiscard]] Config narrow_state(const Scenario& s, RngStream& rng, const SamplerParams& params);

}  // namespace ncrrt

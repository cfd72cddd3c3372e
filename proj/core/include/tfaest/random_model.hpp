#pragma once

#include <cstdint>

#include "tfaest/model.hpp"

namespace tfaest {

struct RandomModelConfig {
  std::size_t state_count = 4;    // 1..6
  std::size_t event_count = 3;    // 1..3
  std::int64_t max_constant = 3;  // 0..3
  double observable_fraction = 0.5;
  /// Probability that a given (source, event, target) triple is a transition.
  double transition_density = 0.2;
  /// Probability of an `id` reset; forced to 0 on observable events when
  /// `require_ro` is set.
  double reset_id_probability = 0.3;
  std::uint64_t rng_seed = 0;
  bool require_ro = true;
};

/// A well-formed TFA drawn from `config`; same seed, same model. States are
/// x0..x{n-1} with x0 initial; events are a, b, c. At least one event is
/// observable and at least one transition exists.
Tfa random_model(const RandomModelConfig &config);

/// Scaling family with fixed alphabet and constants: a ring of `n` states,
/// all initial, with an unobservable step to the next state and an
/// observable jump three states ahead.
Tfa ring_model(std::size_t n);

} // namespace tfaest

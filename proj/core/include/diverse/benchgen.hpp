#pragma once

#include <cstddef>
#include <cstdint>

#include "diverse/model.hpp"

namespace diverse {

/// Parameters of the synthetic clustered-catalog generator.
struct GenSpec {
  std::size_t n_candidates = 0;
  std::size_t n_artists = 1;
  std::size_t albums_per_artist = 1;
  /// Pareto shape of the album base scores.
  double score_shape = 1.0;
  /// Extra random explanation tokens per candidate.
  std::size_t noise_tokens = 2;
  std::uint64_t seed = 0;
};

/// Deterministically generates a catalog of scored candidates clustered by
/// (artist, album): categories {artist:i, album:i.j}, explanations holding
/// the artist token, the album token and `noise_tokens` extra tokens (all
/// weight 1). Album base scores are Pareto(score_shape) draws; members of
/// the same album score within +/-10% of their album's base. Identical
/// specs yield byte-identical pools.
CandidatePool generate(const GenSpec& spec);

}  // namespace diverse

#include "diverse/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "diverse/rng.hpp"

namespace diverse {
namespace {

constexpr std::uint64_t kNoiseUniverse = 1024;

std::string padded(std::uint64_t value, int width) {
  std::string digits = std::to_string(value);
  if (digits.size() < static_cast<std::size_t>(width)) {
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  }
  return digits;
}

}  // namespace

CandidatePool generate(const GenSpec& spec) {
  if (spec.n_artists == 0 || spec.albums_per_artist == 0) {
    throw std::invalid_argument("n_artists and albums_per_artist must be >= 1");
  }
  if (!(spec.score_shape > 0.0) || !std::isfinite(spec.score_shape)) {
    throw std::invalid_argument("score_shape must be a positive finite number");
  }
  if (spec.noise_tokens > kNoiseUniverse) {
    throw std::invalid_argument("noise_tokens cannot exceed the noise token universe (" +
                                std::to_string(kNoiseUniverse) + ")");
  }

  SplitMix64 rng(spec.seed);

  // Album-level base scores: Pareto(shape) with x_m = 1, drawn in a fixed
  // order so candidate assignment cannot shift them between runs.
  const std::size_t album_count = spec.n_artists * spec.albums_per_artist;
  std::vector<double> base_scores(album_count);
  const double inv_shape = 1.0 / spec.score_shape;
  for (std::size_t i = 0; i < album_count; ++i) {
    // 1 - u lies in (2^-53, 1], keeping the draw finite and positive.
    const double u = 1.0 - rng.next_double();
    base_scores[i] = std::pow(u, -inv_shape);
  }

  std::vector<Candidate> candidates;
  candidates.reserve(spec.n_candidates);
  for (std::size_t i = 0; i < spec.n_candidates; ++i) {
    const std::uint64_t artist = rng.next_below(spec.n_artists);
    const std::uint64_t album = rng.next_below(spec.albums_per_artist);
    const std::size_t album_slot = artist * spec.albums_per_artist + album;

    Candidate candidate;
    candidate.id = "c" + padded(i, 6);
    // Same-album candidates score within +/-10% of the album base.
    const double jitter = 0.9 + 0.2 * rng.next_double();
    candidate.score = base_scores[album_slot] * jitter;

    const std::string artist_name = padded(artist, 3);
    const std::string album_name = artist_name + "." + padded(album, 2);
    candidate.categories = {"artist:" + artist_name, "album:" + album_name};

    candidate.explanations.push_back({"artist:" + artist_name, 1.0});
    candidate.explanations.push_back({"album:" + album_name, 1.0});
    for (std::size_t t = 0; t < spec.noise_tokens; ++t) {
      // Redraw on collision; tokens within one candidate form a set.
      while (true) {
        const std::string token = "noise:" + padded(rng.next_below(kNoiseUniverse), 4);
        const bool duplicate =
            std::any_of(candidate.explanations.begin(), candidate.explanations.end(),
                        [&](const WeightedToken& existing) { return existing.token == token; });
        if (!duplicate) {
          candidate.explanations.push_back({token, 1.0});
          break;
        }
      }
    }
    candidates.push_back(std::move(candidate));
  }
  return CandidatePool::from_candidates(std::move(candidates));
}

}  // namespace diverse

#pragma once

#include <cstdint>

#include "gloves/irrep.hpp"

namespace gloves {

struct SearchOptions {
  int restarts = 8;
  int max_iters = 30000;  // Nelder-Mead iterations per restart
  double tol = 1e-10;     // stall threshold: best-score improvement
  int stall_window = 50;  // ... observed over this many iterations
  std::uint64_t seed = 0;
};

struct SearchResult {
  SpaceSpec space;
  StateVector best_state;  // normalized, leading phase fixed
  double score = 0.5;      // Helstrom success of the twirled pair, recomputed
                           // through the exact channel average
  double upper_bound = 0.5;  // 1 when some L carries both parities, else 1/2
  int iterations = 0;        // total across restarts
  int restarts = 0;
  bool attained_bound = false;  // score >= upper_bound - 1e-6
};

// What the best verification-free transmission can achieve on this space:
// searches over pure states psi for the pair (psi, P psi) that stays most
// distinguishable after the exact rotation average, by Nelder-Mead over the
// state's coordinates in the irrep block basis. The score has a sharp
// theoretical ceiling: 1 when the space admits perfect gloves (some L with
// both parities), exactly 1/2 otherwise, and the search certifies which side
// of that dichotomy the space is on.
SearchResult optimize_approx_gloves(const SpaceSpec& space,
                                    const SearchOptions& options = {});

// Same search with the budget knobs inline.
SearchResult optimize_approx_gloves(const SpaceSpec& space, int restarts,
                                    int max_iters, std::uint64_t seed);

// The score functional by itself: Helstrom success probability for
// discriminating the exact rotation averages of |psi><psi| and its parity
// image, evaluated in block coordinates (singular values of the cross-parity
// overlap matrices), which avoids rebuilding the twirl per call.
double twirled_pair_score(const Decomposition& dec, const StateVector& psi);

}  // namespace gloves

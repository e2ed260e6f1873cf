#include "gloves/search.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "gloves/rotate.hpp"
#include "gloves/twirl.hpp"

namespace gloves {

namespace {

// block-coordinate view: every (block, M) basis vector, flattened
struct Coordinates {
  const Decomposition* dec;
  std::vector<std::pair<int, int>> slots;  // (block index, M index)

  explicit Coordinates(const Decomposition& d) : dec(&d) {
    for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
      for (int m = 0; m < d.blocks[b].dim(); ++m) slots.push_back({b, m});
  }

  int dim() const { return static_cast<int>(slots.size()); }

  StateVector assemble(const Eigen::VectorXd& x) const {
    StateVector psi{dec->space};
    for (int k = 0; k < dim(); ++k) {
      const cplx amp{x[2 * k], x[2 * k + 1]};
      if (std::abs(amp) <= kPruneTol) continue;
      const auto& [b, m] = slots[k];
      psi += amp * dec->blocks[b].basis[m];
    }
    return psi;
  }
};

// Score in block coordinates. The twirled pair difference is block diagonal
// over L with the M-independent cross matrix repeated dim(L) times, so its
// trace norm is sum_L dim(L) * 2 * (singular values of the even-odd overlap
// matrix), and the Helstrom success is 1/2 + trace_norm/4 ... specifically:
//   T_ab = (1/dim(L)) sum_M <aM|psi><psi|bM>^*-side pairing
//   td   = 2 sum_L dim(L) sum_i sigma_i(T_evenodd)
double block_score(const Decomposition& dec,
                   const std::vector<std::vector<cplx>>& coords) {
  double td = 0.0;
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_L;
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b) {
    auto& bucket = by_L[dec.blocks[b].two_L];
    (dec.blocks[b].parity == 1 ? bucket.first : bucket.second).push_back(b);
  }
  for (const auto& [two_L, bucket] : by_L) {
    const auto& evens = bucket.first;
    const auto& odds = bucket.second;
    if (evens.empty() || odds.empty()) continue;
    const int dim = two_L + 1;
    Eigen::MatrixXcd cross(evens.size(), odds.size());
    for (std::size_t e = 0; e < evens.size(); ++e)
      for (std::size_t o = 0; o < odds.size(); ++o) {
        cplx sum{0.0, 0.0};
        for (int m = 0; m < dim; ++m)
          sum += coords[evens[e]][m] * std::conj(coords[odds[o]][m]);
        cross(e, o) = sum / static_cast<double>(dim);
      }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cross);
    td += 2.0 * dim * svd.singularValues().sum();
  }
  return 0.5 + 0.5 * td;
}

}  // namespace

double twirled_pair_score(const Decomposition& dec, const StateVector& psi) {
  const double n = norm(psi);
  if (n < kPruneTol) throw DomainError("score needs a nonzero state");
  std::vector<std::vector<cplx>> coords(dec.blocks.size());
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    coords[b].resize(dec.blocks[b].dim());
    for (int m = 0; m < dec.blocks[b].dim(); ++m)
      coords[b][m] = inner_product(dec.blocks[b].basis[m], psi) / n;
  }
  return block_score(dec, coords);
}

SearchResult optimize_approx_gloves(const SpaceSpec& space,
                              const SearchOptions& options) {
  if (options.restarts < 1 || options.max_iters < 1)
    throw DomainError("search needs at least one restart and one iteration");

  const Decomposition dec = decompose(space);
  const Coordinates coords(dec);
  const int n = 2 * coords.dim();

  double bound = 0.5;
  {
    const SectorTable table = dec.sector_multiplicities();
    for (const auto& [sector, count] : table) {
      (void)count;
      if (sector.second == 1 && table.count({sector.first, -1})) bound = 1.0;
    }
  }

  auto objective = [&](const Eigen::VectorXd& x) -> double {
    double nsq = x.squaredNorm();
    if (nsq < kPruneTol) return 0.0;  // degenerate: worst possible
    std::vector<std::vector<cplx>> c(dec.blocks.size());
    const double inv = 1.0 / std::sqrt(nsq);
    int k = 0;
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
      c[b].resize(dec.blocks[b].dim());
      for (int m = 0; m < dec.blocks[b].dim(); ++m, ++k)
        c[b][m] = cplx{x[2 * k] * inv, x[2 * k + 1] * inv};
    }
    // the exact dichotomy caps the score; clip off rounding overshoot
    return std::min(block_score(dec, c), bound);
  };

  // adaptive Nelder-Mead coefficients
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / n;
  const double gamma = 0.75 - 0.5 / n;
  const double delta = 1.0 - 1.0 / n;

  SearchResult result{space, StateVector{space}, 0.0, bound, 0, 0, false};
  Eigen::VectorXd best_x;
  double best_score = -1.0;

  for (int restart = 0; restart < options.restarts; ++restart) {
    HaarSampler rng(derive_seed(options.seed, restart));
    std::vector<Eigen::VectorXd> simplex;
    std::vector<double> value;
    auto rebuild = [&](const Eigen::VectorXd& anchor, double step) {
      simplex.assign(1, anchor);
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd xi = anchor;
        xi[i] += step;
        simplex.push_back(xi);
      }
      value.clear();
      for (const auto& x : simplex) value.push_back(objective(x));
    };

    Eigen::VectorXd x0(n);
    for (int i = 0; i < n; ++i) x0[i] = 2.0 * rng.uniform() - 1.0;
    double step = 0.5;
    rebuild(x0, step);

    double stall_reference = -1.0;
    int stall_age = 0;
    for (int iter = 0; iter < options.max_iters; ++iter) {
      ++result.iterations;

      // order: value[order[0]] best (largest)
      std::vector<int> order(simplex.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return value[a] > value[b]; });

      const double current_best = value[order.front()];
      if (current_best >= bound - options.tol) break;  // at the ceiling
      if (stall_reference < 0.0 ||
          current_best > stall_reference + options.tol) {
        stall_reference = current_best;
        stall_age = 0;
      } else if (++stall_age >= std::max(options.stall_window, 2 * n)) {
        // stalled: shrink-restart the simplex around the incumbent with a
        // smaller scale; converged once the scale bottoms out
        step *= 0.5;
        if (step < 1e-8) break;
        rebuild(simplex[order.front()], step);
        stall_reference = -1.0;
        stall_age = 0;
        continue;
      }

      const int worst = order.back();
      const int second_worst = order[order.size() - 2];
      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
      for (int idx : order)
        if (idx != worst) centroid += simplex[idx];
      centroid /= static_cast<double>(simplex.size() - 1);

      const Eigen::VectorXd reflected =
          centroid + alpha * (centroid - simplex[worst]);
      const double f_reflected = objective(reflected);

      if (f_reflected > value[order.front()]) {
        const Eigen::VectorXd expanded =
            centroid + beta * (reflected - centroid);
        const double f_expanded = objective(expanded);
        if (f_expanded > f_reflected) {
          simplex[worst] = expanded;
          value[worst] = f_expanded;
        } else {
          simplex[worst] = reflected;
          value[worst] = f_reflected;
        }
        continue;
      }
      if (f_reflected > value[second_worst]) {
        simplex[worst] = reflected;
        value[worst] = f_reflected;
        continue;
      }
      const bool outside = f_reflected > value[worst];
      Eigen::VectorXd contracted;
      if (outside)
        contracted = centroid + gamma * (reflected - centroid);
      else
        contracted = centroid - gamma * (centroid - simplex[worst]);
      const double f_contracted = objective(contracted);
      if (f_contracted > (outside ? f_reflected : value[worst])) {
        simplex[worst] = contracted;
        value[worst] = f_contracted;
        continue;
      }
      // shrink toward the best vertex
      const Eigen::VectorXd& anchor = simplex[order.front()];
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (static_cast<int>(i) == order.front()) continue;
        simplex[i] = anchor + delta * (simplex[i] - anchor);
        value[i] = objective(simplex[i]);
      }
    }

    const auto best_it = std::max_element(value.begin(), value.end());
    if (*best_it > best_score) {
      best_score = *best_it;
      best_x = simplex[best_it - value.begin()];
    }
    ++result.restarts;
    if (best_score >= bound - options.tol) break;  // no further restarts needed
  }

  StateVector psi = phase_fixed(normalized(coords.assemble(best_x)));
  result.best_state = psi;

  // recompute the reported score through the full channel average so the
  // number is independent of the block shortcut
  const DensityMatrix plus = haar_twirl_exact(DensityMatrix::pure(psi));
  const DensityMatrix minus =
      haar_twirl_exact(DensityMatrix::pure(apply_parity(psi)));
  result.score = helstrom_success(plus, minus);
  result.attained_bound = result.score >= result.upper_bound - 1e-6;
  return result;
}

SearchResult optimize_approx_gloves(const SpaceSpec& space, int restarts,
                                    int max_iters, std::uint64_t seed) {
  SearchOptions options;
  options.restarts = restarts;
  options.max_iters = max_iters;
  options.seed = seed;
  return optimize_approx_gloves(space, options);
}

}  // namespace gloves

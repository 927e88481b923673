#pragma once

#include <optional>

#include "nonarch/ball.hpp"
#include "nonarch/extension.hpp"
#include "nonarch/json_io.hpp"

namespace nonarch {

// --- Independent elements -------------------------------------------------

struct IndependenceResult {
  bool independent = true;
  std::optional<Element> witness;  // a y in T' violating the min identity
};

// Checks omega(x + y) = min(omega(x), omega(y)) on sampled y in T', plus
// the scalar-transport corollary (x . l stays independent) on a handful of
// sampled scalars. An x already in T' is refuted by y = -x.
IndependenceResult is_independent(const ExtensionView& view, const Element& x,
                                  std::size_t samples, std::uint64_t seed);

// x + (-z) for the nearest T' point z (the canonical decomposition's T'
// component realizes the maximal distance level). Throws InputInSubgroup.
Element make_independent(const ExtensionView& view, const Element& x);

// The nearest T' point itself (the decomposition's y component).
Element nearest_tprime_point(const ExtensionView& view, const Element& x);

// --- Ball projection and lifting (closed balls) ----------------------------

// Image of a closed ball under rho: center rho(c), level
// (level - omega(x)) / m + nu(rho(x)), in the scalar line's metric.
Ball project_ball(const ExtensionView& view, const Ball& b);

// Point of b mapping to the target scalar-line point; throws
// TargetOutsideImage when the target escapes the projected ball.
Element lift_point(const ExtensionView& view, const Series& target, const Ball& b);

// --- Nested chain solving ---------------------------------------------------

struct SolveStage {
  std::string view_name;
  BallChain projected;      // in the stage's scalar line
  Series chosen_k_point;
  Element translation;      // z with rho(z) = chosen point
};

struct SolveResult {
  Element solution;  // recursive construction
  Element oracle;    // smallest ball's center (finite chains are trivially solvable)
  std::vector<SolveStage> stages;
};

// Finds a common point of a nested chain of closed balls two ways: the
// smallest-ball-center oracle, and the recursive procedure (project the
// chain, solve on the scalar line, translate so every ball meets T',
// recenter, recurse). Throws EmptyChain / ChainNotNested.
SolveResult solve_chain(const ExtensionView& view, const BallChain& chain,
                        std::size_t recursion_depth = 16);

Json solve_trace_json(const std::string& family, const SolveResult& r);

// --- Sigma splitting and product metrics ------------------------------------

struct SigmaSplit {
  Series fixed;  // (x + x^sigma)/2
  Series anti;   // (x - x^sigma)/2
};

// Splits against an omega-preserving involution. Needs 2 invertible in the
// coefficient field: GF(2) is a typed error, GF(3) is fine (2 is a unit).
SigmaSplit sigma_split(const Series& x,
                       const std::function<Series(const Series&)>& sigma);
// Convenience: conjugation on Q(i) series.
SigmaSplit sigma_split_conj(const Series& x);

struct PairSampler {
  std::function<Element(SampleRng&)> sample;
};

struct ProductMetricReport {
  std::size_t samples = 0;
  std::uint64_t violations = 0;
  Json first_witness;
  bool ok() const { return violations == 0; }
};

// Verifies d(u+w, u'+w') = min-of-parts in log space for omega-complementary
// samplers (the product-metric identity).
ProductMetricReport product_metric_check(const OmegaGroup& g, const PairSampler& u_sampler,
                                         const PairSampler& w_sampler, std::size_t samples,
                                         std::uint64_t seed);

// --- The infinite-dimensional counterexample --------------------------------

// Center x_i of the i-th chain ball: coordinate 0 is 1, coordinate k
// (1 <= k <= i) is t^(1 - 2^-k). Has i+1 coordinates.
Element counterexample_center(std::size_t i);
// Level of the i-th ball: 2 (1 - 2^-(i+1)), i.e. radius 4^-(1 - 2^-(i+1)).
QuadExt counterexample_level(std::size_t i);
// The ambient all-ones quadratic-form group, sized for ball operations.
GroupPtr counterexample_space(std::size_t dim);
// x_i padded to the given coordinate count, as a ball of that space.
Ball counterexample_ball(std::size_t i, std::size_t dim);

struct Refutation {
  std::size_t j;            // first vanishing coordinate of the candidate
  Level level_found;        // distance level to x_j
  QuadExt level_bound;      // 2 (1 - 2^-j): the guaranteed upper bound
  QuadExt level_required;   // ball level of B_j
  bool excluded() const { return Level::finite(level_required) > level_found; }
};

// Every finite-support candidate misses ball B_j at its first vanishing
// coordinate j; the distance is computed exactly.
Refutation refute_candidate(const Element& candidate);

}  // namespace nonarch

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "mengoli/eval_result.hpp"
#include "mengoli/rational.hpp"
#include "mengoli/series_spec.hpp"

namespace mengoli {

/// One partial-fraction step on adjacent shifts q_i < q_{i+1}:
///
///   1/prod = coefficient * (1/prod_left - 1/prod_right)
///
/// with coefficient = 1/(q_{i+1} - q_i), `left` lacking q_{i+1} and `right`
/// lacking q_i.
struct Reduction {
    Rational coefficient;
    ProductSeriesSpec left;
    ProductSeriesSpec right;
};

/// Reduction on the first two shifts. Requires at least three shifts.
Reduction reduce_once(const ProductSeriesSpec& spec);

/// Reduction on the adjacent pair (pivot, pivot + 1).
Reduction reduce_at(const ProductSeriesSpec& spec, std::size_t pivot);

/// Node of the reduction DAG. Identical sub-products are shared, so the node
/// count stays polynomial in the number of shifts.
struct ReductionTree {
    std::vector<Rational> shifts;
    Rational coefficient;  // unused on leaves
    std::shared_ptr<const ReductionTree> left;
    std::shared_ptr<const ReductionTree> right;

    bool is_leaf() const { return shifts.size() == 2; }
};

/// Builds the reduction DAG. Sub-products reduce on `pivot`, clamped to the
/// last adjacent pair when they have fewer shifts.
std::shared_ptr<const ReductionTree> build_reduction_tree(const ProductSeriesSpec& spec, std::size_t pivot = 0);

using PairKey = std::pair<Rational, Rational>;

/// Flattens the DAG into two-factor leaves with exact weights:
/// 1/prod = sum over leaves of weight / ((n + p)(n + q)).
std::map<PairKey, Rational> expand_to_pairs(const ProductSeriesSpec& spec, std::size_t pivot = 0);

/// Full partial fractions: 1/prod = sum_i residue_i / (n + q_i).
std::map<Rational, Rational> residues(const ProductSeriesSpec& spec, std::size_t pivot = 0);

/// sum_{n>=1} 1/prod(n + q_i) by reduction to two-factor closed forms. The
/// result is exact when every leaf is an integer pair.
EvalResult multi_sum(const ProductSeriesSpec& spec, std::size_t pivot = 0);

/// w^3/24 * [pi (4 cot(pi/w) - 2 cot(2 pi/w)) - 3w], the four-factor sum over
/// shifts -2/w, -1/w, 1/w, 2/w. Evaluated with 4 log2(w) guard bits since the
/// bracket cancels down to O(1/w^3).
EvalResult zeta4_closed_form(std::int64_t w, unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace mengoli

#include "mengoli/multifactor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "mengoli/error.hpp"
#include "mengoli/pairsum.hpp"

namespace mengoli {

namespace {

std::vector<Rational> without(std::span<const Rational> shifts, std::size_t skip) {
    std::vector<Rational> out;
    out.reserve(shifts.size() - 1);
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (i != skip) out.push_back(shifts[i]);
    }
    return out;
}

using Memo = std::map<std::vector<Rational>, std::shared_ptr<const ReductionTree>>;

std::shared_ptr<const ReductionTree> build(const std::vector<Rational>& shifts, std::size_t pivot, Memo& memo) {
    if (auto it = memo.find(shifts); it != memo.end()) return it->second;
    auto node = std::make_shared<ReductionTree>();
    node->shifts = shifts;
    if (shifts.size() > 2) {
        const std::size_t i = std::min(pivot, shifts.size() - 2);
        node->coefficient = Rational(1) / (shifts[i + 1] - shifts[i]);
        node->left = build(without(shifts, i + 1), pivot, memo);
        node->right = build(without(shifts, i), pivot, memo);
    }
    memo.emplace(shifts, node);
    return node;
}

using Expansion = std::map<PairKey, Rational>;

const Expansion& expand(const ReductionTree* node, std::unordered_map<const ReductionTree*, Expansion>& memo) {
    if (auto it = memo.find(node); it != memo.end()) return it->second;
    Expansion out;
    if (node->is_leaf()) {
        out.emplace(PairKey{node->shifts[0], node->shifts[1]}, Rational(1));
    } else {
        for (const auto& [key, c] : expand(node->left.get(), memo)) out[key] += node->coefficient * c;
        for (const auto& [key, c] : expand(node->right.get(), memo)) out[key] -= node->coefficient * c;
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    }
    return memo.emplace(node, std::move(out)).first->second;
}

}  // namespace

Reduction reduce_at(const ProductSeriesSpec& spec, std::size_t pivot) {
    if (spec.size() < 3) throw InvalidInput("reduction needs at least three shifts");
    if (pivot + 1 >= spec.size()) throw InvalidInput("reduction pivot out of range");
    const auto shifts = spec.shifts();
    return Reduction{Rational(1) / (shifts[pivot + 1] - shifts[pivot]),
                     ProductSeriesSpec(without(shifts, pivot + 1), spec.precision_bits()),
                     ProductSeriesSpec(without(shifts, pivot), spec.precision_bits())};
}

Reduction reduce_once(const ProductSeriesSpec& spec) { return reduce_at(spec, 0); }

std::shared_ptr<const ReductionTree> build_reduction_tree(const ProductSeriesSpec& spec, std::size_t pivot) {
    Memo memo;
    const auto s = spec.shifts();
    return build(std::vector<Rational>(s.begin(), s.end()), pivot, memo);
}

std::map<PairKey, Rational> expand_to_pairs(const ProductSeriesSpec& spec, std::size_t pivot) {
    const auto root = build_reduction_tree(spec, pivot);
    std::unordered_map<const ReductionTree*, Expansion> memo;
    return expand(root.get(), memo);
}

std::map<Rational, Rational> residues(const ProductSeriesSpec& spec, std::size_t pivot) {
    std::map<Rational, Rational> out;
    for (const auto& q : spec.shifts()) out[q] = Rational(0);
    for (const auto& [key, c] : expand_to_pairs(spec, pivot)) {
        // 1/((n+p)(n+q)) = (1/(q-p)) (1/(n+p) - 1/(n+q))
        const Rational r = c / (key.second - key.first);
        out[key.first] += r;
        out[key.second] -= r;
    }
    return out;
}

EvalResult multi_sum(const ProductSeriesSpec& spec, std::size_t pivot) {
    const auto shifts = spec.shifts();
    if (spec.size() == 2) return pair_sum(shifts[0], shifts[1], spec.precision_bits());

    const auto leaves = expand_to_pairs(spec, pivot);
    Rational weight_total;
    for (const auto& [key, c] : leaves) weight_total += c.abs();
    const auto guard = static_cast<unsigned>(
        std::max<std::int64_t>(0, static_cast<std::int64_t>(msb(weight_total.num() + 1)) -
                                      static_cast<std::int64_t>(msb(weight_total.den()))));
    const unsigned prec = spec.precision_bits();
    const unsigned wp = prec + 16 + guard;

    Bounded total{Real(wp), 0.0L};
    Rational exact_total;
    bool all_exact = true;
    for (const auto& [key, c] : leaves) {
        const EvalResult leaf = pair_sum(key.first, key.second, wp);
        if (leaf.exact) {
            exact_total += c * *leaf.exact;
        } else {
            all_exact = false;
        }
        total = total + Bounded{leaf.value, leaf.error_bound} * c;
    }

    EvalResult r;
    r.method = Method::PartialFractions;
    if (all_exact) {
        Bounded b = Bounded::from_rational(exact_total, prec);
        r.value = std::move(b.value);
        r.error_bound = b.error;
        r.exact = exact_total;
        return r;
    }
    r.value = total.value.rounded_to(prec);
    r.error_bound = total.error + unit_roundoff(prec) * std::fabs(r.value.to_long_double());
    return r;
}

EvalResult zeta4_closed_form(std::int64_t w, unsigned precision_bits) {
    if (w < 3) throw InvalidInput("zeta4 closed form requires w >= 3");
    require_precision(precision_bits);
    const unsigned wp = precision_bits + 16 + 4 * static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(w)));

    const Bounded cots = cot_pi(1, w, wp) * Rational(4) - cot_pi(2, w, wp) * Rational(2);
    const Bounded bracket = pi_bounded(wp) * cots - Bounded::from_rational(Rational(3 * w), wp);
    const Bounded value = bracket * (Rational(w) * Rational(w) * Rational(w) / Rational(24));

    EvalResult r;
    r.method = Method::ClosedForm;
    r.value = value.value.rounded_to(precision_bits);
    r.error_bound = value.error + unit_roundoff(precision_bits) * std::fabs(r.value.to_long_double());
    return r;
}

}  // namespace mengoli

// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mspan/buco.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mspan {

BucoInstance::BucoInstance(std::vector<std::int64_t> c1, std::vector<std::int64_t> c2)
    : c1_(std::move(c1)), c2_(std::move(c2)) {
    if (c1_.size() != c2_.size()) {
        throw Error(ErrorCode::InvalidInstance, "c1 and c2 have different lengths");
    }
    auto positive = [](std::int64_t v) { return v > 0; };
    if (!std::all_of(c1_.begin(), c1_.end(), positive) || !std::all_of(c2_.begin(), c2_.end(), positive)) {
        throw Error(ErrorCode::InvalidInstance, "all BUCO entries must be positive");
    }
}

ValueVector buco_value(const BucoInstance& inst, const BitVector& x) {
    if (x.size() != inst.c1().size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "solution has " + std::to_string(x.size()) + " bits, instance has " + std::to_string(inst.size()));
    }
    std::int64_t value = 0;
    std::int64_t weight = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) {
            value += inst.c1()[i];
            weight += inst.c2()[i];
        }
    }
    return ValueVector{-value, Rational(weight)};
}

ParetoFront buco_brute(const BucoInstance& inst) {
    const int n = inst.size();
    if (n > kBucoBruteMaxItems) {
        throw Error(ErrorCode::TooLarge, std::to_string(n) + " items exceed the brute-force limit");
    }
    constexpr std::size_t compact_at = std::size_t{1} << 20;
    std::vector<ValueVector> values;
    BitVector x(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
        }
        values.push_back(buco_value(inst, x));
        if (values.size() >= compact_at) {
            values = nondominated_filter(values).points;
        }
    }
    return nondominated_filter(values);
}

ParetoFront buco_dp(const BucoInstance& inst) {
    const std::int64_t total = std::accumulate(inst.c2().begin(), inst.c2().end(), std::int64_t{0});
    if (total > kBucoDpMaxWeight) {
        throw Error(ErrorCode::TooLarge, "sum of c2 = " + std::to_string(total) + " exceeds the DP limit");
    }
    constexpr std::int64_t none = std::numeric_limits<std::int64_t>::min();
    // best[w] = largest c1 sum over solutions with c2 sum exactly w.
    std::vector<std::int64_t> best(static_cast<std::size_t>(total) + 1, none);
    best[0] = 0;
    std::int64_t reach = 0;
    for (int i = 0; i < inst.size(); ++i) {
        const std::int64_t w = inst.c2()[static_cast<std::size_t>(i)];
        const std::int64_t v = inst.c1()[static_cast<std::size_t>(i)];
        for (std::int64_t s = reach; s >= 0; --s) {
            if (best[static_cast<std::size_t>(s)] != none) {
                auto& slot = best[static_cast<std::size_t>(s + w)];
                slot = std::max(slot, best[static_cast<std::size_t>(s)] + v);
            }
        }
        reach += w;
    }
    std::vector<ValueVector> values;
    for (std::int64_t w = 0; w <= total; ++w) {
        if (best[static_cast<std::size_t>(w)] != none) {
            values.push_back(ValueVector{-best[static_cast<std::size_t>(w)], Rational(w)});
        }
    }
    return nondominated_filter(values);
}

} // namespace mspan

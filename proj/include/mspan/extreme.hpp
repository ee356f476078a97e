// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Extreme points: non-dominated points that are the unique minimizer of
// some weighted sum l1*f1 + l2*f2 with l1, l2 >= 0, not both zero.
// Computed either from a known front (lower convex hull) or directly from
// the instance by dichotomic weighted-sum search; the two must agree.

#include <vector>

#include "mspan/pareto.hpp"

namespace mspan {

class Lambda {
  public:
    // Throws std::invalid_argument on a negative component or (0, 0).
    Lambda(Rational l1, Rational l2);

    [[nodiscard]] const Rational& l1() const { return l1_; }
    [[nodiscard]] const Rational& l2() const { return l2_; }
    [[nodiscard]] Rational apply(const ValueVector& y) const { return l1_ * Rational(y.f1) + l2_ * y.f2; }

    friend bool operator==(const Lambda&, const Lambda&) = default;

  private:
    Rational l1_;
    Rational l2_;
};

struct ExtremeCertificate {
    ValueVector point;
    Lambda lambda;
};

struct WeightedSumResult {
    Rational value;
    ValueVector point;
    EdgeSet witness;
};

// Minimum of lam.apply(f(S)) over all spanners S. Among minimizers the one
// with the least f1, then least f2, then smallest enumeration mask wins, so
// (1, 0) and (0, 1) yield the two lexicographic optima.
WeightedSumResult weighted_sum_min(const WeightedGraph& g, const Lambda& lam, const SolveOptions& options = {});

std::vector<ExtremeCertificate> extreme_from_front(const ParetoFront& front);

std::vector<ExtremeCertificate> extreme_dichotomic(const WeightedGraph& g, const SolveOptions& options = {});

// True iff cert.lambda gives cert.point a strictly smaller weighted sum than
// every other point of the front.
bool certificate_holds(const ExtremeCertificate& cert, const ParetoFront& front);

} // namespace mspan

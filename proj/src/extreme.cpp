// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mspan/extreme.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "enumeration.hpp"

namespace mspan {

Lambda::Lambda(Rational l1, Rational l2) : l1_(l1), l2_(l2) {
    if (l1_.sign() < 0 || l2_.sign() < 0) {
        throw std::invalid_argument("weight components must be nonnegative");
    }
    if (l1_.sign() == 0 && l2_.sign() == 0) {
        throw std::invalid_argument("weight vector must be nonzero");
    }
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Scales (a, b) to the primitive integer vector with the same direction.
Lambda primitive(const Rational& a, const Rational& b) {
    const std::int64_t l = std::lcm(a.den(), b.den());
    const Rational ia = a * Rational(l);
    const Rational ib = b * Rational(l);
    std::int64_t g = gcd64(ia.num(), ib.num());
    if (g == 0) {
        g = 1;
    }
    return Lambda(Rational(ia.num() / g), Rational(ib.num() / g));
}

// Normal of the segment from a to b (a.f1 < b.f1, a.f2 > b.f2); both points
// have the same weighted sum under it.
Lambda chord_normal(const ValueVector& a, const ValueVector& b) { return primitive(a.f2 - b.f2, Rational(b.f1 - a.f1)); }

// Certificates for a left-to-right list of hull vertices.
std::vector<ExtremeCertificate> certify_vertices(const std::vector<ValueVector>& hull) {
    std::vector<ExtremeCertificate> out;
    if (hull.size() == 1) {
        out.push_back({hull.front(), Lambda(Rational(1), Rational(1))});
        return out;
    }
    std::vector<Lambda> normals;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        normals.push_back(chord_normal(hull[i], hull[i + 1]));
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Rational l1;
        Rational l2;
        if (i == 0) {
            // Tilt the first chord normal towards (1, 0).
            l1 = normals[0].l1() * Rational(2);
            l2 = normals[0].l2();
        } else if (i + 1 == hull.size()) {
            // Tilt the last chord normal towards (0, 1).
            l1 = normals[i - 1].l1();
            l2 = normals[i - 1].l2() * Rational(2);
        } else {
            l1 = normals[i - 1].l1() + normals[i].l1();
            l2 = normals[i - 1].l2() + normals[i].l2();
        }
        out.push_back({hull[i], primitive(l1, l2)});
    }
    return out;
}

// Twice the signed area of (a, b, c); positive for a left turn.
Rational cross(const ValueVector& a, const ValueVector& b, const ValueVector& c) {
    return Rational(b.f1 - a.f1) * (c.f2 - a.f2) - (b.f2 - a.f2) * Rational(c.f1 - a.f1);
}

struct WsBest {
    std::optional<Rational> value;
    ValueVector point;
    std::uint64_t mask = 0;

    [[nodiscard]] bool better(const Rational& v, const ValueVector& y, std::uint64_t m) const {
        if (!value) {
            return true;
        }
        if (v != *value) {
            return v < *value;
        }
        if (y.f1 != point.f1) {
            return y.f1 < point.f1;
        }
        if (y.f2 != point.f2) {
            return y.f2 < point.f2;
        }
        return m < mask;
    }
    void offer(const Rational& v, const ValueVector& y, std::uint64_t m) {
        if (better(v, y, m)) {
            value = v;
            point = y;
            mask = m;
        }
    }
};

} // namespace

WeightedSumResult weighted_sum_min(const WeightedGraph& g, const Lambda& lam, const SolveOptions& options) {
    const detail::FreeEdgeSpace space(g, options);
    auto bests = detail::scan_partitioned<WsBest>(
        space, options.jobs,
        [&lam](WsBest& b, std::uint64_t mask, const ValueVector& y) { b.offer(lam.apply(y), y, mask); });
    WsBest merged;
    for (const WsBest& b : bests) {
        if (b.value) {
            merged.offer(*b.value, b.point, b.mask);
        }
    }
    // E itself is always a spanner, so some subset was visited.
    return {*merged.value, merged.point, space.materialize(merged.mask)};
}

std::vector<ExtremeCertificate> extreme_from_front(const ParetoFront& front) {
    std::vector<ValueVector> pts = front.points;
    std::sort(pts.begin(), pts.end(), lex_less);
    std::vector<ValueVector> hull;
    for (const ValueVector& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    if (hull.empty()) {
        return {};
    }
    return certify_vertices(hull);
}

std::vector<ExtremeCertificate> extreme_dichotomic(const WeightedGraph& g, const SolveOptions& options) {
    const ValueVector left = weighted_sum_min(g, Lambda(Rational(1), Rational(0)), options).point;
    const ValueVector right = weighted_sum_min(g, Lambda(Rational(0), Rational(1)), options).point;
    std::vector<ValueVector> found{left};
    if (right != left) {
        found.push_back(right);
        std::vector<std::pair<ValueVector, ValueVector>> pending{{left, right}};
        while (!pending.empty()) {
            const auto [a, b] = pending.back();
            pending.pop_back();
            const Lambda normal = chord_normal(a, b);
            const WeightedSumResult r = weighted_sum_min(g, normal, options);
            // Equal to the chord value: nothing lies strictly below a-b.
            if (r.value < normal.apply(a)) {
                found.push_back(r.point);
                pending.emplace_back(a, r.point);
                pending.emplace_back(r.point, b);
            }
        }
    }
    std::sort(found.begin(), found.end(), lex_less);
    return certify_vertices(found);
}

bool certificate_holds(const ExtremeCertificate& cert, const ParetoFront& front) {
    const Rational own = cert.lambda.apply(cert.point);
    bool present = false;
    for (const ValueVector& y : front.points) {
        if (y == cert.point) {
            present = true;
        } else if (!(own < cert.lambda.apply(y))) {
            return false;
        }
    }
    return present;
}

} // namespace mspan

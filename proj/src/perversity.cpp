#include "conelab/perversity.hpp"

#include <algorithm>
#include <stdexcept>

namespace conelab::strat {

Perversity Perversity::from_values(std::vector<long> values) {
    if (values.empty()) throw std::invalid_argument("perversity: needs at least p_2");
    if (values[0] != 0) throw std::invalid_argument("perversity: p_2 must be 0");
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i + 1] < values[i] || values[i + 1] > values[i] + 1)
            throw std::invalid_argument("perversity: growth constraint violated at k = " +
                                        std::to_string(i + 3));
    }
    return Perversity(std::move(values));
}

Perversity Perversity::zero(long n) {
    if (n < 2) throw std::invalid_argument("perversity: n >= 2 required");
    return Perversity(std::vector<long>(static_cast<std::size_t>(n - 1), 0));
}

Perversity Perversity::top(long n) {
    if (n < 2) throw std::invalid_argument("perversity: n >= 2 required");
    std::vector<long> v(static_cast<std::size_t>(n - 1));
    for (long k = 2; k <= n; ++k) v[static_cast<std::size_t>(k - 2)] = k - 2;
    return Perversity(std::move(v));
}

Perversity Perversity::lower_middle(long n) {
    if (n < 2) throw std::invalid_argument("perversity: n >= 2 required");
    std::vector<long> v(static_cast<std::size_t>(n - 1));
    for (long k = 2; k <= n; ++k) v[static_cast<std::size_t>(k - 2)] = k / 2 - 1;
    return Perversity(std::move(v));
}

Perversity Perversity::upper_middle(long n) {
    if (n < 2) throw std::invalid_argument("perversity: n >= 2 required");
    std::vector<long> v(static_cast<std::size_t>(n - 1));
    for (long k = 2; k <= n; ++k) v[static_cast<std::size_t>(k - 2)] = (k + 1) / 2 - 1;
    return Perversity(std::move(v));
}

long Perversity::at(long k) const {
    if (k < 2 || k > top_index())
        throw std::out_of_range("perversity: index k = " + std::to_string(k) + " out of range");
    return values_[static_cast<std::size_t>(k - 2)];
}

bool Perversity::leq(const Perversity& other) const {
    const long n = std::min(top_index(), other.top_index());
    for (long k = 2; k <= n; ++k)
        if (at(k) > other.at(k)) return false;
    return true;
}

std::string Perversity::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
    }
    return out + ")";
}

Perversity complement(const Perversity& p) {
    std::vector<long> v(p.values().size());
    for (long k = 2; k <= p.top_index(); ++k)
        v[static_cast<std::size_t>(k - 2)] = (k - 2) - p.at(k);
    return Perversity::from_values(std::move(v));
}

bool RatInterval::empty() const {
    if (hi_infinite) return false;
    if (lo < hi) return false;
    if (lo == hi) return !(lo_closed && hi_closed);
    return true;
}

bool RatInterval::contains(const Rational& x) const {
    if (lo_closed ? x < lo : x <= lo) return false;
    if (hi_infinite) return true;
    return hi_closed ? x <= hi : x < hi;
}

namespace {

bool interval_empty(const RatInterval& iv) { return iv.empty(); }

}  // namespace

IntervalSet canonicalize(IntervalSet set) {
    set.erase(std::remove_if(set.begin(), set.end(), interval_empty), set.end());
    std::sort(set.begin(), set.end(), [](const RatInterval& a, const RatInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    IntervalSet out;
    for (const RatInterval& iv : set) {
        if (!out.empty()) {
            RatInterval& last = out.back();
            // Merge when the previous interval reaches iv.lo (touching counts
            // when one of the meeting ends is closed).
            const bool reaches =
                last.hi_infinite || last.hi > iv.lo ||
                (last.hi == iv.lo && (last.hi_closed || iv.lo_closed));
            if (reaches) {
                if (!last.hi_infinite &&
                    (iv.hi_infinite || iv.hi > last.hi ||
                     (iv.hi == last.hi && iv.hi_closed && !last.hi_closed))) {
                    last.hi = iv.hi;
                    last.hi_closed = iv.hi_closed;
                    last.hi_infinite = iv.hi_infinite;
                }
                continue;
            }
        }
        out.push_back(iv);
    }
    return out;
}

IntervalSet intersect(const IntervalSet& set, const RatInterval& window) {
    IntervalSet out;
    for (const RatInterval& iv : set) {
        RatInterval r = iv;
        if (window.lo > r.lo || (window.lo == r.lo && !window.lo_closed && r.lo_closed)) {
            r.lo = window.lo;
            r.lo_closed = window.lo_closed;
        }
        if (!window.hi_infinite) {
            if (r.hi_infinite || window.hi < r.hi ||
                (window.hi == r.hi && !window.hi_closed && r.hi_closed)) {
                r.hi = window.hi;
                r.hi_closed = window.hi_closed;
                r.hi_infinite = false;
            }
        }
        if (!interval_empty(r)) out.push_back(r);
    }
    return canonicalize(std::move(out));
}

bool interval_sets_equal(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet ca = canonicalize(a), cb = canonicalize(b);
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const RatInterval& x = ca[i];
        const RatInterval& y = cb[i];
        if (x.lo != y.lo || x.lo_closed != y.lo_closed || x.hi_infinite != y.hi_infinite)
            return false;
        if (!x.hi_infinite && (x.hi != y.hi || x.hi_closed != y.hi_closed)) return false;
    }
    return true;
}

RatInterval associated_range(const Perversity& p, long k) {
    const long pk = p.at(k);
    if (2 * pk == k - 2) return RatInterval{Rational(1), Rational(0), true, false, true};
    if (2 * pk > k - 2)
        throw std::invalid_argument("associated_range: 2 p_k > k - 2 is malformed");
    RatInterval iv;
    iv.lo = Rational(1, k - 1 - 2 * pk);
    iv.lo_closed = true;
    if (k - 3 - 2 * pk == 0) {
        iv.hi_infinite = true;
    } else {
        iv.hi = Rational(1, k - 3 - 2 * pk);
        iv.hi_closed = false;
    }
    return iv;
}

RatInterval good_associated_range_displayed(const Perversity& p, long k) {
    const long pk = p.at(k);
    if (2 * pk == k - 2) return RatInterval{Rational(1), Rational(1), true, true, false};
    if (2 * pk > k - 2)
        throw std::invalid_argument("good_associated_range_displayed: 2 p_k > k - 2");
    // When 2 p_k = k - 3 (k odd) the right end is 1 and belongs to the set:
    // u = 1 needs no congruence and its threshold realizes exactly this p_k,
    // so the combined condition closes there.
    const bool hi_closed = (k - 2 - 2 * pk == 1);
    return RatInterval{Rational(1, k - 1 - 2 * pk), Rational(1, k - 2 - 2 * pk), true, hi_closed,
                       false};
}

IntervalSet goodness_set(long k) {
    if (k < 1) throw std::invalid_argument("goodness_set: k >= 1 required");
    IntervalSet out;
    // No congruence required below 1/k.
    out.push_back(RatInterval{Rational(0), Rational(1, k), false, false, false});
    // On [1/k, 1) the condition is 1/u in (2m+k, 2m+k+1]; clip to 1/u in (1, k]
    // and map back (note 1/u in (A,B] <=> u in [1/B, 1/A)).
    for (long m = -(k / 2 + 2); m <= 0; ++m) {
        const long lo_raw = 2 * m + k;      // open end in 1/u
        const long hi_raw = 2 * m + k + 1;  // closed end in 1/u
        const Rational A = std::max(Rational(lo_raw), Rational(1));
        const Rational B = std::min(Rational(hi_raw), Rational(k));
        if (!(A < B)) continue;
        out.push_back(RatInterval{Rational(1) / B, Rational(1) / A, true, false, false});
    }
    out.push_back(RatInterval{Rational(1), Rational(1), true, true, false});
    return canonicalize(std::move(out));
}

IntervalSet good_associated_range(const Perversity& p, long k) {
    return intersect(goodness_set(k), associated_range(p, k));
}

std::vector<Rational> sample_interval_set(const IntervalSet& set, std::size_t per_interval) {
    std::vector<Rational> out;
    for (const RatInterval& iv : set) {
        Rational hi = iv.hi_infinite ? iv.lo + Rational(2) : iv.hi;
        if (iv.lo == hi) {
            out.push_back(iv.lo);
            continue;
        }
        for (std::size_t i = 0; i < per_interval; ++i) {
            // Interior points lo + (hi-lo) * (2i+1)/(2n); endpoints added when closed.
            Rational x = iv.lo + (hi - iv.lo) * Rational(2 * static_cast<long>(i) + 1,
                                                         2 * static_cast<long>(per_interval));
            out.push_back(x);
        }
        if (iv.lo_closed) out.push_back(iv.lo);
        if (iv.hi_closed && !iv.hi_infinite) out.push_back(iv.hi);
    }
    return out;
}

}  // namespace conelab::strat

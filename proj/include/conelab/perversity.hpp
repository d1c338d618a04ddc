#ifndef CONELAB_PERVERSITY_HPP
#define CONELAB_PERVERSITY_HPP

#include <cstddef>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab::strat {

/// Perversity: integers p_2..p_n with p_2 = 0 and p_k <= p_{k+1} <= p_k + 1.
/// The growth constraints are re-validated on every construction.
class Perversity {
public:
    /// values[i] = p_{i+2}; throws unless the growth constraints hold.
    static Perversity from_values(std::vector<long> values);

    static Perversity zero(long n);          // (0,0,...)
    static Perversity top(long n);           // t_k = k-2
    static Perversity lower_middle(long n);  // m_k = floor(k/2)-1
    static Perversity upper_middle(long n);  // n_k = ceil(k/2)-1

    long top_index() const { return static_cast<long>(values_.size()) + 1; }  // n
    long at(long k) const;                                                    // p_k
    const std::vector<long>& values() const { return values_; }

    bool operator==(const Perversity&) const = default;
    /// Pointwise comparison over the common index range.
    bool leq(const Perversity& other) const;

    std::string str() const;

private:
    explicit Perversity(std::vector<long> values) : values_(std::move(values)) {}
    std::vector<long> values_;  // p_2..p_n
};

/// q = t - p; throws when the complement violates the growth constraints
/// (cannot happen: t - p is always a perversity when p is).
Perversity complement(const Perversity& p);

/// Rational interval with optional open/closed ends and an infinite right end.
struct RatInterval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = false;
    bool hi_infinite = false;

    bool empty() const;
    bool contains(const Rational& x) const;
};

/// Disjoint intervals, ascending, canonical (empty members dropped, touching
/// members merged).
using IntervalSet = std::vector<RatInterval>;

IntervalSet canonicalize(IntervalSet set);
IntervalSet intersect(const IntervalSet& set, const RatInterval& window);
bool interval_sets_equal(const IntervalSet& a, const IntervalSet& b);

/// Metric exponents u_k for which the L2-de Rham / intersection pairing with
/// perversity p holds at codimension k:
///   [1/(k-1-2p_k), 1/(k-3-2p_k))   if 2 p_k <= k-3   (right end infinite
///                                   when the denominator vanishes)
///   [1, oo)                        if 2 p_k  = k-2.
/// Throws for 2 p_k > k-2 (cannot occur for p <= lower middle; guarded).
RatInterval associated_range(const Perversity& p, long k);

/// The displayed combination of the associated range with goodness:
///   [1/(k-1-2p_k), 1/(k-2-2p_k))   if 2 p_k <= k-3,   {1} if 2 p_k = k-2.
RatInterval good_associated_range_displayed(const Perversity& p, long k);

/// Exponents u in (0,1] passing the goodness congruence at codimension k,
/// as an exact interval set.
IntervalSet goodness_set(long k);

/// associated_range intersected with goodness_set; equals the displayed
/// combined interval (asserted by tests over all admissible p_k).
IntervalSet good_associated_range(const Perversity& p, long k);

/// Deterministic rational sample points inside a set (for cross-checks).
std::vector<Rational> sample_interval_set(const IntervalSet& set, std::size_t per_interval);

}  // namespace conelab::strat

#endif

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "altpoly/polynomial.hpp"
#include "altpoly/rational.hpp"

namespace altpoly {

// Linear moment functional, known through its moment sequence <u, x^k>.
// Moments come from a generator rule and are cached on demand; the cache is
// the only mutable state and sits behind a mutex, so concurrent readers
// observe a consistent prefix and a repeated query returns the identical
// value.  Copies share the cache.  Consumers always ask for an explicit
// index or depth; stored-prefix functionals throw MomentDepthExceeded past
// their prefix instead of truncating silently.
class MomentFunctional {
public:
    // Receives the index to produce and the already-computed prefix
    // (entries 0 .. index-1), which lets rules be defined recursively.
    using Generator = std::function<Rational(std::size_t, const std::vector<Rational>&)>;

    // Finite moment list; queries beyond it throw MomentDepthExceeded.
    static MomentFunctional stored(std::vector<Rational> prefix);
    // Rule-backed functional, extendable to any depth the rule supports.
    static MomentFunctional from_generator(Generator rule);
    // All moments zero at every depth.
    static MomentFunctional zero();

    Rational moment(std::size_t k) const;
    // Moments 0..k inclusive.
    std::vector<Rational> moments_upto(std::size_t k) const;

private:
    struct State;
    explicit MomentFunctional(std::shared_ptr<State> s) : state_(std::move(s)) {}
    std::shared_ptr<State> state_;
};

// <u, p>.
Rational apply(const MomentFunctional& u, const Polynomial& p);

// The functional phi * u, with <phi u, x^k> = <u, phi(x) x^k>.
MomentFunctional mul_poly(const Polynomial& phi, const MomentFunctional& u);

}  // namespace altpoly

#include "altpoly/moment_functional.hpp"

#include "altpoly/errors.hpp"

namespace altpoly {

struct MomentFunctional::State {
    Generator gen;
    mutable std::vector<Rational> cache;
    mutable std::mutex mu;
};

MomentFunctional MomentFunctional::stored(std::vector<Rational> prefix) {
    auto st = std::make_shared<State>();
    const std::size_t have = prefix.size();
    st->cache = std::move(prefix);
    st->gen = [have](std::size_t k, const std::vector<Rational>&) -> Rational {
        throw MomentDepthExceeded(k, have);
    };
    return MomentFunctional(std::move(st));
}

MomentFunctional MomentFunctional::from_generator(Generator rule) {
    auto st = std::make_shared<State>();
    st->gen = std::move(rule);
    return MomentFunctional(std::move(st));
}

MomentFunctional MomentFunctional::zero() {
    return from_generator([](std::size_t, const std::vector<Rational>&) { return Rational(0); });
}

Rational MomentFunctional::moment(std::size_t k) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto& cache = state_->cache;
    try {
        while (cache.size() <= k) cache.push_back(state_->gen(cache.size(), cache));
    } catch (const MomentDepthExceeded& e) {
        // report the caller's query, not the index the extension stalled at
        throw MomentDepthExceeded(k, e.have);
    }
    return cache[k];
}

std::vector<Rational> MomentFunctional::moments_upto(std::size_t k) const {
    std::vector<Rational> out;
    out.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) out.push_back(moment(i));
    return out;
}

Rational apply(const MomentFunctional& u, const Polynomial& p) {
    Rational acc(0);
    const auto& cs = p.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero()) acc += cs[k] * u.moment(k);
    return acc;
}

MomentFunctional mul_poly(const Polynomial& phi, const MomentFunctional& u) {
    return MomentFunctional::from_generator(
        [phi, u](std::size_t k, const std::vector<Rational>&) {
            Rational acc(0);
            const auto& cs = phi.coefficients();
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (!cs[j].is_zero()) acc += cs[j] * u.moment(k + j);
            return acc;
        });
}

}  // namespace altpoly

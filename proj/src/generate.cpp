#include "fsc/generate.hpp"

namespace fsc {

Int rand_below(SplitMix64& gen, const Int& bound) {
    if (bound < 1) {
        throw std::invalid_argument("draw bound must be >= 1");
    }
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = bits / 64 + 2;
    Int acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        acc <<= 64;
        std::uint64_t w = gen.next();
        Int word;
        mpz_import(word.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        acc += word;
    }
    return mod_floor(acc, bound);
}

FscInstance gen_random_harmonic(int n, int max_ratio, std::uint64_t seed, bool plant) {
    if (n < 1 || max_ratio < 1) {
        throw std::invalid_argument("need n >= 1 and max_ratio >= 1");
    }
    SplitMix64 gen(seed);
    std::vector<Int> caps;
    caps.reserve(static_cast<std::size_t>(n));
    Int cap = 1 + Int(gen.next() % static_cast<std::uint64_t>(max_ratio));
    caps.push_back(cap);
    for (int i = 1; i < n; ++i) {
        cap *= 1 + Int(gen.next() % static_cast<std::uint64_t>(max_ratio));
        caps.push_back(cap);
    }
    Int target;
    if (plant) {
        target = rand_below(gen, caps.back());
    }
    FscInstance inst;
    inst.constraints.reserve(caps.size());
    for (const Int& a : caps) {
        Int width = a >= 2 ? Int(1 + rand_below(gen, a - 1)) : Int(1);
        Int lo;
        if (plant) {
            lo = mod_floor(target, a) - rand_below(gen, width);
        } else {
            lo = rand_below(gen, a);
        }
        Int hi = lo + width - 1;
        inst.constraints.push_back(Constraint{a, Interval(std::move(lo), std::move(hi))});
    }
    return inst;
}

}  // namespace fsc

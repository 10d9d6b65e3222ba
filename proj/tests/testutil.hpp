#ifndef GRSTWIST_TESTUTIL_HPP
#define GRSTWIST_TESTUTIL_HPP

#include "grstwist/codes.hpp"
#include "grstwist/galois.hpp"
#include "grstwist/linalg.hpp"

#include <cstdint>
#include <vector>

namespace testutil {

// deterministic PRNG so every run sees the same "random" instances
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline grstwist::FieldElem random_elem(Rng& rng, const grstwist::Field& f) {
    return {static_cast<std::uint32_t>(rng.below(f.order()))};
}

inline grstwist::FieldElem random_nonzero(Rng& rng, const grstwist::Field& f) {
    return f.exp(static_cast<long long>(rng.below(f.units())));
}

inline grstwist::Mat random_matrix(Rng& rng, grstwist::FieldRef f, std::size_t rows,
                                   std::size_t cols) {
    grstwist::Mat m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_elem(rng, *f);
    return m;
}

inline grstwist::LinearCode random_code(Rng& rng, grstwist::FieldRef f, std::size_t n,
                                        std::size_t k) {
    return grstwist::LinearCode(random_matrix(rng, f, k, n), 1, "trivial");
}

// random GRS spec: a random subset of evaluation points, random nonzero
// twist, random dimension 1..n
inline grstwist::GrsSpec random_grs_spec(Rng& rng, grstwist::FieldRef f, std::size_t max_n = 0) {
    grstwist::GrsSpec s;
    s.field = f;
    std::size_t nn = f->units();
    std::size_t limit = max_n == 0 ? nn : std::min(max_n, nn);
    for (std::uint32_t j = 0; j < nn && s.point_exps.size() < limit; ++j)
        if (rng.below(2) == 0) s.point_exps.push_back(j);
    if (s.point_exps.size() < 2) s.point_exps = {0, 1};
    for (std::size_t i = 0; i < s.point_exps.size(); ++i)
        s.twist.push_back(random_nonzero(rng, *f));
    s.k = 1 + rng.below(s.point_exps.size());
    return s;
}

} // namespace testutil

#endif

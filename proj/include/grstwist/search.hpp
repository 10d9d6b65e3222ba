#ifndef GRSTWIST_SEARCH_HPP
#define GRSTWIST_SEARCH_HPP

#include "grstwist/bkt.hpp"
#include "grstwist/bound.hpp"
#include "grstwist/codes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grstwist {

struct DeriveStep {
    bool is_shorten = true;             // false: puncture
    std::vector<std::size_t> coords;    // 1-based, against the code it applies to
};

// A found code, self-contained enough to rebuild: the root construction
// (algorithm, coset representatives, GRS dimension) plus any derivation
// chain applied afterwards.
struct SearchHit {
    int p = 0, m = 0;
    int alg = 1;                        // root construction: 1 or 2
    std::string kind;                   // "alg1", "alg2", or "derived"
    std::vector<std::uint32_t> cosets;  // twist support (alg1) / removed points (alg2)
    int k = 0;                          // dimension of the parent GRS code
    int n = 0, dim = 0, d_lb = 0;
    std::optional<BoundReport> bound;
    Verdict verdict = Verdict::unknown;
    std::vector<DeriveStep> chain;
    std::string note;
};

struct SearchOptions {
    int max_parts = 3;
    int k_min = 1;
    int k_max = -1;                     // -1: up to the code length
    bool include_zero_coset = false;
    int jobs = 1;
    bool with_bound = true;             // attach a BoundReport to each hit
    // restrict to these unions instead of enumerating
    std::optional<std::vector<std::vector<std::uint32_t>>> unions;
};

// Algorithm 1: twist polynomials with all-ones coefficients on a coset
// union. Algorithm 2: all-ones twist on the complement of a coset union.
// Either way the candidate is the dual of the trace code of the GRS code,
// with design distance k + 1; hits are the candidates that improve on or
// tie the table.
std::vector<SearchHit> alg1_search(FieldRef field, const BktTable& table,
                                   const SearchOptions& opts);
std::vector<SearchHit> alg2_search(FieldRef field, const BktTable& table,
                                   const SearchOptions& opts);

// Apply shorten/puncture steps to a hit's code, recomputing the exact
// dimension at every stage; emits one hit per stage.
std::vector<SearchHit> derive_chain(FieldRef field, const SearchHit& base,
                                    const std::vector<DeriveStep>& steps,
                                    const BktTable& table);

// Rebuild the actual generator matrix a hit describes (root construction
// through the full derivation chain); used to re-verify emitted parameters.
LinearCode build_hit_code(FieldRef field, const SearchHit& hit);

// The root pipeline by itself: C = GRS_k, then dual(trace_code(C)).
LinearCode build_root_code(FieldRef field, int alg, const std::vector<std::uint32_t>& cosets,
                           int k);

} // namespace grstwist

#endif

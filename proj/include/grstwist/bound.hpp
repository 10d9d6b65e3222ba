#ifndef GRSTWIST_BOUND_HPP
#define GRSTWIST_BOUND_HPP

#include "grstwist/codes.hpp"
#include "grstwist/ring.hpp"

#include <optional>
#include <set>
#include <vector>

namespace grstwist {

// One coset's contribution to the dimension bound: the window is
// A = {0, ..., deg_bound - 1} and the term is m*(|I_b n A| - 1) + m - n_b.
struct CosetTerm {
    std::uint32_t rep = 0;
    int coset_size = 0;
    int in_window = 0;
    long long term = 0;
};

struct BoundReport {
    int n = 0;          // code length
    int k = 0;          // dimension of the parent code being intersected
    int m = 0;
    int deg_bound = 0;  // n - k, the window size
    long long naive = 0;  // n - m*(n-k)
    long long bound = 0;  // naive + sum of the coset terms
    std::vector<CosetTerm> terms;
    std::optional<long long> kernel_dim;  // exact trace-kernel dimension
    std::optional<long long> exact_dim;   // exact subfield-subcode dimension
    std::optional<bool> strict;           // exact_dim > bound
};

// F_p basis of {f : supp f within I_b, trace_lift(f) = 0}: the binomials
// eta^kappa x^b - eta^{kappa p^l} x^{b p^l} plus gamma_i x^b over the
// relative-trace kernel; m*(n_b - 1) + m - n_b elements in all.
std::vector<PolyR> kernel_basis_for_coset(FieldRef field, std::uint32_t b);

// dim over F_p of {f : deg f < deg_bound, trace_lift(f * g) = 0}
long long trace_kernel_dim(const PolyR& g, int deg_bound);

// dim over F_p of {x in c : every coordinate has trace 0}, solved as one
// F_p constraint system (independent of the trace_code construction)
long long trace_kernel_dim(const LinearCode& c);

// The dimension lower bound for the subfield-subcode of the [n, k] code
// whose dual is GRS_{n-k} with a cyclotomic twist vanishing exactly on
// zero_exps. zero_exps must be closed under multiplication by p and must
// not cover all of Z_N. with_exact additionally computes the true kernel
// and subfield-subcode dimensions and the strictness flag.
BoundReport dimension_bound(const Field& field, const std::set<std::uint32_t>& zero_exps,
                            int k, bool with_exact);

// Rank profile of the componentwise-trace expansion over the given
// evaluation points: profile[t] is the F_p rank of the vectors
//   ( tr(w_r * eta^{c} * (eta^{j_r})^d) )_r   for d < t, 0 <= c < m.
// weights may be empty (all ones); zero weights are rejected. This is the
// workhorse behind exact subfield-subcode dimensions: the subfield-subcode
// of the [n, k] code dual to GRS_{n-k}(points, w) has dimension
// n - profile[n - k].
std::vector<int> trace_rank_profile(const Field& field,
                                    const std::vector<std::uint32_t>& point_exps,
                                    const std::vector<FieldElem>& weights, int max_t);

// prefix sums of the bound's window terms: result[t] is the full coset sum
// for the window {0, ..., t-1}, so a bound evaluates in O(1) per k
std::vector<long long> window_term_prefix(const Field& field);

} // namespace grstwist

#endif

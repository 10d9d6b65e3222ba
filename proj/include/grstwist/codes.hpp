#ifndef GRSTWIST_CODES_HPP
#define GRSTWIST_CODES_HPP

#include "grstwist/linalg.hpp"
#include "grstwist/ring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grstwist {

// A length-n linear code held as a generator matrix (rows span the code,
// not necessarily independent). The reduced form and rank are computed once
// at construction, so instances are immutable and safely shareable.
//
// d_lb tracks a minimum-distance lower bound together with how it was
// obtained ("design (MDS)", "inherited", "exact", or "trivial").
class LinearCode {
public:
    LinearCode(Mat generators, int d_lb, std::string d_provenance);

    const Field& field() const { return gen_.field(); }
    FieldRef field_ref() const { return gen_.field_ref(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dim() const { return reduced_.rows(); }
    const Mat& generators() const { return gen_; }
    const Mat& reduced() const { return reduced_; }
    int d_lb() const { return d_lb_; }
    const std::string& d_provenance() const { return d_prov_; }

    bool same_code(const LinearCode& o) const { return reduced_ == o.reduced_; }

private:
    Mat gen_;
    Mat reduced_;
    int d_lb_;
    std::string d_prov_;
};

// A GRS code description: evaluation points as ascending eta-exponents, a
// twist vector with no zero entries, and the dimension.
struct GrsSpec {
    FieldRef field;
    std::vector<std::uint32_t> point_exps;
    std::vector<FieldElem> twist;
    std::size_t k = 0;

    std::size_t n() const { return point_exps.size(); }
    void validate() const;
};

// spec with evaluation points = non-roots of g and twist = g there
GrsSpec grs_spec_from_poly(const PolyR& g, std::size_t k);
// the twist polynomial of a spec: v on the points, 0 elsewhere
PolyR twist_poly(const GrsSpec& spec);

// generator rows are the evaluations of 1, x, ..., x^{k-1}; the result is
// MDS, so d_lb = n - k + 1 by design
LinearCode grs(const GrsSpec& spec);

// closed form of the dual: same points, twist u with
// u_i^{-1} = v_i * prod_{j != i} (alpha_i - alpha_j), dimension n - k
GrsSpec grs_dual_closed_form(const GrsSpec& spec);

LinearCode dual(const LinearCode& c);

// componentwise trace image, a code over F_p
LinearCode trace_code(const LinearCode& c);

enum class SfscMethod {
    TraceDual,     // dual of the trace code of the dual (Delsarte)
    DirectKernel,  // expand parity checks over an F_p basis and solve
};

// the F_p code of codewords with every coordinate in F_p
LinearCode subfield_subcode(const LinearCode& c, SfscMethod method = SfscMethod::TraceDual);

// coords are 1-based; puncturing drops the columns, shortening first
// restricts to codewords vanishing there
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& coords);
LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& coords);

// true minimum weight by full codeword enumeration; refuses when q^k
// exceeds the budget
int min_distance_exact(const LinearCode& c, std::uint64_t budget = 1ull << 24);

// diagonal scaling c_i -> c_i * g1(alpha_i)^{-1} g2(alpha_i) taking
// GRS<g1> onto GRS<g2>; g1, g2 must be cyclotomic with equal zero sets
std::vector<FieldElem> monomial_equivalence(const PolyR& g1, const PolyR& g2);
LinearCode apply_diagonal(const LinearCode& c, const std::vector<FieldElem>& diag);

} // namespace grstwist

#endif

#ifndef GRSTWIST_RING_HPP
#define GRSTWIST_RING_HPP

#include "grstwist/galois.hpp"

#include <map>
#include <string>
#include <vector>

namespace grstwist {

// Element of R = F_{p^m}[x]/(x^N - 1), stored densely (coefficient of x^i at
// index i, N entries). Multiplying by x rotates indices mod N; degree() is
// the largest nonzero index, with -1 standing in for deg(0) so that every
// "deg f < k" predicate accepts the zero polynomial.
class PolyR {
public:
    explicit PolyR(FieldRef field);

    static PolyR monomial(FieldRef field, std::uint32_t exponent, FieldElem coeff);
    // sum of x^i over the given exponents, coefficients all 1
    static PolyR from_support(FieldRef field, const std::vector<std::uint32_t>& exponents);

    const Field& field() const { return *field_; }
    FieldRef field_ref() const { return field_; }
    std::uint32_t length() const { return static_cast<std::uint32_t>(c_.size()); }

    FieldElem coeff(std::uint32_t i) const { return c_[i % length()]; }
    void set_coeff(std::uint32_t i, FieldElem v) { c_[i % length()] = v; }

    int degree() const;
    bool is_zero() const { return degree() < 0; }
    std::vector<std::uint32_t> support() const;

    PolyR add(const PolyR& o) const;
    PolyR sub(const PolyR& o) const;
    PolyR scale(FieldElem s) const;
    PolyR mul(const PolyR& o) const;  // reduced mod x^N - 1
    PolyR frobenius() const;          // f^p: coefficient powers + index map i -> ip mod N

    FieldElem eval_exp(std::uint32_t j) const;  // value at eta^j
    FieldElem eval(FieldElem x) const;
    // (f(1), f(eta), ..., f(eta^{N-1})) — the evaluation isomorphism
    std::vector<FieldElem> values() const;

    friend bool operator==(const PolyR& a, const PolyR& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyR& a, const PolyR& b) { return !(a == b); }

private:
    FieldRef field_;
    std::vector<FieldElem> c_;
};

// inverse of the evaluation isomorphism (values listed in ascending
// eta-exponent order, length exactly N)
PolyR interpolate(FieldRef field, const std::vector<FieldElem>& values);

// the trace map lifted to R: f + f^p + ... + f^{p^{m-1}}
PolyR trace_lift(const PolyR& f);

struct CyclotomicCheck {
    bool cyclotomic = false;
    std::string method;  // which criterion was evaluated
    explicit operator bool() const { return cyclotomic; }
};

// g is cyclotomic when g^p = g (equivalently: g is valued in F_p,
// equivalently: g lies in the image of trace_lift)
CyclotomicCheck is_cyclotomic(const PolyR& g);

// exponents j with g(eta^j) = 0
std::vector<std::uint32_t> zero_set(const PolyR& g);

// the 0/1-valued polynomial with the same zero set as g; requires g
// cyclotomic
PolyR indicator_form(const PolyR& g);

// split f into components supported on single minimal cyclotomic cosets,
// keyed by coset representative
std::map<std::uint32_t, PolyR> coset_decompose(const PolyR& f);

// T(alpha x^b): the general cyclotomic element supported on the coset of b
PolyR cyclotomic_component(FieldRef field, std::uint32_t b, FieldElem alpha);

} // namespace grstwist

#endif

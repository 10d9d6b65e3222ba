#ifndef GRSTWIST_GALOIS_HPP
#define GRSTWIST_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace grstwist {

// Element of F_{p^m}, packed as sum_i c_i * p^i where (c_0,...,c_{m-1}) are
// the polynomial-basis coordinates over F_p. Arithmetic lives on Field.
struct FieldElem {
    std::uint32_t v = 0;
    friend bool operator==(FieldElem a, FieldElem b) { return a.v == b.v; }
    friend bool operator!=(FieldElem a, FieldElem b) { return a.v != b.v; }
    friend bool operator<(FieldElem a, FieldElem b) { return a.v < b.v; }
};

class Field;
using FieldRef = std::shared_ptr<const Field>;

// The field tower F_p <= F_{p^m}. Immutable after construction; all tables
// are built once, so a Field can be shared freely across threads.
//
// The multiplicative group is generated by eta, the class of x modulo a
// primitive polynomial. Nonzero elements carry a discrete log in [0, N)
// with N = p^m - 1.
class Field : public std::enable_shared_from_this<Field> {
public:
    // modulus, when supplied, is monic of degree m with coefficients in
    // [0, p), constant term first. When omitted, the smallest primitive
    // monic polynomial is chosen, candidates ordered by the coefficient
    // vector read as base-p digits (constant term least significant); this
    // pins every downstream output.
    static FieldRef make(int p, int m);
    static FieldRef make(int p, int m, const std::vector<int>& modulus);

    int p() const { return p_; }
    int degree() const { return m_; }
    std::uint32_t order() const { return q_; }    // p^m
    std::uint32_t units() const { return n_; }    // N = p^m - 1

    const std::vector<int>& modulus() const { return modulus_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    FieldElem eta() const { return eta_; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;             // throws on zero
    FieldElem div(FieldElem a, FieldElem b) const;
    FieldElem pow(FieldElem a, long long e) const;

    // Frobenius x -> x^p and its iterates.
    FieldElem frob(FieldElem a, int times = 1) const;

    // eta^j for any integer j (reduced mod N).
    FieldElem exp(long long j) const;
    // discrete log of a nonzero element; throws on zero.
    std::uint32_t log(FieldElem a) const;

    // absolute trace F_{p^m} -> F_p (result embedded in this field)
    FieldElem trace(FieldElem a) const { return {tr_tab_[a.v]}; }
    // trace F_{p^m} -> F_{p^s} for s | m
    FieldElem rel_trace(FieldElem a, int sub_degree) const;
    // F_p basis of the kernel of rel_trace(., sub_degree): m - sub_degree
    // elements, linearly independent over F_p.
    std::vector<FieldElem> rel_trace_kernel_basis(int sub_degree) const;

    bool in_base(FieldElem a) const { return a.v < static_cast<std::uint32_t>(p_); }
    int base_value(FieldElem a) const;            // throws unless in_base
    FieldElem from_base(int a) const;             // a mod p embedded

    // polynomial-basis coordinate i of a (integer in [0, p))
    int coeff(FieldElem a, int i) const;
    FieldElem from_coeffs(const std::vector<int>& c) const;

    // "p^m/c0,c1,...,cm" (modulus low-degree-first, monic)
    std::string describe() const;
    static FieldRef parse(const std::string& text);

    // Element rendering used by every text format: "0" or "e<log>".
    std::string elem_str(FieldElem a) const;
    FieldElem elem_parse(const std::string& tok) const;

    // Base field F_p as its own Field (this when m == 1).
    const Field& base() const { return m_ == 1 ? *this : *base_; }
    FieldRef base_ref() const;

    bool same(const Field& o) const;

private:
    Field() = default;
    void build_tables();

    int p_ = 0, m_ = 0;
    std::uint32_t q_ = 0, n_ = 0;
    std::vector<int> modulus_;
    FieldElem eta_{0};
    std::vector<std::uint32_t> exp_;   // size 2N, eta^j at index j
    std::vector<std::uint32_t> log_;   // size q, undefined at 0
    std::vector<std::uint32_t> tr_tab_; // size q, trace as base value
    FieldRef base_;
};

bool is_prime(int n);

} // namespace grstwist

#endif

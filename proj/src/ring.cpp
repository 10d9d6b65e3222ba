#include "grstwist/ring.hpp"

#include "grstwist/cosets.hpp"

#include <stdexcept>

namespace grstwist {

PolyR::PolyR(FieldRef field)
    : field_(std::move(field)), c_(field_->units(), FieldElem{0}) {}

PolyR PolyR::monomial(FieldRef field, std::uint32_t exponent, FieldElem coeff) {
    PolyR f(std::move(field));
    f.set_coeff(exponent, coeff);
    return f;
}

PolyR PolyR::from_support(FieldRef field, const std::vector<std::uint32_t>& exponents) {
    PolyR f(field);
    for (auto e : exponents) f.set_coeff(e, field->one());
    return f;
}

int PolyR::degree() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        if (c_[i].v != 0) return i;
    return -1;
}

std::vector<std::uint32_t> PolyR::support() const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < length(); ++i)
        if (c_[i].v != 0) s.push_back(i);
    return s;
}

PolyR PolyR::add(const PolyR& o) const {
    if (!field_->same(*o.field_)) throw std::invalid_argument("mixed fields");
    PolyR r(field_);
    for (std::uint32_t i = 0; i < length(); ++i) r.c_[i] = field_->add(c_[i], o.c_[i]);
    return r;
}

PolyR PolyR::sub(const PolyR& o) const {
    if (!field_->same(*o.field_)) throw std::invalid_argument("mixed fields");
    PolyR r(field_);
    for (std::uint32_t i = 0; i < length(); ++i) r.c_[i] = field_->sub(c_[i], o.c_[i]);
    return r;
}

PolyR PolyR::scale(FieldElem s) const {
    PolyR r(field_);
    for (std::uint32_t i = 0; i < length(); ++i) r.c_[i] = field_->mul(c_[i], s);
    return r;
}

PolyR PolyR::mul(const PolyR& o) const {
    if (!field_->same(*o.field_)) throw std::invalid_argument("mixed fields");
    const std::uint32_t n = length();
    PolyR r(field_);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (c_[i].v == 0) continue;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (o.c_[j].v == 0) continue;
            std::uint32_t k = i + j;
            if (k >= n) k -= n;
            r.c_[k] = field_->add(r.c_[k], field_->mul(c_[i], o.c_[j]));
        }
    }
    return r;
}

PolyR PolyR::frobenius() const {
    const std::uint32_t n = length();
    const std::uint32_t p = static_cast<std::uint32_t>(field_->p());
    PolyR r(field_);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (c_[i].v == 0) continue;
        std::uint32_t k = static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) * p % n);
        r.c_[k] = field_->add(r.c_[k], field_->frob(c_[i]));
    }
    return r;
}

FieldElem PolyR::eval_exp(std::uint32_t j) const {
    const std::uint32_t n = length();
    FieldElem acc{0};
    for (std::uint32_t i = 0; i < n; ++i) {
        if (c_[i].v == 0) continue;
        std::uint64_t e = static_cast<std::uint64_t>(i) * j % n;
        acc = field_->add(acc, field_->mul(c_[i], field_->exp(static_cast<long long>(e))));
    }
    return acc;
}

FieldElem PolyR::eval(FieldElem x) const {
    if (x.v == 0) {
        FieldElem acc = c_[0];
        return acc;
    }
    return eval_exp(field_->log(x));
}

std::vector<FieldElem> PolyR::values() const {
    const std::uint32_t n = length();
    std::vector<FieldElem> out(n);
    for (std::uint32_t j = 0; j < n; ++j) out[j] = eval_exp(j);
    return out;
}

PolyR interpolate(FieldRef field, const std::vector<FieldElem>& values) {
    const std::uint32_t n = field->units();
    if (values.size() != n)
        throw std::invalid_argument("interpolation needs exactly N values");
    // inverse DFT over <eta>: c_d = N^{-1} sum_j values_j eta^{-jd}, and
    // N = p^m - 1 = -1 in F_p, so N^{-1} = -1
    PolyR f(field);
    for (std::uint32_t d = 0; d < n; ++d) {
        FieldElem acc{0};
        for (std::uint32_t j = 0; j < n; ++j) {
            if (values[j].v == 0) continue;
            std::uint64_t e = static_cast<std::uint64_t>(j) * d % n;
            acc = field->add(acc, field->mul(values[j], field->exp(-static_cast<long long>(e))));
        }
        f.set_coeff(d, field->neg(acc));
    }
    return f;
}

PolyR trace_lift(const PolyR& f) {
    PolyR acc = f;
    PolyR cur = f;
    for (int i = 1; i < f.field().degree(); ++i) {
        cur = cur.frobenius();
        acc = acc.add(cur);
    }
    return acc;
}

CyclotomicCheck is_cyclotomic(const PolyR& g) {
    return {g.frobenius() == g, "frobenius-fixed (g^p = g)"};
}

std::vector<std::uint32_t> zero_set(const PolyR& g) {
    std::vector<std::uint32_t> z;
    for (std::uint32_t j = 0; j < g.length(); ++j)
        if (g.eval_exp(j).v == 0) z.push_back(j);
    return z;
}

PolyR indicator_form(const PolyR& g) {
    if (!is_cyclotomic(g))
        throw std::invalid_argument("indicator form requires a cyclotomic polynomial");
    const auto& F = g.field();
    std::vector<FieldElem> vals = g.values();
    for (auto& v : vals)
        if (v.v != 0) v = F.one();
    return interpolate(g.field_ref(), vals);
}

std::map<std::uint32_t, PolyR> coset_decompose(const PolyR& f) {
    std::map<std::uint32_t, PolyR> out;
    for (std::uint32_t i : f.support()) {
        std::uint32_t b = coset_of(f.field(), i).rep;
        auto it = out.find(b);
        if (it == out.end()) it = out.emplace(b, PolyR(f.field_ref())).first;
        it->second.set_coeff(i, f.coeff(i));
    }
    return out;
}

PolyR cyclotomic_component(FieldRef field, std::uint32_t b, FieldElem alpha) {
    const std::uint32_t n = field->units();
    if (b >= n || coset_of(*field, b).rep != b)
        throw std::invalid_argument("b must be a minimal coset representative");
    PolyR f(field);
    if (alpha.v == 0) return f;
    std::uint64_t e = b;
    FieldElem a = alpha;
    for (int i = 0; i < field->degree(); ++i) {
        std::uint32_t idx = static_cast<std::uint32_t>(e);
        f.set_coeff(idx, field->add(f.coeff(idx), a));
        e = e * static_cast<std::uint32_t>(field->p()) % n;
        a = field->frob(a);
    }
    return f;
}

} // namespace grstwist

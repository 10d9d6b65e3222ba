#include "grstwist/bound.hpp"

#include "grstwist/cosets.hpp"

#include <algorithm>
#include <stdexcept>

namespace grstwist {

std::vector<PolyR> kernel_basis_for_coset(FieldRef field, std::uint32_t b) {
    const Field& f = *field;
    CycCoset coset = coset_of(f, b);
    if (coset.rep != b) throw std::invalid_argument("b must be a minimal coset representative");
    const int m = f.degree();
    const int nb = coset.size();
    const std::uint32_t n = f.units();
    std::vector<PolyR> out;
    out.reserve(static_cast<std::size_t>(m) * (nb - 1) + (m - nb));
    for (int kappa = 0; kappa < m; ++kappa) {
        std::uint64_t shifted_exp = b;
        std::uint64_t shifted_log = kappa;
        for (int l = 1; l <= nb - 1; ++l) {
            shifted_exp = shifted_exp * static_cast<std::uint32_t>(f.p()) % n;
            shifted_log = shifted_log * static_cast<std::uint32_t>(f.p()) % n;
            PolyR g = PolyR::monomial(field, b, f.exp(kappa));
            g = g.sub(PolyR::monomial(field, static_cast<std::uint32_t>(shifted_exp),
                                      f.exp(static_cast<long long>(shifted_log))));
            out.push_back(std::move(g));
        }
    }
    for (FieldElem gamma : f.rel_trace_kernel_basis(nb))
        out.push_back(PolyR::monomial(field, b, gamma));
    return out;
}

std::vector<int> trace_rank_profile(const Field& field,
                                    const std::vector<std::uint32_t>& point_exps,
                                    const std::vector<FieldElem>& weights, int max_t) {
    const int p = field.p();
    const int m = field.degree();
    const std::uint32_t nn = field.units();
    const std::size_t n = point_exps.size();
    if (!weights.empty() && weights.size() != n)
        throw std::invalid_argument("weight vector length mismatch");
    if (max_t < 0) throw std::invalid_argument("negative degree bound");

    // trace of eta^e as a base value, duplicated so e + c never needs a mod
    std::vector<std::uint8_t> tr_exp(2 * nn);
    for (std::uint32_t e = 0; e < nn; ++e) {
        tr_exp[e] = static_cast<std::uint8_t>(field.trace(field.exp(e)).v);
        tr_exp[nn + e] = tr_exp[e];
    }
    // small mod-p helpers
    std::vector<std::uint8_t> red(static_cast<std::size_t>(p) * p, 0);
    for (std::size_t x = 0; x < red.size(); ++x) red[x] = static_cast<std::uint8_t>(x % p);
    std::vector<std::uint8_t> inv_mod(p, 0);
    for (int a = 1; a < p; ++a)
        for (int t = 1; t < p; ++t)
            if (a * t % p == 1) inv_mod[a] = static_cast<std::uint8_t>(t);

    std::vector<std::uint32_t> cursor(n);  // log of w_r * (eta^{j_r})^d
    for (std::size_t r = 0; r < n; ++r) {
        std::uint32_t base = 0;
        if (!weights.empty()) {
            if (weights[r].v == 0) throw std::invalid_argument("zero weight");
            base = field.log(weights[r]);
        }
        cursor[r] = base;
        if (point_exps[r] >= nn) throw std::invalid_argument("point exponent out of range");
    }

    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<int> pivot_of(n + 1, -1);
    int rank = 0;
    std::vector<int> profile(static_cast<std::size_t>(max_t) + 1, 0);
    std::vector<std::uint8_t> v(n);

    for (int t = 1; t <= max_t; ++t) {
        if (rank < static_cast<int>(n)) {
            for (int c = 0; c < m; ++c) {
                for (std::size_t r = 0; r < n; ++r)
                    v[r] = tr_exp[cursor[r] + static_cast<std::uint32_t>(c)];
                // echelon insert
                std::size_t col = 0;
                while (col < n) {
                    if (v[col] == 0) { ++col; continue; }
                    int pr = pivot_of[col];
                    if (pr < 0) {
                        int s = inv_mod[v[col]];
                        for (std::size_t i = col; i < n; ++i)
                            v[i] = red[static_cast<std::size_t>(v[i]) * s];
                        pivot_of[col] = static_cast<int>(rows.size());
                        rows.push_back(v);
                        ++rank;
                        break;
                    }
                    const std::uint8_t* pivot = rows[static_cast<std::size_t>(pr)].data();
                    int neg = (p - v[col]) % p;
                    for (std::size_t i = col; i < n; ++i)
                        v[i] = red[v[i] + static_cast<std::size_t>(neg) * pivot[i]];
                    ++col;
                }
            }
            // advance every cursor by its point exponent for the next degree
            for (std::size_t r = 0; r < n; ++r) {
                cursor[r] += point_exps[r];
                if (cursor[r] >= nn) cursor[r] -= nn;
            }
        }
        profile[static_cast<std::size_t>(t)] = rank;
    }
    return profile;
}

long long trace_kernel_dim(const PolyR& g, int deg_bound) {
    if (g.is_zero()) throw std::invalid_argument("twist polynomial must be nonzero");
    if (deg_bound < 0 || static_cast<std::uint32_t>(deg_bound) > g.length())
        throw std::invalid_argument("degree bound out of range");
    std::vector<std::uint32_t> pts;
    std::vector<FieldElem> w;
    for (std::uint32_t j = 0; j < g.length(); ++j) {
        FieldElem v = g.eval_exp(j);
        if (v.v != 0) {
            pts.push_back(j);
            w.push_back(v);
        }
    }
    auto profile = trace_rank_profile(g.field(), pts, w, deg_bound);
    return static_cast<long long>(g.field().degree()) * deg_bound - profile[deg_bound];
}

long long trace_kernel_dim(const LinearCode& c) {
    const Field& f = c.field();
    const int m = f.degree();
    const std::size_t n = c.length();
    FieldRef base = f.base_ref();
    // unknowns: the F_p coordinates of a word x; constraints: x lies in c
    // (dual checks expanded over the basis) and every coordinate has
    // trace zero
    Mat checks = dual(c).reduced();
    Mat sys(base, 0, n * static_cast<std::size_t>(m));
    std::vector<FieldElem> row(n * static_cast<std::size_t>(m));
    for (std::size_t r = 0; r < checks.rows(); ++r)
        for (int out = 0; out < m; ++out) {
            std::fill(row.begin(), row.end(), FieldElem{0});
            for (std::size_t i = 0; i < n; ++i)
                for (int cc = 0; cc < m; ++cc) {
                    FieldElem coef = f.mul(checks.at(r, i), f.exp(cc));
                    row[i * m + cc] = base->from_base(f.coeff(coef, out));
                }
            sys.append_row(row);
        }
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), FieldElem{0});
        for (int cc = 0; cc < m; ++cc)
            row[i * m + cc] = base->from_base(f.base_value(f.trace(f.exp(cc))));
        sys.append_row(row);
    }
    return static_cast<long long>(sys.nullspace().rows());
}

std::vector<long long> window_term_prefix(const Field& field) {
    const std::uint32_t n = field.units();
    const int m = field.degree();
    std::vector<long long> prefix(n + 1, 0);
    std::vector<int> coset_size(n, 0);
    std::vector<bool> is_rep(n, false);
    for (const auto& c : minimal_cosets(field)) {
        is_rep[c.rep] = true;
        for (auto e : c.elements) coset_size[e] = c.size();
    }
    for (std::uint32_t e = 0; e < n; ++e)
        prefix[e + 1] = prefix[e] + (is_rep[e] ? m - coset_size[e] : m);
    return prefix;
}

BoundReport dimension_bound(const Field& field, const std::set<std::uint32_t>& zero_exps,
                            int k, bool with_exact) {
    const std::uint32_t nn = field.units();
    const int m = field.degree();
    for (auto e : zero_exps) {
        if (e >= nn) throw std::invalid_argument("zero-set exponent out of range");
        std::uint32_t img = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(e) * static_cast<std::uint32_t>(field.p()) % nn);
        if (!zero_exps.count(img))
            throw std::invalid_argument("zero set is not closed under multiplication by p");
    }
    if (zero_exps.size() >= nn)
        throw std::invalid_argument("zero set covers every nonzero point (empty code)");
    const int n = static_cast<int>(nn - zero_exps.size());
    if (k < 0 || k > n) throw std::invalid_argument("k out of range");

    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.m = m;
    rep.deg_bound = n - k;
    rep.naive = static_cast<long long>(n) - static_cast<long long>(m) * (n - k);
    const std::uint32_t window = static_cast<std::uint32_t>(n - k);
    long long sum = 0;
    for (const auto& c : minimal_cosets(field)) {
        if (c.rep >= window) continue;
        int in_window = 0;
        for (auto e : c.elements) in_window += e < window;
        long long term = static_cast<long long>(m) * (in_window - 1) + (m - c.size());
        rep.terms.push_back({c.rep, c.size(), in_window, term});
        sum += term;
    }
    rep.bound = rep.naive + sum;

    if (with_exact) {
        std::vector<std::uint32_t> pts;
        for (std::uint32_t j = 0; j < nn; ++j)
            if (!zero_exps.count(j)) pts.push_back(j);
        auto profile = trace_rank_profile(field, pts, {}, n - k);
        rep.kernel_dim = static_cast<long long>(m) * (n - k) - profile[static_cast<std::size_t>(n - k)];
        rep.exact_dim = n - profile[static_cast<std::size_t>(n - k)];
        rep.strict = *rep.exact_dim > rep.bound;
    }
    return rep;
}

} // namespace grstwist

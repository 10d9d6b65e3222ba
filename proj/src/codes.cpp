#include "grstwist/codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grstwist {

LinearCode::LinearCode(Mat generators, int d_lb, std::string d_provenance)
    : gen_(std::move(generators)),
      reduced_(gen_.rref()),
      d_lb_(d_lb),
      d_prov_(std::move(d_provenance)) {}

void GrsSpec::validate() const {
    if (!field) throw std::invalid_argument("GRS spec has no field");
    if (point_exps.empty()) throw std::invalid_argument("GRS spec needs evaluation points");
    if (twist.size() != point_exps.size())
        throw std::invalid_argument("twist vector length must match the point count");
    if (k > point_exps.size())
        throw std::invalid_argument("GRS dimension exceeds the length");
    std::set<std::uint32_t> seen;
    for (auto e : point_exps) {
        if (e >= field->units())
            throw std::invalid_argument("evaluation exponent out of range");
        if (!seen.insert(e).second)
            throw std::invalid_argument("evaluation points must be distinct");
    }
    if (!std::is_sorted(point_exps.begin(), point_exps.end()))
        throw std::invalid_argument("evaluation exponents must be ascending");
    for (auto v : twist)
        if (v.v == 0) throw std::invalid_argument("twist entries must be nonzero");
}

GrsSpec grs_spec_from_poly(const PolyR& g, std::size_t k) {
    GrsSpec s;
    s.field = g.field_ref();
    for (std::uint32_t j = 0; j < g.length(); ++j) {
        FieldElem v = g.eval_exp(j);
        if (v.v != 0) {
            s.point_exps.push_back(j);
            s.twist.push_back(v);
        }
    }
    s.k = k;
    s.validate();
    return s;
}

PolyR twist_poly(const GrsSpec& spec) {
    spec.validate();
    std::vector<FieldElem> vals(spec.field->units(), FieldElem{0});
    for (std::size_t i = 0; i < spec.n(); ++i) vals[spec.point_exps[i]] = spec.twist[i];
    return interpolate(spec.field, vals);
}

LinearCode grs(const GrsSpec& spec) {
    spec.validate();
    const Field& f = *spec.field;
    const std::size_t n = spec.n();
    Mat g(spec.field, spec.k, n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElem point = f.exp(spec.point_exps[i]);
        FieldElem acc = spec.twist[i];
        for (std::size_t j = 0; j < spec.k; ++j) {
            g.at(j, i) = acc;
            acc = f.mul(acc, point);
        }
    }
    return LinearCode(std::move(g), static_cast<int>(n - spec.k) + 1, "design (MDS)");
}

GrsSpec grs_dual_closed_form(const GrsSpec& spec) {
    spec.validate();
    const Field& f = *spec.field;
    const std::size_t n = spec.n();
    GrsSpec d;
    d.field = spec.field;
    d.point_exps = spec.point_exps;
    d.k = n - spec.k;
    d.twist.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElem ai = f.exp(spec.point_exps[i]);
        FieldElem prod = spec.twist[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            prod = f.mul(prod, f.sub(ai, f.exp(spec.point_exps[j])));
        }
        d.twist[i] = f.inv(prod);
    }
    return d;
}

LinearCode dual(const LinearCode& c) {
    return LinearCode(c.reduced().nullspace(), 1, "trivial");
}

LinearCode trace_code(const LinearCode& c) {
    const Field& f = c.field();
    if (f.degree() == 1) return LinearCode(c.reduced(), 1, "trivial");
    FieldRef base = f.base_ref();
    const std::size_t n = c.length();
    Mat rows(base, 0, n);
    for (std::size_t r = 0; r < c.reduced().rows(); ++r) {
        for (int e = 0; e < f.degree(); ++e) {
            FieldElem scale = f.exp(e);
            std::vector<FieldElem> out(n);
            for (std::size_t i = 0; i < n; ++i) {
                FieldElem t = f.trace(f.mul(scale, c.reduced().at(r, i)));
                out[i] = base->from_base(f.base_value(t));
            }
            rows.append_row(out);
        }
    }
    return LinearCode(std::move(rows), 1, "trivial");
}

LinearCode subfield_subcode(const LinearCode& c, SfscMethod method) {
    const Field& f = c.field();
    if (f.degree() == 1)
        return LinearCode(c.reduced(), c.d_lb(), "inherited");
    if (method == SfscMethod::TraceDual) {
        LinearCode sub = dual(trace_code(dual(c)));
        return LinearCode(sub.reduced(), c.d_lb(), "inherited");
    }
    // direct kernel: expand each parity check into m constraints over F_p
    FieldRef base = f.base_ref();
    const std::size_t n = c.length();
    Mat checks = dual(c).reduced();
    Mat constraints(base, 0, n);
    for (std::size_t r = 0; r < checks.rows(); ++r)
        for (int coord = 0; coord < f.degree(); ++coord) {
            std::vector<FieldElem> row(n);
            for (std::size_t i = 0; i < n; ++i)
                row[i] = base->from_base(f.coeff(checks.at(r, i), coord));
            constraints.append_row(row);
        }
    return LinearCode(constraints.nullspace(), c.d_lb(), "inherited");
}

namespace {

std::vector<std::size_t> keep_columns(std::size_t n, const std::vector<std::size_t>& coords) {
    std::set<std::size_t> drop;
    for (auto c : coords) {
        if (c < 1 || c > n) throw std::invalid_argument("coordinate out of range");
        if (!drop.insert(c - 1).second)
            throw std::invalid_argument("coordinates must be distinct");
    }
    if (drop.size() >= n)
        throw std::invalid_argument("cannot remove every coordinate");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!drop.count(i)) keep.push_back(i);
    return keep;
}

} // namespace

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& coords) {
    if (coords.empty()) return c;
    auto keep = keep_columns(c.length(), coords);
    int d = std::max(1, c.d_lb() - static_cast<int>(coords.size()));
    return LinearCode(c.reduced().select_cols(keep), d, "inherited");
}

LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& coords) {
    if (coords.empty()) return c;
    auto keep = keep_columns(c.length(), coords);
    const Mat& g = c.reduced();
    // combinations x of generator rows with (x g) zero on the dropped
    // coordinates: left kernel of the dropped-column block
    Mat block_t(c.field_ref(), coords.size(), g.rows());
    std::vector<std::size_t> dropped;
    for (auto cd : coords) dropped.push_back(cd - 1);
    std::sort(dropped.begin(), dropped.end());
    for (std::size_t s = 0; s < dropped.size(); ++s)
        for (std::size_t r = 0; r < g.rows(); ++r) block_t.at(s, r) = g.at(r, dropped[s]);
    Mat combos = block_t.nullspace();
    Mat rows(c.field_ref(), combos.rows(), keep.size());
    const Field& f = c.field();
    for (std::size_t r = 0; r < combos.rows(); ++r)
        for (std::size_t i = 0; i < keep.size(); ++i) {
            FieldElem acc{0};
            for (std::size_t j = 0; j < g.rows(); ++j)
                acc = f.add(acc, f.mul(combos.at(r, j), g.at(j, keep[i])));
            rows.at(r, i) = acc;
        }
    return LinearCode(std::move(rows), c.d_lb(), "inherited");
}

int min_distance_exact(const LinearCode& c, std::uint64_t budget) {
    const Field& f = c.field();
    const std::size_t k = c.dim();
    if (k == 0) throw std::domain_error("zero code has no nonzero codewords");
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count *= f.order();
        if (count > budget)
            throw std::domain_error("codeword count exceeds the enumeration budget; use d_lb");
    }
    // enumerate the F_p span of {eta^e * row_j} with a base-p odometer; each
    // unit step (and each rollover) adds one basis row to the running word
    const int p = f.p(), m = f.degree();
    const std::size_t n = c.length();
    const std::size_t digits = k * static_cast<std::size_t>(m);
    std::vector<std::vector<FieldElem>> basis;
    basis.reserve(digits);
    for (std::size_t j = 0; j < k; ++j)
        for (int e = 0; e < m; ++e) {
            std::vector<FieldElem> row(n);
            for (std::size_t i = 0; i < n; ++i)
                row[i] = f.mul(f.exp(e), c.reduced().at(j, i));
            basis.push_back(std::move(row));
        }
    std::vector<int> digit(digits, 0);
    std::vector<FieldElem> word(n, FieldElem{0});
    int best = static_cast<int>(n) + 1;
    std::uint64_t total = count - 1;
    for (std::uint64_t step = 0; step < total; ++step) {
        std::size_t pos = 0;
        for (;;) {
            const auto& row = basis[pos];
            // one add per unit step; the wrap p-1 -> 0 is the same add,
            // since p * row = 0
            for (std::size_t i = 0; i < n; ++i) word[i] = f.add(word[i], row[i]);
            if (++digit[pos] < p) break;
            digit[pos] = 0;
            ++pos;
        }
        int w = 0;
        for (std::size_t i = 0; i < n; ++i) w += word[i].v != 0;
        if (w < best) best = w;
    }
    return best;
}

std::vector<FieldElem> monomial_equivalence(const PolyR& g1, const PolyR& g2) {
    if (!is_cyclotomic(g1) || !is_cyclotomic(g2))
        throw std::invalid_argument("monomial equivalence needs cyclotomic polynomials");
    if (!g1.field().same(g2.field()))
        throw std::invalid_argument("mixed fields");
    const Field& f = g1.field();
    std::vector<FieldElem> diag;
    for (std::uint32_t j = 0; j < g1.length(); ++j) {
        FieldElem a = g1.eval_exp(j), b = g2.eval_exp(j);
        if ((a.v == 0) != (b.v == 0))
            throw std::invalid_argument("zero sets differ");
        if (a.v != 0) diag.push_back(f.mul(f.inv(a), b));
    }
    return diag;
}

LinearCode apply_diagonal(const LinearCode& c, const std::vector<FieldElem>& diag) {
    if (diag.size() != c.length()) throw std::invalid_argument("diagonal length mismatch");
    const Field& f = c.field();
    Mat g = c.reduced();
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t i = 0; i < g.cols(); ++i) g.at(r, i) = f.mul(g.at(r, i), diag[i]);
    return LinearCode(std::move(g), c.d_lb(), c.d_provenance());
}

} // namespace grstwist

#include "grstwist/galois.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grstwist {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 20;

// --- F_p[x] helpers on coefficient vectors (constant term first) used only
// --- while vetting a modulus, before any field table exists.

int poly_deg(const std::vector<int>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& f, int p) {
    int m = poly_deg(f);
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // f is monic, so reduction is plain long division
    for (int d = static_cast<int>(prod.size()) - 1; d >= m; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i)
            prod[d - m + i] = ((prod[d - m + i] - c * f[i]) % p + p * p) % p;
    }
    prod.resize(m > 0 ? m : 1);
    return prod;
}

std::vector<int> poly_powmod(std::vector<int> base, unsigned long long e,
                             const std::vector<int>& f, int p) {
    std::vector<int> r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, int p) {
    auto inv_mod = [p](int x) {
        int r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (poly_deg(b) >= 0) {
        int db = poly_deg(b);
        int lead = inv_mod(b[db]);
        while (poly_deg(a) >= db) {
            int da = poly_deg(a);
            int c = a[da] * lead % p;
            if (c != 0)
                for (int i = 0; i <= db; ++i)
                    a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p * p) % p;
            else
                a[da] = 0;
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<int> prime_factors(std::uint64_t n) {
    std::vector<int> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(static_cast<int>(n));
    return out;
}

bool is_irreducible(const std::vector<int>& f, int p, int m) {
    if (poly_deg(f) != m) return false;
    std::vector<int> x{0, 1};
    // x^{p^m} == x mod f (both sides reduced; x itself is a constant when
    // the modulus has degree 1)
    unsigned long long pm = 1;
    for (int i = 0; i < m; ++i) pm *= static_cast<unsigned>(p);
    auto xpm = poly_powmod(x, pm, f, p);
    auto xred = poly_powmod(x, 1, f, p);
    if (xpm != xred) return false;
    // gcd(x^{p^{m/l}} - x, f) == 1 for every prime l | m
    for (int l : prime_factors(static_cast<std::uint64_t>(m))) {
        unsigned long long e = 1;
        for (int i = 0; i < m / l; ++i) e *= static_cast<unsigned>(p);
        auto g = poly_powmod(x, e, f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        auto d = poly_gcd(g, f, p);
        if (poly_deg(d) != 0) return false;
    }
    return true;
}

bool is_primitive(const std::vector<int>& f, int p, int m, std::uint32_t n_units) {
    if (!is_irreducible(f, p, m)) return false;
    std::vector<int> x{0, 1};
    auto full = poly_powmod(x, n_units, f, p);
    if (poly_deg(full) != 0 || full[0] != 1) return false;  // rejects f = x
    for (int l : prime_factors(n_units)) {
        auto r = poly_powmod(x, n_units / static_cast<unsigned>(l), f, p);
        if (poly_deg(r) == 0 && r[0] == 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldRef Field::make(int p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > static_cast<long long>(kMaxOrder))
            throw std::invalid_argument("field size p^m exceeds 2^20");
    }
    std::uint32_t n_units = static_cast<std::uint32_t>(q) - 1;
    // smallest primitive monic polynomial, candidates ordered by the
    // coefficient vector read as base-p digits, constant term least
    // significant (so 2^8 selects 1,0,1,1,1,0,0,0,1 = x^8+x^4+x^3+x^2+1)
    std::vector<int> cand(m + 1, 0);
    cand[m] = 1;
    std::vector<long long> weight(m, 1);
    for (int j = 1; j < m; ++j) weight[j] = weight[j - 1] * p;
    for (long long idx = 0; idx < q; ++idx) {
        for (int j = 0; j < m; ++j) cand[j] = static_cast<int>(idx / weight[j] % p);
        if (is_primitive(cand, p, m, n_units)) return make(p, m, cand);
    }
    throw std::logic_error("no primitive polynomial found"); // unreachable
}

FieldRef Field::make(int p, int m, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > static_cast<long long>(kMaxOrder))
            throw std::invalid_argument("field size p^m exceeds 2^20");
    }
    if (static_cast<int>(modulus.size()) != m + 1)
        throw std::invalid_argument("modulus must have degree m");
    std::vector<int> f(modulus);
    for (int& c : f) c = (c % p + p) % p;
    if (f[m] != 1) throw std::invalid_argument("modulus must be monic");
    std::uint32_t n_units = static_cast<std::uint32_t>(q) - 1;
    if (!is_irreducible(f, p, m))
        throw std::invalid_argument("modulus is not irreducible over F_p");
    if (!is_primitive(f, p, m, n_units))
        throw std::invalid_argument("modulus is not primitive (x does not generate the units)");

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = static_cast<std::uint32_t>(q);
    field->n_ = n_units;
    field->modulus_ = f;
    field->build_tables();
    if (m > 1) field->base_ = Field::make(p, 1);
    return field;
}

void Field::build_tables() {
    const int p = p_, m = m_;
    std::vector<std::uint32_t> pow_p(m + 1, 1);
    for (int i = 1; i <= m; ++i) pow_p[i] = pow_p[i - 1] * static_cast<std::uint32_t>(p);

    eta_ = m == 1 ? FieldElem{static_cast<std::uint32_t>((p - modulus_[0]) % p)}
                  : FieldElem{static_cast<std::uint32_t>(p)}; // the class of x

    exp_.assign(2 * static_cast<std::size_t>(n_), 0);
    log_.assign(q_, 0);
    std::vector<int> d(m, 0);
    d[0] = 1;
    for (std::uint32_t j = 0; j < n_; ++j) {
        std::uint32_t packed = 0;
        for (int i = 0; i < m; ++i) packed += static_cast<std::uint32_t>(d[i]) * pow_p[i];
        exp_[j] = packed;
        log_[packed] = j;
        // multiply by x: shift digits, fold x^m back via the modulus
        int top = d[m - 1];
        for (int i = m - 1; i > 0; --i) d[i] = d[i - 1];
        d[0] = 0;
        if (top != 0)
            for (int i = 0; i < m; ++i)
                d[i] = ((d[i] - top * modulus_[i]) % p + p * p) % p;
    }
    for (std::uint32_t j = 0; j < n_; ++j) exp_[n_ + j] = exp_[j];

    tr_tab_.assign(q_, 0);
    for (std::uint32_t v = 1; v < q_; ++v) {
        std::uint32_t lv = log_[v];
        FieldElem acc{0};
        std::uint64_t e = lv;
        for (int i = 0; i < m; ++i) {
            acc = add(acc, FieldElem{exp_[e % n_]});
            e = e * static_cast<std::uint32_t>(p) % n_;
        }
        tr_tab_[v] = acc.v; // lies in F_p, packed value < p
    }
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    if (p_ == 2) return {a.v ^ b.v};
    std::uint32_t r = 0, mul = 1, av = a.v, bv = b.v;
    const std::uint32_t p = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < m_; ++i) {
        std::uint32_t s = av % p + bv % p;
        if (s >= p) s -= p;
        r += s * mul;
        av /= p;
        bv /= p;
        mul *= p;
    }
    return {r};
}

FieldElem Field::neg(FieldElem a) const {
    if (p_ == 2) return a;
    std::uint32_t r = 0, mul = 1, av = a.v;
    const std::uint32_t p = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < m_; ++i) {
        std::uint32_t c = av % p;
        r += (c == 0 ? 0 : p - c) * mul;
        av /= p;
        mul *= p;
    }
    return {r};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {exp_[log_[a.v] + log_[b.v]]};
}

FieldElem Field::inv(FieldElem a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    return {exp_[n_ - log_[a.v]]};
}

FieldElem Field::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem Field::pow(FieldElem a, long long e) const {
    if (a.v == 0) {
        if (e < 0) throw std::domain_error("inverse of zero");
        return e == 0 ? one() : zero();
    }
    long long le = (static_cast<long long>(log_[a.v]) * (e % n_)) % n_;
    if (le < 0) le += n_;
    return {exp_[le]};
}

FieldElem Field::frob(FieldElem a, int times) const {
    if (a.v == 0) return a;
    int t = (times % m_ + m_) % m_;
    std::uint64_t e = log_[a.v];
    for (int i = 0; i < t; ++i) e = e * static_cast<std::uint32_t>(p_) % n_;
    return {exp_[e]};
}

FieldElem Field::exp(long long j) const {
    long long r = j % n_;
    if (r < 0) r += n_;
    return {exp_[r]};
}

std::uint32_t Field::log(FieldElem a) const {
    if (a.v == 0) throw std::domain_error("discrete log of zero");
    return log_[a.v];
}

FieldElem Field::rel_trace(FieldElem a, int sub_degree) const {
    if (sub_degree <= 0 || m_ % sub_degree != 0)
        throw std::invalid_argument("subfield degree must divide m");
    FieldElem acc{0};
    FieldElem cur = a;
    for (int i = 0; i < m_ / sub_degree; ++i) {
        acc = add(acc, cur);
        cur = frob(cur, sub_degree);
    }
    return acc;
}

std::vector<FieldElem> Field::rel_trace_kernel_basis(int sub_degree) const {
    if (sub_degree <= 0 || m_ % sub_degree != 0)
        throw std::invalid_argument("subfield degree must divide m");
    const int m = m_, p = p_;
    // columns: input coordinates, rows: output coordinates of rel_trace
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    std::vector<std::uint32_t> pow_p(m, 1);
    for (int i = 1; i < m; ++i) pow_p[i] = pow_p[i - 1] * static_cast<std::uint32_t>(p);
    for (int c = 0; c < m; ++c) {
        FieldElem basis{pow_p[c]};
        FieldElem im = rel_trace(basis, sub_degree);
        for (int r = 0; r < m; ++r) a[r][c] = coeff(im, r);
    }
    // Gaussian elimination; read the kernel off the free columns
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < m && rank < m; ++c) {
        int pr = -1;
        for (int r = rank; r < m; ++r)
            if (a[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[rank], a[pr]);
        int invl = 1;
        for (int t = 1; t < p; ++t)
            if (a[rank][c] * t % p == 1) { invl = t; break; }
        for (int j = 0; j < m; ++j) a[rank][j] = a[rank][j] * invl % p;
        for (int r = 0; r < m; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            int f = a[r][c];
            for (int j = 0; j < m; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p * p) % p;
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<FieldElem> out;
    for (int c = 0; c < m; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::uint32_t v = pow_p[c];
        for (int r = 0; r < rank; ++r) {
            int coef = a[r][c];
            if (coef != 0) v += static_cast<std::uint32_t>((p - coef) % p) * pow_p[pivot_col[r]];
        }
        out.push_back({v});
    }
    return out;
}

int Field::base_value(FieldElem a) const {
    if (!in_base(a)) throw std::domain_error("element does not lie in the base field");
    return static_cast<int>(a.v);
}

FieldElem Field::from_base(int a) const {
    int r = (a % p_ + p_) % p_;
    return {static_cast<std::uint32_t>(r)};
}

int Field::coeff(FieldElem a, int i) const {
    std::uint32_t v = a.v;
    for (int j = 0; j < i; ++j) v /= static_cast<std::uint32_t>(p_);
    return static_cast<int>(v % static_cast<std::uint32_t>(p_));
}

FieldElem Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > m_) throw std::invalid_argument("too many coordinates");
    std::uint32_t v = 0, mul = 1;
    for (int x : c) {
        v += static_cast<std::uint32_t>((x % p_ + p_) % p_) * mul;
        mul *= static_cast<std::uint32_t>(p_);
    }
    return {v};
}

std::string Field::describe() const {
    std::ostringstream os;
    os << p_ << '^' << m_ << '/';
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

FieldRef Field::parse(const std::string& text) {
    auto caret = text.find('^');
    auto slash = text.find('/');
    if (caret == std::string::npos || slash == std::string::npos || slash < caret)
        throw std::invalid_argument("field description must look like p^m/c0,c1,...,cm");
    int p = std::stoi(text.substr(0, caret));
    int m = std::stoi(text.substr(caret + 1, slash - caret - 1));
    std::vector<int> mod;
    std::istringstream is(text.substr(slash + 1));
    std::string tok;
    while (std::getline(is, tok, ',')) mod.push_back(std::stoi(tok));
    return make(p, m, mod);
}

std::string Field::elem_str(FieldElem a) const {
    if (a.v == 0) return "0";
    return "e" + std::to_string(log_[a.v]);
}

FieldElem Field::elem_parse(const std::string& tok) const {
    if (tok.empty()) throw std::invalid_argument("empty field element token");
    if (tok[0] == 'e') return exp(std::stoll(tok.substr(1)));
    long long v = std::stoll(tok);
    if (v < 0 || v >= p_)
        throw std::invalid_argument("integer field element must lie in [0, p)");
    return from_base(static_cast<int>(v));
}

FieldRef Field::base_ref() const {
    if (m_ == 1) return shared_from_this();
    return base_;
}

bool Field::same(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
}

} // namespace grstwist

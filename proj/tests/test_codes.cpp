#include <doctest.h>

#include "grstwist/codes.hpp"
#include "grstwist/cosets.hpp"
#include "grstwist/textio.hpp"
#include "testutil.hpp"

#include <set>

using namespace grstwist;

namespace {

// random cyclotomic polynomial with a prescribed zero set
PolyR random_cyclotomic_with_zeros(testutil::Rng& rng, FieldRef f,
                                   const std::set<std::uint32_t>& zeros) {
    std::vector<FieldElem> vals(f->units());
    for (std::uint32_t j = 0; j < f->units(); ++j)
        vals[j] = zeros.count(j) ? f->zero()
                                 : f->from_base(1 + static_cast<int>(rng.below(f->p() - 1)));
    return interpolate(f, vals);
}

} // namespace

TEST_CASE("grs basics") {
    auto f4 = Field::make(2, 2);
    GrsSpec rep;
    rep.field = f4;
    rep.point_exps = {0, 1, 2};
    rep.twist = {f4->one(), f4->one(), f4->one()};
    rep.k = 1;
    LinearCode c = grs(rep);
    CHECK(c.dim() == 1);
    CHECK(c.d_lb() == 3);
    CHECK(c.d_provenance() == "design (MDS)");
    for (std::size_t i = 0; i < 3; ++i) CHECK(c.reduced().at(0, i) == f4->one());

    rep.k = 3;  // the full space
    LinearCode full = grs(rep);
    CHECK(full.dim() == 3);
    CHECK(full.d_lb() == 1);
}

TEST_CASE("grs spec validation") {
    auto f8 = Field::make(2, 3);
    GrsSpec s;
    s.field = f8;
    s.point_exps = {0, 0, 1};
    s.twist = {f8->one(), f8->one(), f8->one()};
    s.k = 1;
    CHECK_THROWS(grs(s));  // duplicate points
    s.point_exps = {0, 1, 2};
    s.twist[1] = f8->zero();
    CHECK_THROWS(grs(s));  // zero twist
    s.twist[1] = f8->one();
    s.k = 4;
    CHECK_THROWS(grs(s));  // k > n
}

TEST_CASE("fig-5 twist polynomial gives length 100") {
    auto f125 = Field::make(5, 3);
    PolyR g = poly_parse(f125, "x^25 + x^5 + x");
    GrsSpec spec = grs_spec_from_poly(g, 34);
    CHECK(spec.n() == 100);
    CHECK(grs(spec).dim() == 34);
}

TEST_CASE("dual closed form matches the nullspace dual") {
    auto f4 = Field::make(2, 2);
    GrsSpec s;
    s.field = f4;
    s.point_exps = {0, 1, 2};
    s.twist = {f4->one(), f4->one(), f4->one()};
    s.k = 1;
    GrsSpec ds = grs_dual_closed_form(s);
    CHECK(ds.k == 2);
    CHECK(grs(ds).same_code(dual(grs(s))));

    testutil::Rng rng(201);
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}}) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 25; ++trial) {
            GrsSpec spec = testutil::random_grs_spec(rng, f);
            GrsSpec dspec = grs_dual_closed_form(spec);
            CHECK(grs(dspec).same_code(dual(grs(spec))));
            // involution up to the original row space
            GrsSpec back = grs_dual_closed_form(dspec);
            CHECK(back.k == spec.k);
            CHECK(grs(back).same_code(grs(spec)));
        }
    }
}

TEST_CASE("dual extremes and involution") {
    auto f9 = Field::make(3, 2);
    Mat full(f9, 2, 2);
    full.at(0, 0) = full.at(1, 1) = f9->one();
    LinearCode full_code(full, 1, "trivial");
    CHECK(dual(full_code).dim() == 0);
    CHECK(dual(dual(full_code)).same_code(full_code));

    Mat none(f9, 0, 4);
    LinearCode zero_code(none, 1, "trivial");
    CHECK(dual(zero_code).dim() == 4);

    testutil::Rng rng(203);
    for (int trial = 0; trial < 20; ++trial) {
        LinearCode c = testutil::random_code(rng, f9, 6, 3);
        CHECK(dual(dual(c)).same_code(c));
        CHECK(dual(c).dim() + c.dim() == c.length());
    }
}

TEST_CASE("trace code by direct expansion") {
    auto f4 = Field::make(2, 2);
    Mat g(f4, 1, 3);
    g.at(0, 0) = g.at(0, 1) = g.at(0, 2) = f4->one();
    LinearCode rep(g, 3, "design (MDS)");
    LinearCode tc = trace_code(rep);
    CHECK(tc.field().degree() == 1);
    CHECK(tc.dim() == 1);  // spans exactly {000, 111}
    CHECK(tc.reduced().at(0, 0) == tc.field().one());

    Mat none(f4, 0, 3);
    CHECK(trace_code(LinearCode(none, 1, "trivial")).dim() == 0);
}

TEST_CASE("Delsarte dimension identity on random codes") {
    testutil::Rng rng(205);
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {2, 4}}) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 4 + rng.below(8);
            std::size_t k = 1 + rng.below(n);
            LinearCode c = testutil::random_code(rng, f, n, k);
            // dim tr(C) + dim (C_perp n F_p^n) = n
            std::size_t lhs = trace_code(c).dim() + subfield_subcode(dual(c)).dim();
            CHECK(lhs == n);
        }
    }
}

TEST_CASE("subfield subcode: examples and the two routes") {
    auto f4 = Field::make(2, 2);
    Mat full(f4, 2, 2);
    full.at(0, 0) = full.at(1, 1) = f4->one();
    CHECK(subfield_subcode(LinearCode(full, 1, "trivial")).dim() == 2);

    Mat g(f4, 1, 3);
    g.at(0, 0) = g.at(0, 1) = g.at(0, 2) = f4->one();
    LinearCode rep(g, 3, "design (MDS)");
    LinearCode s1 = subfield_subcode(rep);
    LinearCode s2 = subfield_subcode(rep, SfscMethod::DirectKernel);
    CHECK(s1.dim() == 1);
    CHECK(s1.same_code(s2));
    CHECK(s1.d_lb() == 3);  // inherited
    CHECK(s1.d_provenance() == "inherited");

    testutil::Rng rng(207);
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}}) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t n = 4 + rng.below(8);
            std::size_t k = 1 + rng.below(n);
            LinearCode c = testutil::random_code(rng, f, n, k);
            LinearCode a = subfield_subcode(c);
            LinearCode b = subfield_subcode(c, SfscMethod::DirectKernel);
            CHECK(a.same_code(b));
            // naive bound
            long long naive = static_cast<long long>(n) -
                              static_cast<long long>(m) * (n - c.dim());
            CHECK(static_cast<long long>(a.dim()) >= naive);
        }
    }
}

TEST_CASE("puncture") {
    auto f2 = Field::make(2, 1);
    // even-weight code of length 4: [4, 3, 2]
    Mat g(f2, 3, 4);
    auto set = [&](std::size_t r, std::initializer_list<int> bits) {
        std::size_t c = 0;
        for (int b : bits) g.at(r, c++) = f2->from_base(b);
    };
    set(0, {1, 1, 0, 0});
    set(1, {0, 1, 1, 0});
    set(2, {0, 0, 1, 1});
    LinearCode even(g, 2, "exact");
    CHECK(puncture(even, {}).same_code(even));
    for (std::size_t coord = 1; coord <= 4; ++coord) {
        LinearCode p = puncture(even, {coord});
        CHECK(p.length() == 3);
        CHECK(p.dim() == 3);
        CHECK(p.d_lb() == 1);
        CHECK(min_distance_exact(p) == 1);
    }
    CHECK_THROWS(puncture(even, {5}));
    CHECK_THROWS(puncture(even, {1, 2, 3, 4}));
    CHECK_THROWS(puncture(even, {2, 2}));
}

TEST_CASE("shorten and the puncture/shorten duality") {
    auto f2 = Field::make(2, 1);
    Mat g(f2, 3, 4);
    auto set = [&](std::size_t r, std::initializer_list<int> bits) {
        std::size_t c = 0;
        for (int b : bits) g.at(r, c++) = f2->from_base(b);
    };
    set(0, {1, 1, 0, 0});
    set(1, {0, 1, 1, 0});
    set(2, {0, 0, 1, 1});
    LinearCode even(g, 2, "exact");
    CHECK(shorten(even, {}).same_code(even));
    LinearCode s = shorten(even, {4});
    CHECK(s.length() == 3);
    CHECK(s.dim() == 2);
    CHECK(s.d_lb() == 2);

    testutil::Rng rng(209);
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t n = 4 + rng.below(8);
            std::size_t k = 1 + rng.below(n - 1);
            LinearCode c = testutil::random_code(rng, f, n, k);
            std::set<std::size_t> coords;
            std::size_t t = 1 + rng.below(n - 1);
            while (coords.size() < t) coords.insert(1 + rng.below(n));
            std::vector<std::size_t> s_coords(coords.begin(), coords.end());
            // (C_perp)_S = (C^S)_perp
            CHECK(shorten(dual(c), s_coords).same_code(dual(puncture(c, s_coords))));
        }
    }
}

TEST_CASE("exact minimum distance") {
    auto f2 = Field::make(2, 1);
    Mat rep(f2, 1, 5);
    for (int i = 0; i < 5; ++i) rep.at(0, i) = f2->one();
    CHECK(min_distance_exact(LinearCode(rep, 5, "design (MDS)")) == 5);

    // [7,4] Hamming code
    Mat h(f2, 4, 7);
    auto set = [&](std::size_t r, std::initializer_list<int> bits) {
        std::size_t c = 0;
        for (int b : bits) h.at(r, c++) = f2->from_base(b);
    };
    set(0, {1, 0, 0, 0, 1, 1, 0});
    set(1, {0, 1, 0, 0, 0, 1, 1});
    set(2, {0, 0, 1, 0, 1, 1, 1});
    set(3, {0, 0, 0, 1, 1, 0, 1});
    CHECK(min_distance_exact(LinearCode(h, 1, "trivial")) == 3);

    // budget refusal
    auto f16 = Field::make(2, 4);
    testutil::Rng rng(211);
    LinearCode big = testutil::random_code(rng, f16, 10, 8);
    CHECK_THROWS(min_distance_exact(big, 1 << 10));
    Mat none(f2, 0, 3);
    CHECK_THROWS(min_distance_exact(LinearCode(none, 1, "trivial")));
}

TEST_CASE("GRS codes are MDS at enumerable sizes") {
    testutil::Rng rng(213);
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {2, 4}}) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 10; ++trial) {
            GrsSpec spec = testutil::random_grs_spec(rng, f);
            spec.k = 1 + rng.below(std::min<std::size_t>(spec.n(), 3));
            LinearCode c = grs(spec);
            CHECK(min_distance_exact(c, 1ull << 16) == static_cast<int>(spec.n() - spec.k) + 1);
        }
    }
}

TEST_CASE("monomial equivalence between twists with equal zero sets") {
    auto f16 = Field::make(2, 4);
    testutil::Rng rng(215);
    for (int trial = 0; trial < 10; ++trial) {
        std::set<std::uint32_t> zeros;
        // a Frobenius-closed zero set: a random union of cosets
        for (std::uint32_t b = 1; b < f16->units(); ++b)
            if (rng.below(4) == 0) {
                std::uint64_t cur = b;
                do {
                    zeros.insert(static_cast<std::uint32_t>(cur));
                    cur = cur * 2 % f16->units();
                } while (cur != b);
            }
        if (zeros.size() >= f16->units() - 2) continue;
        PolyR g1 = random_cyclotomic_with_zeros(rng, f16, zeros);
        PolyR g2 = indicator_form(g1);
        auto diag = monomial_equivalence(g1, g2);
        // identity when the twists agree
        for (auto d : monomial_equivalence(g1, g1)) CHECK(d == f16->one());

        std::size_t n = f16->units() - zeros.size();
        for (std::size_t k : {std::size_t{1}, n / 2, n - 1}) {
            if (k < 1 || k > n) continue;
            LinearCode c1 = grs(grs_spec_from_poly(g1, k));
            LinearCode c2 = grs(grs_spec_from_poly(g2, k));
            CHECK(apply_diagonal(c1, diag).same_code(c2));
            CHECK(subfield_subcode(c1).dim() == subfield_subcode(c2).dim());
        }
    }
    // mismatched zero sets are rejected
    PolyR a = trace_lift(PolyR::monomial(f16, 1, f16->one()));
    PolyR b = PolyR::monomial(f16, 0, f16->one());
    if (!zero_set(a).empty()) CHECK_THROWS(monomial_equivalence(a, b));
}

TEST_CASE("generator rows need not be independent") {
    auto f3 = Field::make(3, 1);
    Mat g(f3, 3, 4);
    g.at(0, 0) = f3->one();
    g.at(1, 0) = f3->from_base(2);  // dependent
    g.at(2, 1) = f3->one();
    LinearCode c(g, 1, "trivial");
    CHECK(c.dim() == 2);
    CHECK(c.generators().rows() == 3);
}

TEST_CASE("twist-polynomial codes are punctured Reed-Solomon codes") {
    // for a 0/1-valued twist, the code is the Reed-Solomon code of the same
    // dimension punctured at the twist's zero set
    auto f16 = Field::make(2, 4);
    const std::uint32_t nn = f16->units();
    GrsSpec rs;
    rs.field = f16;
    for (std::uint32_t j = 0; j < nn; ++j) rs.point_exps.push_back(j);
    rs.twist.assign(nn, f16->one());
    for (const std::vector<std::uint32_t>& reps :
         {std::vector<std::uint32_t>{1}, {3}, {1, 5}}) {
        auto zeros = union_elements(*f16, reps);
        std::vector<FieldElem> vals(nn, f16->one());
        for (auto e : zeros) vals[e] = f16->zero();
        PolyR ghat = interpolate(f16, vals);
        std::size_t n = nn - zeros.size();
        std::vector<std::size_t> coords;
        for (auto e : zeros) coords.push_back(e + 1);  // 1-based
        for (std::size_t k : {std::size_t{1}, n / 2, n}) {
            if (k < 1) continue;
            GrsSpec spec = grs_spec_from_poly(ghat, k);
            CHECK(twist_poly(spec) == ghat);  // spec round trip
            rs.k = k;
            CHECK(grs(spec).same_code(puncture(grs(rs), coords)));
        }
    }
}

TEST_CASE("design distances are true lower bounds on enumerable pipeline codes") {
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {2, 4}}) {
        auto f = Field::make(p, m);
        for (const auto& reps : coset_unions(*f, 1)) {
            PolyR g = PolyR::from_support(f, union_elements(*f, reps));
            std::size_t n = f->units() - zero_set(g).size();
            if (n == 0) continue;
            for (int k = 1; k <= static_cast<int>(n); ++k) {
                LinearCode e = [&] {
                    GrsSpec spec = grs_spec_from_poly(g, static_cast<std::size_t>(k));
                    LinearCode code = dual(trace_code(grs(spec)));
                    return LinearCode(code.reduced(), k + 1, "design (MDS)");
                }();
                if (e.dim() == 0) continue;
                std::uint64_t words = 1;
                bool small = true;
                for (std::size_t i = 0; i < e.dim() && small; ++i) {
                    words *= static_cast<std::uint64_t>(p);
                    if (words > (1ull << 14)) small = false;
                }
                if (!small) continue;
                CHECK(min_distance_exact(e) >= e.d_lb());
                // puncturing and shortening keep the tracked bound valid
                LinearCode pu = puncture(e, {e.length()});
                if (pu.dim() >= 1) CHECK(min_distance_exact(pu) >= pu.d_lb());
                LinearCode sh = shorten(e, {e.length()});
                if (sh.dim() >= 1) CHECK(min_distance_exact(sh) >= sh.d_lb());
            }
        }
    }
}

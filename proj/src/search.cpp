#include "grstwist/search.hpp"

#include "grstwist/cosets.hpp"
#include "grstwist/ring.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace grstwist {

namespace {

struct Candidate {
    std::vector<std::uint32_t> points;
    std::vector<FieldElem> weights;  // empty: all ones
    std::set<std::uint32_t> zero_exps;
};

Candidate candidate_for(const Field& f, int alg, const std::vector<std::uint32_t>& reps) {
    const std::uint32_t nn = f.units();
    std::vector<std::uint32_t> elems = union_elements(f, reps);
    Candidate c;
    if (alg == 1) {
        // twist values are the coset-union polynomial evaluated everywhere
        for (std::uint32_t j = 0; j < nn; ++j) {
            FieldElem acc{0};
            for (auto i : elems)
                acc = f.add(acc, f.exp(static_cast<long long>(
                                     static_cast<std::uint64_t>(i) * j % nn)));
            if (acc.v != 0) {
                c.points.push_back(j);
                c.weights.push_back(acc);
            } else {
                c.zero_exps.insert(j);
            }
        }
    } else if (alg == 2) {
        std::set<std::uint32_t> removed(elems.begin(), elems.end());
        for (std::uint32_t j = 0; j < nn; ++j)
            if (!removed.count(j)) c.points.push_back(j);
        c.zero_exps = std::move(removed);
    } else {
        throw std::invalid_argument("algorithm must be 1 or 2");
    }
    return c;
}

std::vector<SearchHit> search_union(FieldRef field, int alg,
                                    const std::vector<std::uint32_t>& reps,
                                    const BktTable& table, const SearchOptions& opts) {
    const Field& f = *field;
    Candidate cand = candidate_for(f, alg, reps);
    const int n = static_cast<int>(cand.points.size());
    std::vector<SearchHit> hits;
    if (n == 0) return hits;
    const int k_lo = std::max(1, opts.k_min);
    const int k_hi = std::min(n, opts.k_max < 0 ? n : opts.k_max);
    if (k_lo > k_hi) return hits;
    auto profile = trace_rank_profile(f, cand.points, cand.weights, k_hi);
    for (int k = k_lo; k <= k_hi; ++k) {
        int dim = n - profile[static_cast<std::size_t>(k)];
        int d_lb = k + 1;  // minimum distance of the MDS dual GRS_{n-k}
        Verdict v = table.verdict(n, dim, d_lb);
        if (v != Verdict::improves && v != Verdict::ties) continue;
        SearchHit h;
        h.p = f.p();
        h.m = f.degree();
        h.alg = alg;
        h.kind = alg == 1 ? "alg1" : "alg2";
        h.cosets = reps;
        h.k = k;
        h.n = n;
        h.dim = dim;
        h.d_lb = d_lb;
        h.verdict = v;
        if (opts.with_bound) {
            BoundReport rep = dimension_bound(f, cand.zero_exps, n - k, false);
            rep.kernel_dim = static_cast<long long>(f.degree()) * k -
                             profile[static_cast<std::size_t>(k)];
            rep.exact_dim = dim;
            rep.strict = dim > rep.bound;
            h.bound = std::move(rep);
        }
        hits.push_back(std::move(h));
    }
    return hits;
}

std::vector<SearchHit> run_search(FieldRef field, int alg, const BktTable& table,
                                  const SearchOptions& opts) {
    if (table.p() != field->p())
        throw std::invalid_argument("best-known table is for a different base field");
    std::vector<std::vector<std::uint32_t>> unions =
        opts.unions ? *opts.unions
                    : coset_unions(*field, opts.max_parts, opts.include_zero_coset);
    std::vector<std::vector<SearchHit>> per_union(unions.size());
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || unions.size() <= 1) {
        for (std::size_t i = 0; i < unions.size(); ++i)
            per_union[i] = search_union(field, alg, unions[i], table, opts);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= unions.size()) break;
                per_union[i] = search_union(field, alg, unions[i], table, opts);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<SearchHit> out;  // canonical order: union index, then k
    for (auto& hs : per_union)
        for (auto& h : hs) out.push_back(std::move(h));
    return out;
}

} // namespace

std::vector<SearchHit> alg1_search(FieldRef field, const BktTable& table,
                                   const SearchOptions& opts) {
    return run_search(std::move(field), 1, table, opts);
}

std::vector<SearchHit> alg2_search(FieldRef field, const BktTable& table,
                                   const SearchOptions& opts) {
    return run_search(std::move(field), 2, table, opts);
}

LinearCode build_root_code(FieldRef field, int alg, const std::vector<std::uint32_t>& cosets,
                           int k) {
    const Field& f = *field;
    Candidate cand = candidate_for(f, alg, cosets);
    GrsSpec spec;
    spec.field = field;
    spec.point_exps = cand.points;
    if (cand.weights.empty())
        spec.twist.assign(cand.points.size(), f.one());
    else
        spec.twist = cand.weights;
    spec.k = static_cast<std::size_t>(k);
    LinearCode parent = grs(spec);
    LinearCode e = dual(trace_code(parent));
    return LinearCode(e.reduced(), k + 1, "design (MDS)");
}

LinearCode build_hit_code(FieldRef field, const SearchHit& hit) {
    LinearCode code = build_root_code(field, hit.alg, hit.cosets, hit.k);
    for (const auto& step : hit.chain)
        code = step.is_shorten ? shorten(code, step.coords) : puncture(code, step.coords);
    return code;
}

std::vector<SearchHit> derive_chain(FieldRef field, const SearchHit& base,
                                    const std::vector<DeriveStep>& steps,
                                    const BktTable& table) {
    if (steps.empty()) return {base};
    LinearCode code = build_hit_code(field, base);
    SearchHit cur = base;
    cur.kind = "derived";
    cur.bound.reset();
    std::vector<SearchHit> out;
    for (const auto& step : steps) {
        std::size_t dim_before = code.dim();
        code = step.is_shorten ? shorten(code, step.coords) : puncture(code, step.coords);
        cur.chain.push_back(step);
        cur.n = static_cast<int>(code.length());
        cur.dim = static_cast<int>(code.dim());
        cur.d_lb = code.d_lb();
        cur.verdict = table.verdict(cur.n, cur.dim, cur.d_lb);
        cur.note.clear();
        if (step.is_shorten && code.dim() + step.coords.size() < dim_before)
            cur.note = "shortening removed more rank than coordinates";
        out.push_back(cur);
    }
    return out;
}

} // namespace grstwist

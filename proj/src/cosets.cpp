#include "grstwist/cosets.hpp"

#include <algorithm>
#include <stdexcept>

namespace grstwist {

CycCoset coset_of(const Field& field, std::uint32_t t) {
    const std::uint32_t n = field.units();
    if (t >= n) throw std::invalid_argument("coset element out of range");
    CycCoset c;
    std::uint64_t cur = t;
    do {
        c.elements.push_back(static_cast<std::uint32_t>(cur));
        cur = cur * static_cast<std::uint32_t>(field.p()) % n;
    } while (cur != t);
    std::sort(c.elements.begin(), c.elements.end());
    c.rep = c.elements.front();
    return c;
}

std::vector<CycCoset> minimal_cosets(const Field& field) {
    const std::uint32_t n = field.units();
    std::vector<bool> seen(n, false);
    std::vector<CycCoset> out;
    for (std::uint32_t t = 0; t < n; ++t) {
        if (seen[t]) continue;
        CycCoset c = coset_of(field, t);
        for (auto e : c.elements) seen[e] = true;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> coset_unions(const Field& field, int max_parts,
                                                     bool include_zero) {
    if (max_parts < 1) throw std::invalid_argument("max_parts must be at least 1");
    std::vector<std::uint32_t> reps;
    for (const auto& c : minimal_cosets(field))
        if (include_zero || c.rep != 0) reps.push_back(c.rep);

    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> tuple;
    auto emit = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(tuple);
            return;
        }
        for (std::size_t i = start; i < reps.size(); ++i) {
            tuple.push_back(reps[i]);
            self(self, i + 1, remaining - 1);
            tuple.pop_back();
        }
    };
    for (int parts = 1; parts <= max_parts; ++parts) emit(emit, 0, parts);
    return out;
}

std::vector<std::uint32_t> union_elements(const Field& field,
                                          const std::vector<std::uint32_t>& reps) {
    std::vector<std::uint32_t> all;
    for (auto b : reps) {
        CycCoset c = coset_of(field, b);
        if (c.rep != b) throw std::invalid_argument("not a minimal coset representative");
        all.insert(all.end(), c.elements.begin(), c.elements.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("coset representatives must be distinct");
    return all;
}

} // namespace grstwist

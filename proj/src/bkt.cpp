#include "grstwist/bkt.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grstwist {

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::improves: return "improves";
        case Verdict::ties: return "ties";
        case Verdict::below: return "below";
        default: return "unknown";
    }
}

BktTable BktTable::load(const std::string& path, int p) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open best-known table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), p, path);
}

BktTable BktTable::parse(const std::string& text, int p, const std::string& source) {
    BktTable t;
    t.p_ = p;
    t.source_ = source;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        int rp, n, k, d;
        char c1, c2, c3;
        std::istringstream ls(line);
        if (!(ls >> rp >> c1 >> n >> c2 >> k >> c3 >> d) || c1 != ',' || c2 != ',' || c3 != ',')
            throw std::runtime_error("malformed table line " + std::to_string(lineno) + ": " + line);
        if (rp != p) continue;  // records for other base fields are skipped
        // d above n is allowed: unbeatable sentinel entries
        if (n <= 0 || k < 0 || k > n || d < 1)
            throw std::runtime_error("inconsistent parameters on line " + std::to_string(lineno) +
                                     ": " + line);
        auto key = std::make_pair(n, k);
        auto it = t.d_.find(key);
        if (it == t.d_.end())
            t.d_[key] = d;
        else if (d > it->second)
            it->second = d;  // duplicates keep the best distance
    }
    // monotonicity: d(n, k) >= d(n, k+1), d(n+1, k) >= d(n, k)
    for (const auto& [key, dv] : t.d_) {
        auto right = t.d_.find({key.first, key.second + 1});
        if (right != t.d_.end() && right->second > dv)
            throw std::runtime_error("monotonicity violation between (n=" +
                                     std::to_string(key.first) + ",k=" + std::to_string(key.second) +
                                     ") and k+1");
        auto up = t.d_.find({key.first + 1, key.second});
        if (up != t.d_.end() && up->second < dv)
            throw std::runtime_error("monotonicity violation between (n=" +
                                     std::to_string(key.first) + ",k=" + std::to_string(key.second) +
                                     ") and n+1");
    }
    return t;
}

std::optional<int> BktTable::lookup(int n, int k) const {
    auto it = d_.find({n, k});
    if (it == d_.end()) return std::nullopt;
    return it->second;
}

Verdict BktTable::verdict(int n, int k, int d_lb) const {
    auto best = lookup(n, k);
    if (!best) return Verdict::unknown;
    if (d_lb > *best) return Verdict::improves;
    if (d_lb == *best) return Verdict::ties;
    return Verdict::below;
}

} // namespace grstwist

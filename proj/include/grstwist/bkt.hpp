#ifndef GRSTWIST_BKT_HPP
#define GRSTWIST_BKT_HPP

#include <map>
#include <optional>
#include <string>

namespace grstwist {

enum class Verdict { improves, ties, below, unknown };

const char* verdict_str(Verdict v);

// Offline snapshot of best-known [n, k, d] parameters over F_p, loaded from
// CSV records "p,n,k,d". Duplicate (n, k) keys keep the larger d; the table
// must be monotone (d never grows with k at fixed n, never shrinks with n
// at fixed k) or ingestion fails.
class BktTable {
public:
    static BktTable load(const std::string& path, int p);
    static BktTable parse(const std::string& text, int p, const std::string& source);

    int p() const { return p_; }
    const std::string& source() const { return source_; }
    std::size_t size() const { return d_.size(); }

    std::optional<int> lookup(int n, int k) const;
    Verdict verdict(int n, int k, int d_lb) const;

    const std::map<std::pair<int, int>, int>& entries() const { return d_; }

private:
    int p_ = 0;
    std::string source_;
    std::map<std::pair<int, int>, int> d_;
};

} // namespace grstwist

#endif

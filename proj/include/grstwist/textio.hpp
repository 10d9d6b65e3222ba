#ifndef GRSTWIST_TEXTIO_HPP
#define GRSTWIST_TEXTIO_HPP

#include "grstwist/bound.hpp"
#include "grstwist/codes.hpp"
#include "grstwist/ring.hpp"
#include "grstwist/search.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace grstwist {

// sparse polynomial text, descending degree: "e0*x^25 + e0*x^5 + e0*x".
// The parser additionally accepts dense F_p notation such as
// "x^81 + x^27 + x^9 + x^3 + x" or "2*x^3 + 1".
std::string poly_str(const PolyR& f);
PolyR poly_parse(FieldRef field, const std::string& text);

// generator matrix text: one row per line, space-separated entries;
// integers over F_p, "e<j>"/"0" over extensions
std::string matrix_str(const Mat& m);
Mat matrix_parse(FieldRef field, const std::string& text);

nlohmann::ordered_json bound_report_json(const BoundReport& rep);
std::string bound_report_table(const BoundReport& rep);

nlohmann::ordered_json hit_json(const SearchHit& hit);
// canonical hits.json bytes: every run with the same hits yields the same
// output byte-for-byte
std::string hits_json_text(const std::vector<SearchHit>& hits);

nlohmann::ordered_json code_summary_json(const LinearCode& code);

// "shorten:240,239" / "puncture:161"
DeriveStep parse_step(const std::string& text);

} // namespace grstwist

#endif

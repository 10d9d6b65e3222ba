#include "grstwist/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace grstwist {

std::string poly_str(const PolyR& f) {
    const Field& field = f.field();
    auto support = f.support();
    if (support.empty()) return "0";
    std::ostringstream os;
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        if (it != support.rbegin()) os << " + ";
        os << field.elem_str(f.coeff(*it));
        if (*it == 1)
            os << "*x";
        else if (*it != 0)
            os << "*x^" << *it;
    }
    return os.str();
}

PolyR poly_parse(FieldRef field, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    PolyR f(field);
    if (s.empty() || s == "0") return f;
    std::size_t pos = 0;
    bool negate = false;
    if (s[0] == '+' || s[0] == '-') {
        negate = s[0] == '-';
        pos = 1;
    }
    while (pos < s.size()) {
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("empty polynomial term");

        FieldElem coeff = field->one();
        std::size_t tp = 0;
        if (term[0] == 'e') {
            std::size_t q = 1;
            while (q < term.size() && std::isdigit(static_cast<unsigned char>(term[q]))) ++q;
            if (q == 1) throw std::invalid_argument("bad coefficient in term: " + term);
            coeff = field->exp(std::stoll(term.substr(1, q - 1)));
            tp = q;
        } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            std::size_t q = 0;
            while (q < term.size() && std::isdigit(static_cast<unsigned char>(term[q]))) ++q;
            coeff = field->from_base(std::stoi(term.substr(0, q)));
            tp = q;
        }
        if (tp < term.size() && term[tp] == '*') ++tp;
        std::uint32_t exponent = 0;
        if (tp < term.size()) {
            if (term[tp] != 'x') throw std::invalid_argument("bad polynomial term: " + term);
            ++tp;
            exponent = 1;
            if (tp < term.size()) {
                if (term[tp] != '^') throw std::invalid_argument("bad polynomial term: " + term);
                exponent = static_cast<std::uint32_t>(std::stoul(term.substr(tp + 1)));
                tp = term.size();
            }
        }
        if (negate) coeff = field->neg(coeff);
        f.set_coeff(exponent, field->add(f.coeff(exponent), coeff));

        if (end == s.size()) break;
        negate = s[end] == '-';
        pos = end + 1;
    }
    return f;
}

std::string matrix_str(const Mat& m) {
    const Field& f = m.field();
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            if (f.degree() == 1)
                os << f.base_value(m.at(r, c));
            else
                os << f.elem_str(m.at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

Mat matrix_parse(FieldRef field, const std::string& text) {
    std::vector<std::vector<FieldElem>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<FieldElem> row;
        std::string tok;
        while (ls >> tok) row.push_back(field->elem_parse(tok));
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    Mat m(field, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

nlohmann::ordered_json bound_report_json(const BoundReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["m"] = rep.m;
    j["deg_bound"] = rep.deg_bound;
    j["naive"] = rep.naive;
    j["bound"] = rep.bound;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : rep.terms) {
        nlohmann::ordered_json tj;
        tj["b"] = t.rep;
        tj["coset_size"] = t.coset_size;
        tj["in_window"] = t.in_window;
        tj["term"] = t.term;
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    j["kernel_dim"] = rep.kernel_dim ? nlohmann::ordered_json(*rep.kernel_dim)
                                     : nlohmann::ordered_json(nullptr);
    j["exact_dim"] = rep.exact_dim ? nlohmann::ordered_json(*rep.exact_dim)
                                   : nlohmann::ordered_json(nullptr);
    j["strict"] = rep.strict ? nlohmann::ordered_json(*rep.strict)
                             : nlohmann::ordered_json(nullptr);
    return j;
}

std::string bound_report_table(const BoundReport& rep) {
    std::ostringstream os;
    os << "n=" << rep.n << " k=" << rep.k << " m=" << rep.m
       << " window=" << rep.deg_bound << "\n";
    os << "naive\t" << rep.naive << "\n";
    os << "b\tsize\tin_window\tterm\n";
    for (const auto& t : rep.terms)
        os << t.rep << '\t' << t.coset_size << '\t' << t.in_window << '\t' << t.term << "\n";
    os << "bound\t" << rep.bound << "\n";
    if (rep.kernel_dim) os << "kernel_dim\t" << *rep.kernel_dim << "\n";
    if (rep.exact_dim) os << "exact_dim\t" << *rep.exact_dim << "\n";
    if (rep.strict) os << "strict\t" << (*rep.strict ? "yes" : "no") << "\n";
    return os.str();
}

nlohmann::ordered_json hit_json(const SearchHit& hit) {
    nlohmann::ordered_json j;
    j["p"] = hit.p;
    j["m"] = hit.m;
    j["alg"] = hit.alg;
    j["kind"] = hit.kind;
    j["cosets"] = hit.cosets;
    j["k"] = hit.k;
    j["n"] = hit.n;
    j["dim"] = hit.dim;
    j["d_lb"] = hit.d_lb;
    j["verdict"] = verdict_str(hit.verdict);
    j["bound"] = hit.bound ? bound_report_json(*hit.bound) : nlohmann::ordered_json(nullptr);
    auto chain = nlohmann::ordered_json::array();
    for (const auto& s : hit.chain) {
        nlohmann::ordered_json sj;
        sj["op"] = s.is_shorten ? "shorten" : "puncture";
        sj["coords"] = s.coords;
        chain.push_back(std::move(sj));
    }
    j["chain"] = std::move(chain);
    if (!hit.note.empty()) j["note"] = hit.note;
    return j;
}

std::string hits_json_text(const std::vector<SearchHit>& hits) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& h : hits) arr.push_back(hit_json(h));
    return arr.dump(1) + "\n";
}

nlohmann::ordered_json code_summary_json(const LinearCode& code) {
    nlohmann::ordered_json j;
    j["p"] = code.field().p();
    j["m"] = code.field().degree();
    j["n"] = code.length();
    j["k"] = code.dim();
    j["d_lb"] = code.d_lb();
    j["provenance"] = code.d_provenance();
    return j;
}

DeriveStep parse_step(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("step must look like shorten:240,239 or puncture:161");
    std::string op = text.substr(0, colon);
    DeriveStep step;
    if (op == "shorten")
        step.is_shorten = true;
    else if (op == "puncture")
        step.is_shorten = false;
    else
        throw std::invalid_argument("unknown derivation op: " + op);
    std::istringstream is(text.substr(colon + 1));
    std::string tok;
    while (std::getline(is, tok, ','))
        step.coords.push_back(static_cast<std::size_t>(std::stoul(tok)));
    if (step.coords.empty()) throw std::invalid_argument("step needs coordinates");
    return step;
}

} // namespace grstwist

// Command-line front end: construct GRS codes from cyclotomic twist
// polynomials, take subfield-subcodes, evaluate the dimension bound, search
// coset unions against a best-known table, and run derivation chains.
//
// Exit codes: 0 success, 2 usage error, 1 computation error.

#include "grstwist/bkt.hpp"
#include "grstwist/bound.hpp"
#include "grstwist/codes.hpp"
#include "grstwist/cosets.hpp"
#include "grstwist/galois.hpp"
#include "grstwist/ring.hpp"
#include "grstwist/search.hpp"
#include "grstwist/textio.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

using namespace grstwist;

namespace {

struct FieldOpts {
    int p = 0;
    int m = 0;
    std::string modulus;  // comma-separated, low-degree-first; optional
};

void add_field_opts(CLI::App* sub, FieldOpts& fo) {
    sub->add_option("--p", fo.p, "field characteristic (prime)")->required();
    sub->add_option("--m", fo.m, "extension degree")->required();
    sub->add_option("--modulus", fo.modulus,
                    "modulus coefficients, low-degree-first (default: smallest primitive)");
}

FieldRef make_field(const FieldOpts& fo) {
    if (fo.modulus.empty()) return Field::make(fo.p, fo.m);
    std::vector<int> coeffs;
    std::istringstream is(fo.modulus);
    std::string tok;
    while (std::getline(is, tok, ',')) coeffs.push_back(std::stoi(tok));
    return Field::make(fo.p, fo.m, coeffs);
}

std::vector<std::uint32_t> parse_reps(const std::string& s) {
    std::vector<std::uint32_t> reps;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) reps.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return reps;
}

// twist polynomial from either --g or --cosets
PolyR twist_from_opts(FieldRef field, const std::string& g_text, const std::string& reps_text) {
    if (!g_text.empty() && !reps_text.empty())
        throw std::invalid_argument("give either --g or --cosets, not both");
    if (!g_text.empty()) return poly_parse(field, g_text);
    if (!reps_text.empty())
        return PolyR::from_support(field, union_elements(*field, parse_reps(reps_text)));
    throw std::invalid_argument("a twist polynomial is required (--g or --cosets)");
}

void emit_matrix(const LinearCode& code, const std::string& target) {
    std::string text = matrix_str(code.reduced());
    if (target == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(target, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + target);
    out << text;
    std::cout << code_summary_json(code).dump(1) << "\n";
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Reed-Solomon subfield-subcode toolkit"};
    app.require_subcommand(1);

    // --- field
    FieldOpts field_fo;
    std::string field_format = "tsv";
    auto* field_cmd = app.add_subcommand("field", "describe a field F_{p^m}");
    add_field_opts(field_cmd, field_fo);
    field_cmd->add_option("--format", field_format)->check(CLI::IsMember({"json", "tsv"}));

    // --- cosets
    FieldOpts cosets_fo;
    std::string cosets_format = "tsv";
    auto* cosets_cmd = app.add_subcommand("cosets", "minimal cyclotomic cosets of Z_N");
    add_field_opts(cosets_cmd, cosets_fo);
    cosets_cmd->add_option("--format", cosets_format)->check(CLI::IsMember({"json", "tsv"}));

    // --- grs
    FieldOpts grs_fo;
    std::string grs_g, grs_cosets, grs_matrix;
    int grs_k = 0;
    bool grs_dual = false;
    auto* grs_cmd = app.add_subcommand("grs", "build a GRS code from a twist polynomial");
    add_field_opts(grs_cmd, grs_fo);
    grs_cmd->add_option("--g", grs_g, "twist polynomial text");
    grs_cmd->add_option("--cosets", grs_cosets, "coset representatives for the twist support");
    grs_cmd->add_option("--k", grs_k, "dimension")->required();
    grs_cmd->add_flag("--dual", grs_dual, "emit the dual via the closed form");
    grs_cmd->add_option("--matrix", grs_matrix, "write the generator matrix here ('-': stdout)");

    // --- sfsc
    FieldOpts sfsc_fo;
    std::string sfsc_g, sfsc_cosets, sfsc_matrix, sfsc_method = "trace-dual";
    int sfsc_k = 0;
    bool sfsc_of_dual = false;
    auto* sfsc_cmd = app.add_subcommand("sfsc", "subfield-subcode of a GRS code");
    add_field_opts(sfsc_cmd, sfsc_fo);
    sfsc_cmd->add_option("--g", sfsc_g, "twist polynomial text");
    sfsc_cmd->add_option("--cosets", sfsc_cosets, "coset representatives for the twist support");
    sfsc_cmd->add_option("--k", sfsc_k, "GRS dimension")->required();
    sfsc_cmd->add_flag("--of-dual", sfsc_of_dual, "take the subfield-subcode of the dual code");
    sfsc_cmd->add_option("--method", sfsc_method)->check(CLI::IsMember({"trace-dual", "kernel"}));
    sfsc_cmd->add_option("--matrix", sfsc_matrix, "write the generator matrix here ('-': stdout)");

    // --- bound
    FieldOpts bound_fo;
    std::string bound_g, bound_cosets, bound_format = "json";
    int bound_k = 0;
    bool bound_exact = false;
    auto* bound_cmd = app.add_subcommand("bound", "dimension lower bound report");
    add_field_opts(bound_cmd, bound_fo);
    bound_cmd->add_option("--g", bound_g, "twist polynomial text");
    bound_cmd->add_option("--cosets", bound_cosets, "coset representatives for the twist support");
    bound_cmd->add_option("--k", bound_k, "GRS dimension of the searched code")->required();
    bound_cmd->add_flag("--exact", bound_exact, "also compute exact dimensions");
    bound_cmd->add_option("--format", bound_format)->check(CLI::IsMember({"json", "tsv"}));

    // --- search
    FieldOpts search_fo;
    int search_alg = 1, search_max_parts = 3, search_kmin = 1, search_kmax = -1, search_jobs = 1;
    bool search_zero = false, search_no_bound = false;
    std::string search_bkt, search_out = "hits.json", search_emit;
    std::vector<std::string> search_cosets;
    auto* search_cmd = app.add_subcommand("search", "sweep coset unions against a table");
    add_field_opts(search_cmd, search_fo);
    search_cmd->add_option("--alg", search_alg)->check(CLI::IsMember({1, 2}));
    search_cmd->add_option("--max-parts", search_max_parts, "cosets per union (default 3)");
    search_cmd->add_option("--cosets", search_cosets,
                           "restrict to these unions (repeatable, comma-joined reps)");
    search_cmd->add_option("--k-min", search_kmin);
    search_cmd->add_option("--k-max", search_kmax);
    search_cmd->add_option("--jobs", search_jobs, "parallel workers");
    search_cmd->add_flag("--include-zero-coset", search_zero);
    search_cmd->add_flag("--no-bound", search_no_bound, "skip bound reports in hits");
    search_cmd->add_option("--bkt", search_bkt, "best-known table CSV")->required();
    search_cmd->add_option("--out", search_out, "hits file (default hits.json)");
    search_cmd->add_option("--emit-matrices", search_emit, "directory for generator matrices");

    // --- derive
    FieldOpts derive_fo;
    int derive_alg = 1, derive_k = 0;
    std::string derive_cosets, derive_bkt;
    std::vector<std::string> derive_steps;
    auto* derive_cmd = app.add_subcommand("derive", "shorten/puncture chain from a search hit");
    add_field_opts(derive_cmd, derive_fo);
    derive_cmd->add_option("--alg", derive_alg)->check(CLI::IsMember({1, 2}));
    derive_cmd->add_option("--cosets", derive_cosets, "root union representatives")->required();
    derive_cmd->add_option("--k", derive_k, "root GRS dimension")->required();
    derive_cmd->add_option("--step", derive_steps, "shorten:c1,c2 or puncture:c1 (repeatable)");
    derive_cmd->add_option("--bkt", derive_bkt, "best-known table CSV")->required();

    // --- mindist
    FieldOpts mind_fo;
    std::string mind_matrix = "-", mind_format = "tsv";
    std::uint64_t mind_budget = 1ull << 24;
    auto* mind_cmd = app.add_subcommand("mindist", "exact minimum distance by enumeration");
    add_field_opts(mind_cmd, mind_fo);
    mind_cmd->add_option("--matrix", mind_matrix, "generator matrix file ('-': stdin)");
    mind_cmd->add_option("--budget", mind_budget, "max codeword count (default 2^24)");
    mind_cmd->add_option("--format", mind_format)->check(CLI::IsMember({"json", "tsv"}));

    // --- bkt
    auto* bkt_cmd = app.add_subcommand("bkt", "best-known table utilities");
    bkt_cmd->require_subcommand(1);
    std::string bkt_import_file, bkt_import_out;
    int bkt_import_p = 0;
    auto* bkt_import = bkt_cmd->add_subcommand("import", "validate and normalize a table");
    bkt_import->add_option("file", bkt_import_file)->required();
    bkt_import->add_option("--p", bkt_import_p)->required();
    bkt_import->add_option("--out", bkt_import_out, "write the normalized CSV here");
    std::string bkt_lookup_file;
    int bkt_lookup_p = 0, bkt_lookup_n = 0, bkt_lookup_k = 0;
    auto* bkt_lookup = bkt_cmd->add_subcommand("lookup", "best known distance for (n, k)");
    bkt_lookup->add_option("file", bkt_lookup_file)->required();
    bkt_lookup->add_option("--p", bkt_lookup_p)->required();
    bkt_lookup->add_option("--n", bkt_lookup_n)->required();
    bkt_lookup->add_option("--k", bkt_lookup_k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (field_cmd->parsed()) {
            FieldRef f = make_field(field_fo);
            if (field_format == "json") {
                nlohmann::ordered_json j;
                j["p"] = f->p();
                j["m"] = f->degree();
                j["N"] = f->units();
                j["modulus"] = f->modulus();
                j["description"] = f->describe();
                std::cout << j.dump(1) << "\n";
            } else {
                std::cout << f->describe() << "\tN=" << f->units() << "\n";
            }
        } else if (cosets_cmd->parsed()) {
            FieldRef f = make_field(cosets_fo);
            auto all = minimal_cosets(*f);
            if (cosets_format == "json") {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& c : all) {
                    nlohmann::ordered_json j;
                    j["b"] = c.rep;
                    j["size"] = c.size();
                    j["elements"] = c.elements;
                    arr.push_back(std::move(j));
                }
                std::cout << arr.dump(1) << "\n";
            } else {
                for (const auto& c : all) {
                    std::cout << c.rep << '\t' << c.size() << '\t';
                    for (std::size_t i = 0; i < c.elements.size(); ++i)
                        std::cout << (i ? "," : "") << c.elements[i];
                    std::cout << "\n";
                }
            }
        } else if (grs_cmd->parsed()) {
            FieldRef f = make_field(grs_fo);
            PolyR g = twist_from_opts(f, grs_g, grs_cosets);
            GrsSpec spec = grs_spec_from_poly(g, static_cast<std::size_t>(grs_k));
            if (grs_dual) spec = grs_dual_closed_form(spec);
            LinearCode code = grs(spec);
            if (!grs_matrix.empty())
                emit_matrix(code, grs_matrix);
            else
                std::cout << code_summary_json(code).dump(1) << "\n";
        } else if (sfsc_cmd->parsed()) {
            FieldRef f = make_field(sfsc_fo);
            PolyR g = twist_from_opts(f, sfsc_g, sfsc_cosets);
            GrsSpec spec = grs_spec_from_poly(g, static_cast<std::size_t>(sfsc_k));
            // the closed form keeps the dual's design distance k + 1
            if (sfsc_of_dual) spec = grs_dual_closed_form(spec);
            LinearCode code = grs(spec);
            LinearCode sub = subfield_subcode(
                code, sfsc_method == "kernel" ? SfscMethod::DirectKernel : SfscMethod::TraceDual);
            if (!sfsc_matrix.empty())
                emit_matrix(sub, sfsc_matrix);
            else
                std::cout << code_summary_json(sub).dump(1) << "\n";
        } else if (bound_cmd->parsed()) {
            FieldRef f = make_field(bound_fo);
            PolyR g = twist_from_opts(f, bound_g, bound_cosets);
            if (!is_cyclotomic(g))
                throw std::invalid_argument("the bound needs a cyclotomic twist polynomial");
            auto zv = zero_set(g);
            std::set<std::uint32_t> zs(zv.begin(), zv.end());
            int n = static_cast<int>(f->units() - zs.size());
            if (bound_k < 1 || bound_k > n)
                throw std::invalid_argument("--k must lie in [1, n]");
            BoundReport rep = dimension_bound(*f, zs, n - bound_k, bound_exact);
            if (bound_format == "json")
                std::cout << bound_report_json(rep).dump(1) << "\n";
            else
                std::cout << bound_report_table(rep);
        } else if (search_cmd->parsed()) {
            FieldRef f = make_field(search_fo);
            BktTable table = BktTable::load(search_bkt, search_fo.p);
            SearchOptions opts;
            opts.max_parts = search_max_parts;
            opts.k_min = search_kmin;
            opts.k_max = search_kmax;
            opts.include_zero_coset = search_zero;
            opts.jobs = search_jobs;
            opts.with_bound = !search_no_bound;
            if (!search_cosets.empty()) {
                std::vector<std::vector<std::uint32_t>> unions;
                for (const auto& s : search_cosets) unions.push_back(parse_reps(s));
                opts.unions = std::move(unions);
            }
            auto hits = search_alg == 1 ? alg1_search(f, table, opts)
                                        : alg2_search(f, table, opts);
            std::ofstream out(search_out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + search_out);
            out << hits_json_text(hits);
            if (!search_emit.empty()) {
                std::filesystem::create_directories(search_emit);
                for (const auto& h : hits) {
                    std::ostringstream name;
                    name << h.kind << "_p" << h.p << "m" << h.m << "_c";
                    for (std::size_t i = 0; i < h.cosets.size(); ++i)
                        name << (i ? "-" : "") << h.cosets[i];
                    name << "_k" << h.k << ".txt";
                    std::ofstream mf(std::filesystem::path(search_emit) / name.str(),
                                     std::ios::binary);
                    mf << matrix_str(build_hit_code(f, h).reduced());
                }
            }
            std::cout << "wrote " << hits.size() << " hits to " << search_out << "\n";
        } else if (derive_cmd->parsed()) {
            FieldRef f = make_field(derive_fo);
            BktTable table = BktTable::load(derive_bkt, derive_fo.p);
            SearchHit base;
            base.p = derive_fo.p;
            base.m = derive_fo.m;
            base.alg = derive_alg;
            base.kind = derive_alg == 1 ? "alg1" : "alg2";
            base.cosets = parse_reps(derive_cosets);
            base.k = derive_k;
            LinearCode root = build_hit_code(f, base);
            base.n = static_cast<int>(root.length());
            base.dim = static_cast<int>(root.dim());
            base.d_lb = root.d_lb();
            base.verdict = table.verdict(base.n, base.dim, base.d_lb);
            std::vector<DeriveStep> steps;
            for (const auto& s : derive_steps) steps.push_back(parse_step(s));
            auto stages = derive_chain(f, base, steps, table);
            std::cout << hits_json_text(stages);
        } else if (mind_cmd->parsed()) {
            FieldRef f = make_field(mind_fo);
            Mat g = matrix_parse(f, read_all(mind_matrix));
            LinearCode code(g, 1, "trivial");
            int d = min_distance_exact(code, mind_budget);
            if (mind_format == "json") {
                nlohmann::ordered_json j;
                j["d"] = d;
                std::cout << j.dump(1) << "\n";
            } else {
                std::cout << d << "\n";
            }
        } else if (bkt_import->parsed()) {
            BktTable t = BktTable::load(bkt_import_file, bkt_import_p);
            if (!bkt_import_out.empty()) {
                std::ofstream out(bkt_import_out, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + bkt_import_out);
                for (const auto& [key, d] : t.entries())
                    out << t.p() << ',' << key.first << ',' << key.second << ',' << d << "\n";
            }
            std::cout << "rows: " << t.size() << "\n";
        } else if (bkt_lookup->parsed()) {
            BktTable t = BktTable::load(bkt_lookup_file, bkt_lookup_p);
            auto d = t.lookup(bkt_lookup_n, bkt_lookup_k);
            if (d)
                std::cout << *d << "\n";
            else
                std::cout << "unknown\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

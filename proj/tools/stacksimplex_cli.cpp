// Command-line front end: stack-sorting orbits, their convex hulls, exact
// rational lattice-point counts, counting polynomials, integral-equivalence
// certificates, and the self-verification suite.
//
// Exit codes: 0 success, 1 verification failure (or unexpected error),
// 2 bad input, 3 unsupported query.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stacksimplex/catalog.hpp"
#include "stacksimplex/ehrhart.hpp"
#include "stacksimplex/errors.hpp"
#include "stacksimplex/explore.hpp"
#include "stacksimplex/permutation.hpp"
#include "stacksimplex/polytope.hpp"
#include "stacksimplex/serialize.hpp"
#include "stacksimplex/verify.hpp"

namespace ssx = stacksimplex;
using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json_out = false;
    int jobs = 1;
    std::string output;
};

// Writes the primary payload to --output when given, else to stdout.
void deliver(const std::string& text, const GlobalOpts& g) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.output);
    if (!f) throw ssx::ParseError("cannot open output file: " + g.output);
    f << text;
}

// "@path" loads a polytope from a JSON file; anything else goes through the
// named catalog ("tau:n", "lecturehall:n", "cube:n", "point", or a
// permutation in one-line form).
ssx::VPolytope load_polytope(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        const std::string path = spec.substr(1);
        std::ifstream f(path);
        if (!f) throw ssx::ParseError("cannot open polytope file: " + path);
        json j;
        try {
            f >> j;
        } catch (const json::exception& e) {
            throw ssx::ParseError("bad polytope file '" + path + "': " + e.what());
        }
        return ssx::polytope_from_json(j);
    }
    return ssx::polytope_from_spec(spec);
}

ssx::Vec parse_vector(const std::string& s) {
    ssx::Vec out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(ssx::parse_rational(tok));
    if (out.empty()) throw ssx::ParseError("empty vector: '" + s + "'");
    return out;
}

int cmd_sort(const GlobalOpts& g, const std::string& perm, int iterations) {
    ssx::Permutation p = ssx::Permutation::parse(perm);
    std::ostringstream os;
    if (iterations >= 0) {
        for (int i = 0; i < iterations; ++i) p = ssx::stack_sort(p);
        if (g.json_out)
            os << json{{"result", p.str()}}.dump(2) << "\n";
        else
            os << p.str() << "\n";
    } else {
        ssx::SortOrbit orbit = ssx::sort_orbit(p);
        if (g.json_out) {
            json steps = json::array();
            for (const auto& s : orbit.steps) steps.push_back(s.str());
            os << json{{"orbit", std::move(steps)}, {"index", orbit.index()}}.dump(2) << "\n";
        } else {
            for (const auto& s : orbit.steps) os << s.str() << "\n";
            os << "index: " << orbit.index() << "\n";
        }
    }
    deliver(os.str(), g);
    return 0;
}

int cmd_polytope(const GlobalOpts& g, const std::string& spec) {
    ssx::VPolytope p = load_polytope(spec);
    json j = ssx::polytope_to_json(p);
    json extreme = json::array();
    for (std::size_t i = 0; i < p.extreme().size(); ++i)
        if (p.extreme()[i]) extreme.push_back(i);
    j["extreme"] = std::move(extreme);
    if (p.is_simplex() && p.is_lattice())
        j["normalized_volume"] = ssx::to_string(p.normalized_volume());
    else
        j["normalized_volume"] = nullptr;
    try {
        j["hollow"] = ssx::count_lattice(p, 1, ssx::Region::RelativeInterior) == 0;
    } catch (const ssx::UnsupportedQueryError&) {
        j["hollow"] = nullptr;
    }
    deliver(j.dump(2) + "\n", g);
    return 0;
}

int cmd_count(const GlobalOpts& g, const std::string& spec, const std::string& lam_str,
              const std::string& region_str, const std::string& translate_str,
              const std::string& table_str) {
    ssx::VPolytope p = load_polytope(spec);
    if (!translate_str.empty()) {
        ssx::Vec shift;
        if (translate_str == "tau") {
            shift = ssx::to_vec(ssx::tau(static_cast<int>(p.ambient())));
            for (auto& c : shift) c = -c;
        } else {
            shift = parse_vector(translate_str);
        }
        if (shift.size() != p.ambient())
            throw ssx::ParseError("translation has " + std::to_string(shift.size()) +
                                  " coordinates, polytope lives in dimension " +
                                  std::to_string(p.ambient()));
        p = p.translate(shift);
    }

    if (!table_str.empty()) {
        ssx::Rational top = ssx::parse_rational(table_str);
        if (top < 0) throw ssx::ParseError("table range must be nonnegative");
        ssx::Int q = denominator(top), kmax = numerator(top);
        std::ostringstream os;
        os << "lam,closed,interior\n";
        for (ssx::Int k = 0; k <= kmax; ++k) {
            ssx::Rational lam(k, q);
            os << ssx::to_string(lam) << ',' << ssx::count_lattice(p, lam, ssx::Region::Closed)
               << ',' << ssx::count_lattice(p, lam, ssx::Region::RelativeInterior) << "\n";
        }
        deliver(os.str(), g);
        return 0;
    }

    if (lam_str.empty()) throw ssx::ParseError("a dilation factor is required without --table");
    ssx::Rational lam = ssx::parse_rational(lam_str);
    ssx::Region region =
        region_str == "interior" ? ssx::Region::RelativeInterior : ssx::Region::Closed;
    ssx::Count c = ssx::count_lattice(p, lam, region);
    std::ostringstream os;
    if (g.json_out)
        os << json{{"spec", spec},
                   {"lambda", ssx::to_string(lam)},
                   {"region", region_str},
                   {"count", c}}
                  .dump(2)
           << "\n";
    else
        os << c << "\n";
    deliver(os.str(), g);
    return 0;
}

int cmd_ehrhart(const GlobalOpts& g, const std::string& spec, int tmax) {
    ssx::VPolytope p = load_polytope(spec);
    json j;
    j["spec"] = spec;
    int rc = 0;
    try {
        ssx::EhrhartResult r = ssx::analyze(p, tmax);
        j.update(ssx::ehrhart_to_json(r));
        if (!r.gorenstein.symbolic) {
            j["note"] = "no symbolic certificate; the index (if any) was only checked on "
                        "dilates up to the scan bound";
            rc = 3;
        }
    } catch (const ssx::UnsupportedQueryError& e) {
        auto poly = ssx::ehrhart_polynomial(p);
        json coeffs = json::array();
        for (const auto& c : poly) coeffs.push_back(ssx::to_string(c));
        j["poly"] = std::move(coeffs);
        j["hollow"] = ssx::eval_poly(poly, ssx::Rational(-1)) == 0;
        j["hstar"] = ssx::hstar_vector(p);
        j["gorenstein_index"] = nullptr;
        j["gorenstein_symbolic"] = false;
        j["note"] = std::string("interior queries unsupported for this hull: ") + e.what();
        rc = 3;
    }
    deliver(j.dump(2) + "\n", g);
    return rc;
}

int cmd_verify(const GlobalOpts& g, int nmax, int tmax, unsigned seed, bool corrupt) {
    ssx::VerifyOptions opts;
    opts.nmax = nmax;
    opts.tmax = tmax;
    opts.seed = seed;
    opts.jobs = g.jobs;
    opts.corrupt_certificate = corrupt;
    ssx::VerificationReport report = ssx::run_verification(opts);
    std::ostringstream os;
    if (g.json_out)
        os << ssx::report_to_json(report).dump(2) << "\n";
    else
        os << ssx::report_table(report);
    deliver(os.str(), g);
    return report.ok() ? 0 : 1;
}

int cmd_explore(const GlobalOpts& g, int n) {
    std::vector<ssx::ExploreRow> rows = ssx::explore_sn(n, g.jobs);
    ssx::sort_rows(rows);
    std::ostringstream os;
    if (g.json_out) {
        json arr = json::array();
        for (const auto& r : rows) {
            json jrow{{"permutation", r.perm},
                      {"orbit_index", r.orbit_index},
                      {"orbit_size", r.orbit_size},
                      {"affine_dim", r.affine_dim},
                      {"simplex", r.simplex},
                      {"points_t1", r.points_t1}};
            jrow["normalized_volume"] =
                r.normalized_volume ? json(ssx::to_string(*r.normalized_volume)) : json(nullptr);
            jrow["hollow"] = r.hollow ? json(*r.hollow) : json(nullptr);
            arr.push_back(std::move(jrow));
        }
        os << arr.dump(2) << "\n";
    } else {
        os << ssx::explore_csv(rows);
    }
    deliver(os.str(), g);
    for (const auto& note : ssx::explore_notes(rows)) std::cerr << "note: " << note << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stack-sorting orbits, their convex hulls, and exact lattice-point counts"};
    app.set_config("--config", "", "read defaults from a config file");
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--jobs", g.jobs, "worker threads for verify/explore")
        ->check(CLI::Range(1, 64));
    app.add_option("--output", g.output, "write the primary output to this file");

    auto* sort_cmd =
        app.add_subcommand("sort", "run the sorting pass to its fixed point, or K times");
    sort_cmd->fallthrough();
    std::string sort_perm;
    int iterations = -1;
    sort_cmd->add_option("perm", sort_perm, "permutation in one-line form (e.g. 23451)")
        ->required();
    sort_cmd->add_option("--iterations", iterations, "apply the pass exactly K times")
        ->check(CLI::NonNegativeNumber);

    auto* poly_cmd =
        app.add_subcommand("polytope", "describe the convex hull of a sorting orbit");
    poly_cmd->fallthrough();
    std::string poly_spec;
    poly_cmd
        ->add_option("spec", poly_spec,
                     "permutation, tau:N, lecturehall:N, cube:N, point, or @file.json")
        ->required();

    auto* count_cmd =
        app.add_subcommand("count", "count lattice points in a rational dilate of a hull");
    count_cmd->fallthrough();
    std::string count_spec, count_lam, count_region = "closed", count_translate, count_table;
    count_cmd->add_option("spec", count_spec, "polytope to count in (see 'polytope')")
        ->required();
    count_cmd->add_option("lambda", count_lam, "dilation factor, e.g. 3 or 5/2");
    count_cmd->add_option("--region", count_region, "closed or interior")
        ->check(CLI::IsMember({"closed", "interior"}));
    count_cmd->add_option("--translate", count_translate,
                          "'tau' recenters at the cyclic-shift vertex; otherwise a "
                          "comma-separated shift vector to add");
    count_cmd->add_option("--table", count_table,
                          "emit a CSV of closed/interior counts for dilates 0, 1/q, ..., p/q");

    auto* ehr_cmd = app.add_subcommand(
        "ehrhart", "counting polynomial, h* vector, hollowness and Gorenstein index");
    ehr_cmd->fallthrough();
    std::string ehr_spec;
    int ehr_tmax = 8;
    ehr_cmd->add_option("spec", ehr_spec, "polytope to analyze (see 'polytope')")->required();
    ehr_cmd->add_option("--tmax", ehr_tmax, "dilate bound for the non-symbolic index scan")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd =
        app.add_subcommand("verify", "run the library's full self-verification suite");
    verify_cmd->fallthrough();
    int v_nmax = 5, v_tmax = 3;
    unsigned v_seed = 0;
    bool v_corrupt = false;
    verify_cmd->add_option("--nmax", v_nmax, "size cap for the verification grids")
        ->check(CLI::Range(2, 9));
    verify_cmd->add_option("--tmax", v_tmax, "dilate cap for certificate/reciprocity grids")
        ->check(CLI::Range(1, 12));
    verify_cmd->add_option("--seed", v_seed, "seed for the randomized identity check");
    verify_cmd->add_flag("--corrupt-cert", v_corrupt)->group("");  // negative-control hook

    auto* explore_cmd =
        app.add_subcommand("explore", "survey every sorting orbit of a given size as CSV");
    explore_cmd->fallthrough();
    int explore_n = 0;
    explore_cmd->add_option("n", explore_n, "permutation size, 2..7")
        ->required()
        ->check(CLI::Range(2, 7));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sort_cmd->parsed()) return cmd_sort(g, sort_perm, iterations);
        if (poly_cmd->parsed()) return cmd_polytope(g, poly_spec);
        if (count_cmd->parsed())
            return cmd_count(g, count_spec, count_lam, count_region, count_translate,
                             count_table);
        if (ehr_cmd->parsed()) return cmd_ehrhart(g, ehr_spec, ehr_tmax);
        if (verify_cmd->parsed()) return cmd_verify(g, v_nmax, v_tmax, v_seed, v_corrupt);
        if (explore_cmd->parsed()) return cmd_explore(g, explore_n);
    } catch (const ssx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ssx::UnsupportedQueryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ssx::UnderdeterminedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

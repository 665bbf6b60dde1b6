// irrdec: Ehrhart series, quasi-polynomials and reciprocity/positivity/
// monotonicity checks for rational polytopes, in exact arithmetic.
//
// Exit codes: 0 success or check passed, 1 check violated, 2 input or usage
// error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "irrdec/irrdec.hpp"

namespace {

using namespace irrdec;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

struct Loaded {
    PolytopeFile file;
    std::string digest;
};

Loaded load(const std::string& path) {
    std::string bytes = read_file(path);
    return {parse_polytope(bytes), digest(bytes)};
}

Integer pick_p(const Loaded& in, const std::optional<std::string>& override_p) {
    if (!override_p) return in.file.dilation();
    Integer p;
    if (!detail::parse_integer(*override_p, p) || p < 1) throw PreconditionError("--p must be a positive integer");
    if (!dilation_is_integral(in.file.polytope, p))
        throw PreconditionError("--p " + p.str() + " does not make the polytope integral (minimal dilation " +
                                minimal_dilation(in.file.polytope).str() + ")");
    return p;
}

RatVector parse_vector(const std::string& text, std::size_t dim) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw PreconditionError("empty coordinate in --shift-v");
        out.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    if (out.size() != dim)
        throw PreconditionError("--shift-v needs " + std::to_string(dim) + " coordinates, got " +
                                std::to_string(out.size()));
    return RatVector(std::move(out));
}

void add_certificate(Report& report, const CertifiedShift& shift) {
    report.add("shift.direction", to_string(shift.spec.direction));
    report.add("shift.epsilon", shift.spec.epsilon.str());
    report.add("shift.w", shift.spec.interior_direction.str(","));
    report.add("shift.s", shift.spec.s.str(","));
    for (std::size_t i = 0; i < shift.certificate.boundary_checks.size(); ++i) {
        const auto& c = shift.certificate.boundary_checks[i];
        report.add("certificate.boundary." + std::to_string(i),
                   "(" + c.normal.str(",") + ") base=" + c.at_base.str() + " shift=" + c.at_shift.str());
    }
    for (std::size_t i = 0; i < shift.certificate.wall_checks.size(); ++i) {
        const auto& c = shift.certificate.wall_checks[i];
        report.add("certificate.wall." + std::to_string(i), "(" + c.normal.str(",") + ") shift=" + c.at_shift.str());
    }
}

void add_check(Report& report, const CheckReport& check) {
    for (const auto& [k, v] : check.details) report.add(k, v);
    report.add("violations", std::to_string(check.violations.size()));
    for (std::size_t i = 0; i < check.violations.size(); ++i)
        report.add("violation." + std::to_string(i), check.violations[i]);
    report.status = check.passed() ? Status::pass : Status::fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ehrhart series and generating-function reciprocity via shifted cone decompositions"};
    app.require_subcommand(1);
    bool as_json = false;
    unsigned threads = 1;
    app.add_flag("--json", as_json, "Render the report as JSON");
    app.add_option("--threads", threads, "Worker threads for per-cell enumeration")->check(CLI::PositiveNumber);

    std::string file, file_q;
    std::optional<std::string> p_opt;
    bool interior = false;
    bool certificate = false;
    std::string count_n;
    std::size_t max_n = 0;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    std::optional<std::string> shift_v;

    auto* series = app.add_subcommand("series", "Ehrhart series numerator over (1-t^p)^(dim+1)");
    series->add_option("file", file, "Polytope file")->required();
    series->add_flag("--interior", interior, "Series of the relative interior");
    series->add_option("--p", p_opt, "Dilation parameter (multiple of the minimal one)");
    series->add_flag("--certificate", certificate, "Include the shift certificate");

    auto* quasi = app.add_subcommand("quasipoly", "Ehrhart quasi-polynomial constituents");
    quasi->add_option("file", file, "Polytope file")->required();
    quasi->add_option("--p", p_opt, "Dilation parameter");

    auto* count = app.add_subcommand("count", "Brute-force lattice-point count of nP");
    count->add_option("file", file, "Polytope file")->required();
    count->add_option("n", count_n, "Dilation factor")->required();
    count->add_flag("--interior", interior, "Count relative-interior points");

    auto* oracle = app.add_subcommand("oracle", "Brute-force counts of nP and its interior");
    oracle->add_option("file", file, "Polytope file")->required();
    oracle->add_option("--max-n", max_n, "Largest dilation")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check a theorem on the given input");
    verify->require_subcommand(1);
    auto* v_rec = verify->add_subcommand("reciprocity", "(-1)^D L(-n) = interior count, n = 1..N");
    v_rec->add_option("file", file, "Polytope file")->required();
    v_rec->add_option("--max-n", max_n, "Largest n (default 2p+3)");
    v_rec->add_option("--p", p_opt, "Dilation parameter");
    auto* v_pos = verify->add_subcommand("positivity", "Numerator coefficients are nonnegative");
    v_pos->add_option("file", file, "Polytope file")->required();
    v_pos->add_option("--p", p_opt, "Dilation parameter");
    auto* v_mon = verify->add_subcommand("monotonicity", "nu_P <= nu_Q for P inside Q");
    v_mon->add_option("file_p", file, "Inner polytope file")->required();
    v_mon->add_option("file_q", file_q, "Outer polytope file")->required();
    v_mon->add_option("--p", p_opt, "Common dilation parameter");
    auto* v_cone = verify->add_subcommand("cone-reciprocity", "Cone reciprocity on the cone over P");
    v_cone->add_option("file", file, "Polytope file")->required();
    v_cone->add_option("--trials", trials, "Random evaluation points")->check(CLI::PositiveNumber);
    v_cone->add_option("--seed", seed, "Sampling seed");
    v_cone->add_option("--shift-v", shift_v, "Base point v as \"c1,...,cD\" (D = dim + 1)");
    v_cone->add_option("--p", p_opt, "Dilation parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    Report report;
    for (int i = 1; i < argc; ++i) report.command += (i > 1 ? " " : "") + std::string(argv[i]);

    SeriesOptions options;
    options.threads = threads;

    try {
        if (*series) {
            Loaded in = load(file);
            report.inputs.push_back(in.digest);
            Integer p = pick_p(in, p_opt);
            EhrhartDecomposition dec = ehrhart_decomposition(in.file.polytope, p, interior, options);
            report.add("kind", interior ? "interior" : "closed");
            report.add("p", p.str());
            report.add("dim", std::to_string(dec.series.dim));
            report.add("numerator", dec.series.numerator_str());
            report.add("denominator", dec.series.denominator_str());
            report.add("cells", std::to_string(dec.triangulation.cells.size()));
            if (certificate) add_certificate(report, dec.shift);
        } else if (*quasi) {
            Loaded in = load(file);
            report.inputs.push_back(in.digest);
            Integer p = pick_p(in, p_opt);
            EhrhartSeries s = ehrhart_series(in.file.polytope, p, false, options);
            QuasiPolynomial q = quasipolynomial_from_series(s);
            report.add("p", p.str());
            report.add("dim", std::to_string(s.dim));
            report.add("coefficients", "ascending powers of n");
            for (std::size_t r = 0; r < q.constituents.size(); ++r)
                report.add("f." + std::to_string(r), q.constituents[r].str());
        } else if (*count) {
            Loaded in = load(file);
            report.inputs.push_back(in.digest);
            Integer n;
            if (!detail::parse_integer(count_n, n) || n < 1) throw PreconditionError("N must be a positive integer");
            report.add("n", n.str());
            report.add("kind", interior ? "interior" : "closed");
            report.add("count", oracle_count(in.file.polytope, n, interior).str());
        } else if (*oracle) {
            Loaded in = load(file);
            report.inputs.push_back(in.digest);
            PolytopeRegion region(in.file.polytope);
            report.add("columns", "n closed interior");
            for (std::size_t n = 1; n <= max_n; ++n) {
                Integer nn(n);
                report.add("row." + std::to_string(n),
                           nn.str() + " " + oracle_count(region, in.file.polytope, nn, false).str() + " " +
                               oracle_count(region, in.file.polytope, nn, true).str());
            }
        } else if (*v_rec) {
            Loaded in = load(file);
            report.inputs.push_back(in.digest);
            Integer p = pick_p(in, p_opt);
            std::size_t n = max_n ? max_n : static_cast<std::size_t>(2 * p + 3);
            add_check(report, check_reciprocity_ehrhart(in.file.polytope, p, n, options));
        } else if (*v_pos) {
            Loaded in = load(file);
            report.inputs.push_back(in.digest);
            add_check(report, check_positivity(in.file.polytope, pick_p(in, p_opt), options));
        } else if (*v_mon) {
            Loaded inner = load(file);
            Loaded outer = load(file_q);
            report.inputs.push_back(inner.digest);
            report.inputs.push_back(outer.digest);
            Integer p = lcm(inner.file.dilation(), outer.file.dilation());
            if (p_opt) {
                p = pick_p(inner, p_opt);
                pick_p(outer, p_opt);
            }
            add_check(report, check_monotonicity(inner.file.polytope, outer.file.polytope, p, options));
        } else if (*v_cone) {
            Loaded in = load(file);
            report.inputs.push_back(in.digest);
            Integer p = pick_p(in, p_opt);
            Cone cone = cone_over(in.file.polytope, p);
            RatVector base = shift_v ? parse_vector(*shift_v, cone.ambient_dim) : RatVector(cone.ambient_dim);
            add_check(report, check_reciprocity_cone(cone, base, trials, seed, options));
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << file << ": " << e.what() << "\n";
        return exit_input;
    } catch (const ShiftSearchError& e) {
        std::cerr << "error: shift search failed: " << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }

    std::cout << (as_json ? report.json() : report.text());
    return report.status == Status::pass ? exit_ok : exit_violation;
}

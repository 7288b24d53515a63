// seglink: linking numbers of straight segments and polygonal links.
//
// Subcommands
//   lk <file>        linking number of a two-component link file
//   invariants       segment-pair invariants (file or 12 coordinates)
//   verify           closed form vs the three integral oracles on random pairs
//   table            CSV surfaces / asymptotics checks
//   periodic         lattice convergence scan as CSV
//   builtins         built-in example links; optional JSON export
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 geometric error (touching or intersecting input).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seglink/closed_form.hpp"
#include "seglink/invariants.hpp"
#include "seglink/link_engine.hpp"
#include "seglink/link_io.hpp"
#include "seglink/periodic.hpp"
#include "seglink/quadrature.hpp"
#include "seglink/rng.hpp"
#include "seglink/sampling.hpp"

namespace {

using namespace seglink;

constexpr double kPi = std::numbers::pi;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Output sink: stdout by default, --out redirects to a file.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw parse_error("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// ---------------------------------------------------------------- lk

int cmd_lk(const std::string& path) {
    const PolyLink link = read_link_file(path);
    const LinkReport report = lk_link(link);
    std::cout << "lk_total = " << fmt17(report.lk_total) << "\n";
    std::cout << "pairs = " << report.pair_count << "\n";
    std::cout << "branches: generic=" << report.branch_count(LkBranch::generic)
              << " parallel=" << report.branch_count(LkBranch::parallel)
              << " coplanar_d0=" << report.branch_count(LkBranch::coplanar_d0)
              << " degenerate=" << report.branch_count(LkBranch::degenerate) << "\n";
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    return 0;
}

// ---------------------------------------------------------------- invariants

int cmd_invariants(const std::string& path, const std::vector<double>& coords) {
    Segment s1, s2;
    if (!coords.empty()) {
        s1 = {{coords[0], coords[1], coords[2]}, {coords[3], coords[4], coords[5]}};
        s2 = {{coords[6], coords[7], coords[8]}, {coords[9], coords[10], coords[11]}};
    } else if (!path.empty()) {
        const PolyLink link = read_link_file(path);
        if (link.comp1.size() != 2 || link.comp2.size() != 2) {
            throw parse_error("invariants: file must describe one segment per component "
                              "(2 vertices each)");
        }
        s1 = {link.comp1[0], link.comp1[1]};
        s2 = {link.comp2[0], link.comp2[1]};
    } else {
        throw parse_error("invariants: give a link file or --coords with 12 numbers");
    }

    const SegmentPairInvariants inv = extract_invariants(s1, s2);
    std::string flags;
    if (inv.parallel) flags += " parallel";
    if (inv.degenerate1) flags += " degenerate1";
    if (inv.degenerate2) flags += " degenerate2";

    if (!inv.degenerate()) std::cout << "alpha = " << fmt17(inv.alpha) << "\n";
    if (!inv.degenerate() && !inv.parallel) {
        std::cout << "d = " << fmt17(inv.d) << "\n";
        std::cout << "a1 = " << fmt17(inv.a1) << "\n";
        std::cout << "b1 = " << fmt17(inv.b1) << "\n";
        std::cout << "a2 = " << fmt17(inv.a2) << "\n";
        std::cout << "b2 = " << fmt17(inv.b2) << "\n";
    }
    std::cout << "flags:" << (flags.empty() ? " none" : flags.c_str()) << "\n";
    const LkResult lk = lk_from_invariants(inv);
    std::cout << "lk = " << fmt17(lk.value) << " (" << to_string(lk.branch) << ")\n";
    return 0;
}

// ---------------------------------------------------------------- verify

// Oracles assume d > 0; mirror the invariants and negate for d < 0.
double oracle_reduced(const SegmentPairInvariants& inv, const QuadratureConfig& cfg) {
    if (inv.d > 0.0) return reduced_double_integral(inv, cfg);
    SegmentPairInvariants mirrored = inv;
    mirrored.d = -inv.d;
    return -reduced_double_integral(mirrored, cfg);
}

double oracle_single(const SegmentPairInvariants& inv, const QuadratureConfig& cfg) {
    if (inv.d > 0.0) return lk_single_integral(inv, cfg);
    SegmentPairInvariants mirrored = inv;
    mirrored.d = -inv.d;
    return -lk_single_integral(mirrored, cfg);
}

int cmd_verify(int count, std::uint64_t seed, double tol) {
    SplitMix64 rng(seed);
    const QuadratureConfig cfg;
    double max_gauss = 0.0, max_reduced = 0.0, max_single = 0.0;
    for (int i = 0; i < count; ++i) {
        const auto [s1, s2] = sample_skew_pair(rng);
        const SegmentPairInvariants inv = extract_invariants(s1, s2);
        const double closed = lk_from_invariants(inv).value;
        max_gauss = std::max(max_gauss, std::abs(closed - gauss_lk_segments(s1, s2, cfg)));
        max_reduced = std::max(max_reduced, std::abs(closed - oracle_reduced(inv, cfg)));
        max_single = std::max(max_single, std::abs(closed - oracle_single(inv, cfg)));
    }
    const double worst = std::max({max_gauss, max_reduced, max_single});
    std::cout << "pairs = " << count << "\n";
    std::cout << "seed = " << seed << "\n";
    std::cout << "max |closed - gauss_integral|   = " << fmt17(max_gauss) << "\n";
    std::cout << "max |closed - reduced_integral| = " << fmt17(max_reduced) << "\n";
    std::cout << "max |closed - single_integral|  = " << fmt17(max_single) << "\n";
    std::cout << "tolerance = " << fmt17(tol) << "\n";
    std::cout << (worst <= tol ? "PASS" : "FAIL") << "\n";
    return worst <= tol ? 0 : 1;
}

// ---------------------------------------------------------------- table

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
    if (lo == -hi) {
        // keep symmetric ranges exactly symmetric so emitted tables expose
        // odd/even structure without grid noise
        for (int i = 0; i < n / 2; ++i) out[n - 1 - i] = -out[i];
        if (n % 2 == 1) out[n / 2] = 0.0;
    }
    return out;
}

int table_at_surface(std::ostream& os, double a, double l, double dmax, int grid) {
    os << "d,alpha,at\n";
    for (double d : linspace(-dmax, dmax, grid)) {
        for (double alpha : linspace(0.0, kPi, grid)) {
            os << fmt17(d) << "," << fmt17(alpha) << "," << fmt17(at_term(a, a + l, d, alpha))
               << "\n";
        }
    }
    return 0;
}

int table_lk_surface(std::ostream& os, double l, double alpha, double amax, double dmax,
                     int grid) {
    os << "a,d,lk\n";
    for (double a : linspace(-amax, amax, grid)) {
        for (double d : linspace(-dmax, dmax, grid)) {
            SegmentPairInvariants inv;
            inv.alpha = alpha;
            inv.d = d;
            inv.a1 = inv.a2 = a;
            inv.b1 = inv.b2 = a + l;
            os << fmt17(a) << "," << fmt17(d) << "," << fmt17(lk_from_invariants(inv).value)
               << "\n";
        }
    }
    return 0;
}

int table_asymptotics(std::ostream& os) {
    struct Row {
        const char* name;
        double parameter;
        double value;
        double limit;
        double tolerance;
    };
    const auto lk_inv = [](double alpha, double d, double a1, double b1, double a2, double b2) {
        SegmentPairInvariants inv;
        inv.alpha = alpha;
        inv.d = d;
        inv.a1 = a1;
        inv.b1 = b1;
        inv.a2 = a2;
        inv.b2 = b2;
        return lk_from_invariants(inv).value;
    };

    std::vector<Row> rows;
    rows.push_back({"d_to_0_disjoint", 1e-6, lk_inv(kPi / 2, 1e-6, 1, 2, 1, 2), 0.0, 1e-5});
    rows.push_back({"d_to_0_crossing_pos", 1e-6, lk_inv(kPi / 2, 1e-6, -1, 1, -1, 1), -0.5, 1e-5});
    rows.push_back({"d_to_0_crossing_neg", -1e-6, lk_inv(kPi / 2, -1e-6, -1, 1, -1, 1), 0.5, 1e-5});
    rows.push_back({"d_to_infinity", 1e6, lk_inv(kPi / 2, 1e6, 0, 1, 0, 1), 0.0, 1e-5});
    rows.push_back({"length_to_0", 1e-9, lk_simple_orthogonal(1e-9, 1, 1), 0.0, 1e-9});
    rows.push_back({"d_to_0_simple_orthogonal", 1e-12, lk_simple_orthogonal(1, 1, 1e-12),
                    -0.125, 1e-6});
    rows.push_back({"alpha_to_0", 1e-8, lk_inv(1e-8, 1, 0, 1, 0, 1), 0.0, 1e-5});
    rows.push_back({"alpha_to_pi", kPi - 1e-8, lk_inv(kPi - 1e-8, 1, 0, 1, 0, 1), 0.0, 1e-5});
    rows.push_back({"endpoints_to_infinity", 1e6, lk_inv(kPi / 2, 1, 1e6, 1e6 + 1, 1e6, 1e6 + 1),
                    0.0, 1e-4});

    os << "case,parameter,value,limit,tolerance,status\n";
    bool all_pass = true;
    for (const Row& r : rows) {
        const bool pass = std::abs(r.value - r.limit) <= r.tolerance;
        all_pass = all_pass && pass;
        os << r.name << "," << fmt17(r.parameter) << "," << fmt17(r.value) << ","
           << fmt17(r.limit) << "," << fmt17(r.tolerance) << "," << (pass ? "pass" : "fail")
           << "\n";
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- periodic

int cmd_periodic(const LatticeSpec& spec, int nmax, std::ostream& os) {
    const auto rows = convergence_scan(spec, nmax);
    os << "n,partial_lk,delta\n";
    for (const auto& r : rows) {
        os << r.n << "," << fmt17(r.partial_lk) << "," << fmt17(r.delta_vs_previous) << "\n";
    }
    os << "# limit_estimate = " << fmt17(rows.back().partial_lk) << "\n";
    return 0;
}

// ---------------------------------------------------------------- builtins

int cmd_builtins(const std::string& export_name, std::ostream& os) {
    if (!export_name.empty()) {
        const auto& links = builtin_links();
        const auto it = links.find(export_name);
        if (it == links.end()) {
            std::cerr << "unknown builtin link: " << export_name << "\n";
            return 2;
        }
        os << write_link_json(it->second);
        return 0;
    }
    for (const auto& [name, link] : builtin_links()) {
        const LinkReport r = lk_link(link);
        os << name << ": lk = " << fmt17(r.lk_total) << " (" << link.comp1.size() << "+"
           << link.comp2.size() << " vertices, " << r.pair_count << " pairs)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss linking numbers of straight segments and polygonal links"};
    app.require_subcommand(1);

    // lk
    std::string lk_path;
    auto* sub_lk = app.add_subcommand("lk", "linking number of a two-component link file");
    sub_lk->add_option("file", lk_path, "link JSON file")->required();

    // invariants
    std::string inv_path;
    std::vector<double> inv_coords;
    auto* sub_inv = app.add_subcommand("invariants", "isometry invariants of a segment pair");
    sub_inv->add_option("file", inv_path, "link JSON file with one segment per component");
    sub_inv->add_option("--coords", inv_coords,
                        "a1x a1y a1z b1x b1y b1z a2x a2y a2z b2x b2y b2z")
        ->expected(12);

    // verify
    int count = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    auto* sub_verify =
        app.add_subcommand("verify", "compare the closed form against the integral oracles");
    sub_verify->add_option("--count", count, "number of random pairs")
        ->check(CLI::PositiveNumber);
    sub_verify->add_option("--seed", seed, "PRNG seed (splitmix64)");
    sub_verify->add_option("--tol", tol, "maximum allowed deviation")->check(CLI::PositiveNumber);

    // table
    std::string kind;
    std::string out_path;
    int grid = 41;
    double opt_a = 0.0, opt_l = 1.0, opt_alpha = kPi / 2, opt_amax = 3.0, opt_dmax = 3.0;
    auto* sub_table = app.add_subcommand("table", "CSV surface tables and asymptotics checks");
    sub_table->add_option("kind", kind, "at-surface | lk-surface | asymptotics")
        ->required()
        ->check(CLI::IsMember({"at-surface", "lk-surface", "asymptotics"}));
    sub_table->add_option("--grid", grid, "points per axis")->check(CLI::PositiveNumber);
    sub_table->add_option("--a", opt_a, "fixed initial endpoint coordinate");
    sub_table->add_option("--l", opt_l, "fixed segment length");
    sub_table->add_option("--alpha", opt_alpha, "fixed angle (lk-surface)");
    sub_table->add_option("--amax", opt_amax, "a range half-width (lk-surface)");
    sub_table->add_option("--dmax", opt_dmax, "d range half-width");
    sub_table->add_option("--out", out_path, "write CSV to a file instead of stdout");

    // periodic
    int k = 1;
    std::optional<int> nmax_opt;
    std::string spec_path;
    std::string periodic_out;
    auto* sub_periodic = app.add_subcommand("periodic", "lattice convergence scan (CSV)");
    sub_periodic->add_option("--k", k, "number of translation directions")
        ->check(CLI::IsMember({1, 2, 3}));
    sub_periodic->add_option("--nmax", nmax_opt, "largest copy range");
    sub_periodic->add_option("--spec", spec_path, "custom lattice JSON file");
    sub_periodic->add_option("--out", periodic_out, "write CSV to a file instead of stdout");

    // builtins
    std::string export_name;
    std::string builtins_out;
    auto* sub_builtins = app.add_subcommand("builtins", "built-in example links");
    sub_builtins->add_option("--export", export_name, "write the named link as JSON");
    sub_builtins->add_option("--out", builtins_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sub_lk->parsed()) return cmd_lk(lk_path);
        if (sub_inv->parsed()) return cmd_invariants(inv_path, inv_coords);
        if (sub_verify->parsed()) return cmd_verify(count, seed, tol);
        if (sub_table->parsed()) {
            Sink sink(out_path);
            if (kind == "at-surface") return table_at_surface(sink.out(), opt_a, opt_l, opt_dmax, grid);
            if (kind == "lk-surface")
                return table_lk_surface(sink.out(), opt_l, opt_alpha, opt_amax, opt_dmax, grid);
            return table_asymptotics(sink.out());
        }
        if (sub_periodic->parsed()) {
            LatticeSpec spec;
            if (spec_path.empty()) {
                spec = reference_lattice(k);
            } else {
                spec = read_lattice_file(spec_path);
                const bool k_given = sub_periodic->count("--k") > 0;
                if (k_given && static_cast<int>(spec.directions.size()) != k) {
                    throw parse_error(
                        "periodic: --k disagrees with the direction count in the spec file");
                }
                k = static_cast<int>(spec.directions.size());
            }
            const int defaults[4] = {0, 100, 40, 12};
            const int nmax = nmax_opt.value_or(defaults[std::clamp(k, 1, 3)]);
            Sink sink(periodic_out);
            return cmd_periodic(spec, nmax, sink.out());
        }
        if (sub_builtins->parsed()) {
            Sink sink(builtins_out);
            return cmd_builtins(export_name, sink.out());
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const geometry_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

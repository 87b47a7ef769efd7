// Command-line front end: closed-formula cohomology, the brute-force oracle,
// complex exports, and the exhaustive verification suite.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schubert/closed_form.hpp"
#include "schubert/homology.hpp"
#include "schubert/io.hpp"
#include "schubert/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        schubert::write_text_file(out_path, content);
}

std::string render_module(const schubert::GradedModule& hm, int n, int k,
                          const std::string& format) {
    if (format == "json") return schubert::module_to_json(hm, n, k).dump(2) + "\n";
    if (format == "csv") return schubert::module_to_csv(hm);
    return schubert::module_to_table(hm, n, k);
}

int cmd_cohomology(int n, int k, const std::string& coeff, const std::string& method,
                   const std::string& format, const std::string& out_path) {
    const auto ring = schubert::CoefficientRing::parse(coeff);
    if (!ring) {
        std::cerr << "unknown coefficient ring '" << coeff << "'; expected Z, Q or Z/<m>\n";
        return exit_usage;
    }

    if (method == "closed" || method == "oracle") {
        schubert::GradedModule hm =
            method == "closed"
                ? schubert::cohomology_closed(n, k, *ring)
                : schubert::homology_with_coefficients(
                      schubert::build_complex(n, k, schubert::Direction::Cohomological), *ring);
        emit(render_module(hm, n, k, format), out_path);
        return exit_ok;
    }

    // both: run the independent routes and diff them
    const schubert::GradedModule closed = schubert::cohomology_closed(n, k, *ring);
    const schubert::GradedModule oracle = schubert::homology_with_coefficients(
        schubert::build_complex(n, k, schubert::Direction::Cohomological), *ring);
    emit(render_module(closed, n, k, format), out_path);
    if (closed == oracle) {
        std::cerr << "closed formula and oracle agree\n";
        return exit_ok;
    }
    std::cerr << "MISMATCH between closed formula and oracle:\n";
    for (int m = 0; m <= oracle.top_degree(); ++m)
        if (!(closed.at(m) == oracle.at(m)))
            std::cerr << "  degree " << m << ": closed "
                      << schubert::group_to_string(closed.at(m), *ring) << ", oracle "
                      << schubert::group_to_string(oracle.at(m), *ring) << '\n';
    return exit_mismatch;
}

int cmd_complex(int n, int k, const std::string& format, const std::string& out_path) {
    if (format == "json")
        emit(schubert::edges_to_json(n, k).dump(2) + "\n", out_path);
    else if (format == "csv")
        emit(schubert::edges_to_csv(n, k), out_path);
    else
        emit(schubert::complex_to_dot(n, k), out_path);
    return exit_ok;
}

int cmd_verify(int max_n) {
    const auto outcome = schubert::run_verification(max_n, &std::cout);
    if (outcome.ok) {
        std::cout << "all invariants hold for " << outcome.grassmannians_checked
                  << " Grassmannians (n <= " << max_n << ")\n";
        return exit_ok;
    }
    return exit_mismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert cell cohomology of real Grassmannians"};
    app.require_subcommand(1);

    int n = 0, k = 0, max_n = 9;
    std::string coeff = "Z", method = "closed", format, out_path;

    auto* cohomology = app.add_subcommand("cohomology", "compute H*(Gr_k(n); R)");
    cohomology->add_option("--n", n, "ambient dimension")->required();
    cohomology->add_option("--k", k, "subspace dimension")->required();
    cohomology->add_option("--coeff", coeff, "coefficients: Z, Q or Z/<m>");
    cohomology->add_option("--method", method, "closed | oracle | both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    cohomology->add_option("--format", format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cohomology->add_option("--out", out_path, "write to a file instead of stdout");

    auto* complex_cmd = app.add_subcommand("complex", "export the differential as a graph");
    complex_cmd->add_option("--n", n, "ambient dimension")->required();
    complex_cmd->add_option("--k", k, "subspace dimension")->required();
    complex_cmd->add_option("--format", format, "dot | json | csv")
        ->check(CLI::IsMember({"dot", "json", "csv"}));
    complex_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the exhaustive invariant suite");
    verify->add_option("--max-n", max_n, "check all 1 <= k <= n <= max-n (default 9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cohomology->parsed())
            return cmd_cohomology(n, k, coeff, method, format.empty() ? "table" : format,
                                  out_path);
        if (complex_cmd->parsed())
            return cmd_complex(n, k, format.empty() ? "dot" : format, out_path);
        return cmd_verify(max_n);
    } catch (const schubert::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_resource;
    }
}

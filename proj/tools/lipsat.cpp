#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lipsat/errors.hpp"
#include "lipsat/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact membership checks for relative Lipschitz saturation, "
                 "saturation and seminormalization of affine varieties"};

    std::string file;
    lipsat::RunOptions opts;
    std::string arcs = "standard";
    std::vector<double> scales;
    bool print_only = false;

    app.add_option("file", file, "session file")->required();
    app.add_option("--max-relation-degree", opts.bounds.max_relation_degree,
                   "certificate search bound n_max")
        ->capture_default_str();
    app.add_option("--max-cofactor-degree", opts.bounds.max_cofactor_degree,
                   "certificate search bound d_max")
        ->capture_default_str();
    app.add_option("--trunc", opts.trunc, "power series truncation order")
        ->capture_default_str();
    app.add_option("--seed", opts.ladder.seed, "sampler seed")
        ->capture_default_str();
    app.add_option("--scales", scales, "sampler scales, decreasing");
    app.add_option("--samples", opts.ladder.samples_per_scale,
                   "sampler draws per scale")
        ->capture_default_str();
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--arcs", arcs, "arc falsifier family")
        ->check(CLI::IsMember({"standard", "none"}))
        ->capture_default_str();
    app.add_flag("--print", print_only, "parse and reprint the session");

    CLI11_PARSE(app, argc, argv);
    opts.standard_arcs = (arcs == "standard");
    if (!scales.empty()) opts.ladder.scales = scales;

    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    try {
        lipsat::Session session = lipsat::parse_session(buf.str());
        if (print_only) {
            std::cout << lipsat::print_session(session);
            return 0;
        }
        lipsat::RunResult result = lipsat::run_session(session, opts);
        std::cout << result.text;
        if (result.exit_code != 0) {
            std::cerr << "error: "
                      << result.documents.back().value("error", "unknown")
                      << "\n";
        }
        return result.exit_code;
    } catch (const lipsat::InconsistentChain& e) {
        std::cerr << "soundness violation: " << e.what() << "\n";
        return 2;
    } catch (const lipsat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

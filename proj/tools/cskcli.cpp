#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csk/cli.hpp"
#include "csk/transforms.hpp"

namespace {

std::vector<double> parse_schedule(const std::string& text) {
    std::vector<double> out;
    std::stringstream is(text);
    std::string item;
    while (std::getline(is, item, ','))
        out.push_back(std::stod(item));
    return out;
}

int with_output(const std::string& out_path,
                const std::function<int(std::ostream&)>& body) {
    if (out_path.empty()) return body(std::cout);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << '\n';
        return 2;
    }
    return body(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cauchy-Stieltjes kernel family toolkit"};
    app.require_subcommand(1);

    std::string law_path, grid_text, out_path, which = "G", suite = "all";
    std::string eps_text;
    double tol = 0.0;
    bool tol_set = false;
    std::uint64_t seed = 42;

    CLI::App* density = app.add_subcommand(
        "density", "Tabulate the generating measure's density and atoms");
    density->fallthrough();  // lets --tol / --eps-schedule follow the subcommand
    density->add_option("--law", law_path, "law JSON file")->required();
    density->add_option("--grid", grid_text, "grid start:stop:count")
        ->required();
    density->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* transform = app.add_subcommand(
        "transform", "Tabulate a closed-form transform over a grid");
    transform->fallthrough();
    transform->add_option("--law", law_path, "law JSON file")->required();
    transform->add_option("--which", which,
                          "one of G, R, PV, M, mean-of-theta");
    transform->add_option("--grid", grid_text, "grid start:stop:count")
        ->required();
    transform->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify =
        app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    verify->add_option("--suite", suite,
                       "reciprocity|domains|roundtrip|gineq|bis|reproductive|all");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--out", out_path, "output file (default stdout)");

    app.add_option("--tol", tol, "relative comparison tolerance override")
        ->each([&tol_set](const std::string&) { tol_set = true; });
    app.add_option("--eps-schedule", eps_text,
                   "comma-separated decreasing Stieltjes epsilons");

    CLI11_PARSE(app, argc, argv);

    try {
        if (const char* env = std::getenv("CSK_TOL"))
            csk::tolerances().rel = std::stod(env);
        if (tol_set) csk::tolerances().rel = tol;
        if (!eps_text.empty())
            csk::set_default_eps_schedule(parse_schedule(eps_text));

        if (density->parsed()) {
            const csk::LawSpec spec = csk::load_law_file(law_path);
            const csk::GridSpec grid = csk::parse_grid(grid_text);
            return with_output(out_path, [&](std::ostream& os) {
                return csk::run_density(spec, grid, os);
            });
        }
        if (transform->parsed()) {
            const csk::LawSpec spec = csk::load_law_file(law_path);
            const csk::GridSpec grid = csk::parse_grid(grid_text);
            return with_output(out_path, [&](std::ostream& os) {
                return csk::run_transform(spec, which, grid, os);
            });
        }
        return with_output(out_path, [&](std::ostream& os) {
            return csk::run_verify(suite, seed, os);
        });
    } catch (const csk::InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const csk::InvalidMap& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const csk::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const csk::Error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}

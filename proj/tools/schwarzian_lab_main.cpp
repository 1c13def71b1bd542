// schwarzian_lab: bounds, norms, extremal functions and verification for the Robertson class.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "schwarzian_lab/commands.hpp"
#include "schwarzian_lab/errors.hpp"

namespace sl = schwarzian_lab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schwarzian and pre-Schwarzian norms of Robertson-class functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sl::kVersion);

    std::string alpha_text, r_text, z0_text;

    auto* bound = app.add_subcommand("bound", "Closed-form norm bounds for a given alpha");
    bound->add_option("--alpha", alpha_text, "alpha in radians or as pi/k")->required();
    bound->add_option("--z", r_text, "radius for the pointwise Schwarzian bound");

    std::string spec_text, kind_text = "schwarzian";
    sl::GridConfig grid;
    auto* norm = app.add_subcommand("norm", "Numerical hyperbolic sup-norm of a function");
    norm->add_option("--spec", spec_text, "function spec, e.g. f0(alpha=pi/3)")->required();
    norm->add_option("--kind", kind_text, "pre | schwarzian")->check(CLI::IsMember({"pre", "schwarzian"}));
    norm->add_option("--radii", grid.n_radii, "number of radii in the polar grid");
    norm->add_option("--angles", grid.n_angles, "number of angles in the polar grid");
    norm->add_option("--rmax", grid.r_max, "largest scanned radius, < 1");

    auto* extremal = app.add_subcommand("extremal", "The extremal function f_{z0,p} and its attained value");
    extremal->add_option("--alpha", alpha_text, "alpha in radians or as pi/k")->required();
    extremal->add_option("--z0", z0_text, "real point in (-1, 1)")->required();

    std::string amin_text, amax_text, out_path;
    std::size_t steps = 0;
    auto* sweep = app.add_subcommand("sweep", "CSV table of bounds and numeric norms of f0 over alpha");
    sweep->add_option("--alpha-min", amin_text)->required();
    sweep->add_option("--alpha-max", amax_text)->required();
    sweep->add_option("--steps", steps)->required();
    sweep->add_option("--out", out_path, "output CSV file")->required();

    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--out", verify_out, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bound) {
            std::optional<double> r;
            if (!r_text.empty()) r = sl::parse_real_literal(r_text);
            std::cout << sl::cmd_bound(sl::parse_real_literal(alpha_text), r).to_json();
        } else if (*norm) {
            const auto spec = sl::parse_spec(spec_text);
            std::cout << sl::cmd_norm(spec, sl::parse_norm_kind(kind_text), grid).to_json();
        } else if (*extremal) {
            std::cout << sl::cmd_extremal(sl::parse_real_literal(alpha_text), sl::parse_real_literal(z0_text))
                             .to_json();
        } else if (*sweep) {
            write_file(out_path, sl::cmd_sweep(sl::parse_real_literal(amin_text), sl::parse_real_literal(amax_text),
                                               steps));
        } else if (*verify) {
            sl::AcceptanceContext ctx;
            ctx.seed = sl::seed_from_environment();
            const auto outcome = sl::cmd_verify(ctx);
            for (const auto& c : outcome.criteria)
                std::cerr << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.detail << '\n';
            if (verify_out.empty()) std::cout << outcome.report.to_json();
            else write_file(verify_out, outcome.report.to_json());
            return outcome.passed ? kExitOk : kExitVerifyFailed;
        }
    } catch (const sl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sl::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

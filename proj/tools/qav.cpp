// qav: command-line front end for the verification suites.
//
//   qav verify --suite <id> --weight W --zmin A --zmax B [--wmin C --wmax D]
//              --sign {plus|minus|both} --format {text|json} [--out FILE]
//              [--spot-check SEED]
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 configuration or
// usage error, 3 inconclusive (a support-class guard fired).

#include <qav/suites.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic verifier for the two current realizations and "
                 "their Hopf structures"};
    app.require_subcommand(1);

    qav::SuiteConfig cfg;
    if (const char* env = std::getenv("QAV_DEFAULT_WEIGHT")) {
        try {
            cfg.weight = std::stoi(env);
        } catch (...) {
            std::cerr << "QAV_DEFAULT_WEIGHT is not an integer\n";
            return 2;
        }
    }

    std::string out_file;
    long long spot_seed = -1;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite,
                       "ybe | rll-eval | drinfeld-eval | coproduct-transport | "
                       "antipode-transport | hopf-axioms | counterexample | all")
        ->capture_default_str();
    verify->add_option("--weight", cfg.weight, "weight cutoff W")->capture_default_str();
    verify->add_option("--zmin", cfg.zmin, "z window lower bound")->capture_default_str();
    verify->add_option("--zmax", cfg.zmax, "z window upper bound")->capture_default_str();
    verify->add_option("--wmin", cfg.wmin, "w window lower bound")->capture_default_str();
    verify->add_option("--wmax", cfg.wmax, "w window upper bound")->capture_default_str();
    verify->add_option("--sign", cfg.sign, "plus | minus | both")->capture_default_str();
    verify->add_option("--format", cfg.format, "text | json")->capture_default_str();
    verify->add_option("--out", out_file, "write the report to a file instead of stdout");
    verify->add_option("--spot-check", spot_seed,
                       "substitute seeded random rationals for the formal units "
                       "(fast pre-screening of the symbolic suites)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (spot_seed >= 0) {
        cfg.spot_check = true;
        cfg.spot_seed = static_cast<uint64_t>(spot_seed);
    }

    try {
        qav::VerificationReport report = qav::run_suite(cfg);
        std::string text =
            cfg.format == "json" ? qav::emit_json(report) : qav::emit_text(report);
        if (!out_file.empty()) {
            std::ofstream f(out_file, std::ios::binary);
            if (!f) {
                std::cerr << "cannot open " << out_file << "\n";
                return 2;
            }
            f << text;
        } else {
            std::cout << text;
        }
        return report.exit_code();
    } catch (const qav::Error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const qav::Inconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    }
}

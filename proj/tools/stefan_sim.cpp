// stefan_sim: self-similar profile tables, trajectory runs, and structural
// certification for the decaying-flux melting model.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stefan/commands.hpp"
#include "stefan/config.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

stefan::RunSpec load_spec(const std::string& config_path,
                          const std::string& out_path) {
    stefan::RunSpec spec = stefan::parse_config(slurp(config_path));
    spec.out = out_path;
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-phase melting front simulator"};
    app.require_subcommand(1);

    double h = 0.0;
    int samples = 400;
    std::string out_path;
    std::string config_path;

    auto* profile = app.add_subcommand("profile", "tabulate the self-similar profile");
    profile->set_help_flag("--help", "print help");  // frees -h for the flux
    profile->add_option("--h", h, "flux amplitude")->required();
    profile->add_option("--samples", samples, "grid intervals in the table");
    profile->add_option("--out", out_path, "output CSV path")->required();

    auto* runcmd = app.add_subcommand("run", "integrate one scenario");
    runcmd->add_option("--config", config_path, "key=value config file")->required();
    runcmd->add_option("--out", out_path, "output CSV path")->required();

    auto* certify = app.add_subcommand("certify",
                                       "run the lower/generic/upper triple and check structure");
    certify->add_option("--config", config_path, "key=value config file")->required();
    certify->add_option("--out", out_path, "violations CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (profile->parsed())
            return stefan::cmd_profile(h, samples, out_path, std::cout);
        if (runcmd->parsed())
            return stefan::cmd_run(load_spec(config_path, out_path));
        return stefan::cmd_certify(load_spec(config_path, out_path), std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

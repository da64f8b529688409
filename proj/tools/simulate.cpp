// simulate — sweep reference sizes, write the degradation table and plots.
//
// Exit codes: 0 success, 1 configuration error, 2 I/O error.

#include "refcons/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw refcons::ConfigError("sizes: '" + item + "' is not an integer");
        }
        if (used != item.size()) {
            throw refcons::ConfigError("sizes: '" + item + "' is not an integer");
        }
        out.push_back(v);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulate consumption of a bounded phase reference under repeated use"};

    refcons::SweepConfig config;
    std::string sizes = "5,10,15,20,25,30";
    std::string csv;
    std::string svg_asym;
    std::string svg_fid;

    app.add_option("--sizes", sizes, "Comma-separated reference cutoffs N")->capture_default_str();
    app.add_option("--uses", config.uses, "Number of uses mu_max per reference")->capture_default_str();
    app.add_option("--theta", config.theta, "Phase of the reference and of the target state")
        ->capture_default_str();
    app.add_option("--csv", csv, "CSV output path (stdout when omitted)");
    app.add_option("--svg-asymmetry", svg_asym, "SVG plot of normalized asymmetry vs uses");
    app.add_option("--svg-fidelity", svg_fid, "SVG plot of fidelity vs uses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        config.sizes = parse_sizes(sizes);
        if (!csv.empty()) config.csv_path = csv;
        if (!svg_asym.empty()) config.svg_asymmetry_path = svg_asym;
        if (!svg_fid.empty()) config.svg_fidelity_path = svg_fid;
        config.validate();
    } catch (const refcons::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }

    try {
        const auto series = refcons::run_sweep(config);
        if (config.csv_path) {
            refcons::write_csv(series, *config.csv_path);
        } else {
            refcons::write_csv(series, std::cout);
        }
        if (config.svg_asymmetry_path) {
            refcons::render_svg(series, refcons::Metric::normalized_asymmetry, *config.svg_asymmetry_path);
        }
        if (config.svg_fidelity_path) {
            refcons::render_svg(series, refcons::Metric::fidelity, *config.svg_fidelity_path);
        }
    } catch (const refcons::OutputError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include "refcons/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>

namespace refcons {

void SweepConfig::validate() const {
    if (sizes.empty()) {
        throw ConfigError("sizes: at least one reference size is required");
    }
    for (int n : sizes) {
        if (n < 1) {
            throw ConfigError("sizes: every size must be >= 1, got " + std::to_string(n));
        }
    }
    if (uses < 1) {
        throw ConfigError("uses: must be >= 1, got " + std::to_string(uses));
    }
    if (!std::isfinite(theta)) {
        throw ConfigError("theta: must be finite");
    }
}

std::vector<DegradationSeries> run_sweep(const SweepConfig& config) {
    config.validate();
    std::vector<std::future<DegradationSeries>> jobs;
    jobs.reserve(config.sizes.size());
    for (int n : config.sizes) {
        ProtocolConfig pc{n, config.theta, config.uses};
        jobs.push_back(std::async(std::launch::async, [pc] { return run_degradation(pc); }));
    }
    std::vector<DegradationSeries> out;
    out.reserve(jobs.size());
    for (auto& job : jobs) {
        out.push_back(job.get());
    }
    return out;
}

// ---------------------------------------------------------------- CSV

std::string format_real(double x) {
    std::array<char, 64> buf{};
    if (x != 0.0 && std::abs(x) < 1e-4) {
        std::snprintf(buf.data(), buf.size(), "%.11e", x);
    } else {
        std::snprintf(buf.data(), buf.size(), "%.12f", x);
    }
    return buf.data();
}

void write_csv(const std::vector<DegradationSeries>& series, std::ostream& out) {
    std::vector<std::size_t> order(series.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return series[a].config.cutoff_n < series[b].config.cutoff_n;
    });

    out << kCsvHeader << '\n';
    for (std::size_t k : order) {
        const auto& s = series[k];
        for (const auto& r : s.records) {
            out << s.config.cutoff_n << ',' << r.mu << ','
                << (r.fidelity ? format_real(*r.fidelity) : std::string{}) << ','
                << format_real(r.asymmetry_bits) << ',' << format_real(r.normalized_asymmetry) << ','
                << format_real(r.reference_entropy_bits) << '\n';
        }
    }
}

void write_csv(const std::vector<DegradationSeries>& series, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw OutputError("cannot open " + path.string() + " for writing");
    }
    write_csv(series, f);
    f.flush();
    if (!f) {
        throw OutputError("write failed for " + path.string());
    }
}

// ---------------------------------------------------------------- SVG

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 440;
constexpr double kLeft = 70;
constexpr double kRight = 130;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

int tick_step(int span) {
    for (int step : {1, 2, 5, 10, 20, 25, 50, 100, 200, 250, 500}) {
        if (span / step <= 10) {
            return step;
        }
    }
    return (span + 9) / 10;
}

} // namespace

std::string render_svg(const std::vector<DegradationSeries>& series, Metric metric) {
    if (series.empty()) {
        throw std::invalid_argument("render_svg: no series to plot");
    }

    int max_mu = 1;
    for (const auto& s : series) {
        for (const auto& r : s.records) {
            max_mu = std::max(max_mu, r.mu);
        }
    }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double mu) { return kLeft + plot_w * mu / max_mu; };
    const auto py = [&](double v) { return kTop + plot_h * (1.0 - std::clamp(v, 0.0, 1.0)); };

    const bool asym = metric == Metric::normalized_asymmetry;
    const char* title = asym ? "Normalized asymmetry of the reference" : "Fidelity of the system output";
    const char* ylabel = asym ? "A / log2(N+1)" : "fidelity";

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
      << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"24.00\" font-family=\"sans-serif\" "
         "font-size=\"15\" text-anchor=\"middle\">"
      << title << "</text>\n";

    // Axes
    o << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
      << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
      << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
      << "</g>\n";

    o << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    const int step = tick_step(max_mu);
    for (int mu = 0; mu <= max_mu; mu += step) {
        const double x = px(mu);
        o << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(x)
          << "\" y2=\"" << num(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + plot_h + 18)
          << "\" text-anchor=\"middle\">" << mu << "</text>\n";
    }
    for (int k = 0; k <= 5; ++k) {
        const double v = k / 5.0;
        const double y = py(v);
        o << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft)
          << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n"
          << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft + plot_w)
          << "\" y2=\"" << num(y) << "\" stroke=\"#dddddd\"/>\n"
          << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y + 4)
          << "\" text-anchor=\"end\">" << num(v) << "</text>\n";
    }
    o << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 18)
      << "\" text-anchor=\"middle\" font-size=\"13\">uses (mu)</text>\n"
      << "<text x=\"18.00\" y=\"" << num(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18.00 "
      << num(kTop + plot_h / 2) << ")\">" << ylabel << "</text>\n"
      << "</g>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % kPalette.size()];
        o << "<polyline class=\"series\" data-n=\"" << s.config.cutoff_n
          << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& r : s.records) {
            std::optional<double> v =
                asym ? std::optional<double>(r.normalized_asymmetry) : r.fidelity;
            if (!v) {
                continue;
            }
            o << (first ? "" : " ") << num(px(r.mu)) << ',' << num(py(*v));
            first = false;
        }
        o << "\"/>\n";

        const double ly = kTop + 10 + 18.0 * static_cast<double>(k);
        const double lx = kLeft + plot_w + 15;
        o << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 22)
          << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << num(lx + 28) << "\" y=\"" << num(ly + 4)
          << "\" font-family=\"sans-serif\" font-size=\"11\">N = " << s.config.cutoff_n
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

void render_svg(const std::vector<DegradationSeries>& series, Metric metric,
                const std::filesystem::path& path) {
    const std::string text = render_svg(series, metric);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw OutputError("cannot open " + path.string() + " for writing");
    }
    f << text;
    f.flush();
    if (!f) {
        throw OutputError("write failed for " + path.string());
    }
}

} // namespace refcons

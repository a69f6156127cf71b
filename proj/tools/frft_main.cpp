// Command-line front end: transform / convolve / verify / matrix.
//
// Exit codes: 0 success, 1 usage, 2 parse, 3 length mismatch,
// 4 branch unsupported, 5 spectral null, 6 verification failure, 7 I/O.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frft/convolution.hpp"
#include "frft/kernel.hpp"
#include "frft/signal_io.hpp"
#include "frft/transform.hpp"
#include "frft/verify.hpp"
#include "frft/version.hpp"

namespace {

using namespace frft;

// Angles are radians. Accepts a plain decimal literal or the symbolic forms
// `pi`, `2pi`, `3*pi`, `pi/2`, `0.5pi`, with optional sign, expanded against
// the double value of pi so `pi/2` lands on the representable double nearest
// the true quarter turn.
double parse_angle(const std::string& text) {
    static const std::regex sym(
        R"(^\s*([+-]?)\s*(\d+(?:\.\d*)?)?\s*\*?\s*[Pp][Ii]\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, sym)) {
        double v = M_PI;
        if (m[2].matched) v *= std::stod(m[2].str());
        if (m[3].matched) v /= std::stod(m[3].str());
        if (m[1].str() == "-") v = -v;
        return v;
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used])))
            ++used;
        if (used == text.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
        // fall through to the usage error
    }
    throw FrftError(ErrorCode::Usage,
                    "invalid angle '" + text + "' (expected radians or pi/k form)");
}

double linf(const cvec& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

struct TransformArgs {
    std::string alpha, input, output;
    std::string method = "fast";
    bool inverse = false;
};

int run_transform(const TransformArgs& a) {
    const double alpha = parse_angle(a.alpha);
    const SignalFile in = read_signal(a.input, format_from_path(a.input));
    const FrftParams p = make_params(alpha, in.samples.size());

    cvec out;
    if (a.inverse) {
        out = ifrft(p, Spectrum(in.samples)).data;
    } else if (a.method == "direct") {
        out = frft_direct(p, Signal(in.samples)).data;
    } else {
        out = frft_fast(p, Signal(in.samples)).data;
    }
    write_signal(a.output, format_from_path(a.output), out, alpha);
    return 0;
}

struct ConvolveArgs {
    std::string alpha, h_path, x_path, output;
    std::string domain = "time";
    bool check = false;
};

int run_convolve(const ConvolveArgs& a) {
    const double alpha = parse_angle(a.alpha);
    const SignalFile hf = read_signal(a.h_path, format_from_path(a.h_path));
    const SignalFile xf = read_signal(a.x_path, format_from_path(a.x_path));
    if (hf.samples.size() != xf.samples.size()) {
        throw LengthMismatch("convolve: h has length " + std::to_string(hf.samples.size()) +
                             ", x has length " + std::to_string(xf.samples.size()));
    }
    const FrftParams p = make_params(alpha, hf.samples.size());
    const Signal h(hf.samples), x(xf.samples);

    std::optional<Signal> time_result;
    std::optional<Signal> spectral_result;
    if (a.domain == "time" || a.check) {
        time_result = chirp_circular_convolve(p, h, x);
    }
    if (a.domain == "spectral" || a.check) {
        const Spectrum H = frft_fast(p, h);
        const Spectrum X = frft_fast(p, x);
        spectral_result = ifrft(p, spectral_product(p, H, X));
        if (a.check) {
            double residual = 0.0;
            for (std::size_t n = 0; n < p.n_points; ++n) {
                residual = std::max(residual,
                                    std::abs(time_result->data[n] - spectral_result->data[n]));
            }
            const double tolerance =
                1e-10 * (1.0 + linf(H.data) * linf(X.data));
            std::fprintf(stderr, "check: residual=%.6e tolerance=%.6e -> %s\n", residual,
                         tolerance, residual <= tolerance ? "ok" : "FAIL");
            if (residual > tolerance) {
                const cvec& out =
                    a.domain == "time" ? time_result->data : spectral_result->data;
                write_signal(a.output, format_from_path(a.output), out, alpha);
                throw FrftError(ErrorCode::Verification,
                                "convolve --check: time and spectral routes disagree");
            }
        }
    }
    const cvec& out = a.domain == "time" ? time_result->data : spectral_result->data;
    write_signal(a.output, format_from_path(a.output), out, alpha);
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> alphas;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 42;
    std::size_t trials = 10;
    std::string report;
};

int run_verify(const VerifyArgs& a) {
    VerifyOptions opts;
    for (const auto& s : a.alphas) opts.alphas.push_back(parse_angle(s));
    opts.sizes = a.sizes;
    opts.seed = a.seed;
    opts.trials = a.trials;

    const VerificationReport report = run_verification(opts);
    const std::string json = report_to_json(report);
    if (a.report.empty()) {
        std::fwrite(json.data(), 1, json.size(), stdout);
    } else {
        atomic_write_text(a.report, json);
    }
    std::fprintf(stderr, "verify: %zu checks, %zu passed, %zu failed, %zu skipped\n",
                 report.total, report.passed, report.failed, report.skipped);
    if (!report.all_passed()) {
        for (const auto& c : report.checks) {
            if (!c.skipped && !c.passed) {
                std::fprintf(stderr,
                             "  FAIL %s alpha=%.17g n=%zu residual=%.6e tolerance=%.6e\n",
                             c.name.c_str(), c.alpha, c.n_points, c.residual, c.tolerance);
            }
        }
        return static_cast<int>(ErrorCode::Verification);
    }
    return 0;
}

struct MatrixArgs {
    std::string alpha, output;
    std::size_t n = 0;
};

int run_matrix(const MatrixArgs& a) {
    const double alpha = parse_angle(a.alpha);
    const FrftParams p = make_params(alpha, a.n);
    const FrftMatrix m = build_matrix(p);
    write_matrix_csv(a.output, m);
    const CirculanceCheck c = is_circulant(m, 1e-12);
    if (c.circulant) {
        std::fprintf(stderr, "circulance: circulant\n");
    } else {
        std::fprintf(stderr, "circulance: not circulant (first violation at n=%zu, k=%zu)\n",
                     c.row, c.col);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine fractional Fourier transform toolkit"};
    app.set_help_flag("--help", "print help"); // frees -h/--h for the convolve input
    app.set_version_flag("--version", frft::kToolVersion);
    app.require_subcommand(1);

    TransformArgs t;
    auto* transform = app.add_subcommand(
        "transform", "apply the fractional transform (or its inverse) to a signal file");
    transform->add_option("--alpha", t.alpha, "rotation angle in radians (or pi/k form)")
        ->required();
    transform->add_option("--input", t.input, "input signal (.csv or .json)")->required();
    transform->add_option("--output", t.output, "output signal (.csv or .json)")->required();
    transform->add_option("--method", t.method, "direct (O(N^2)) or fast factorization")
        ->check(CLI::IsMember({"direct", "fast"}));
    transform->add_flag("--inverse", t.inverse, "apply the inverse transform");

    ConvolveArgs c;
    auto* convolve = app.add_subcommand(
        "convolve", "chirp-circular convolution of two equal-length signals");
    convolve->set_help_flag("--help", "print help");
    convolve->add_option("--alpha", c.alpha, "rotation angle in radians")->required();
    convolve->add_option("--h", c.h_path, "first input signal")->required();
    convolve->add_option("--x", c.x_path, "second input signal")->required();
    convolve->add_option("--output", c.output, "output signal")->required();
    convolve
        ->add_option("--domain", c.domain,
                     "time: convolve directly; spectral: multiply transforms and invert")
        ->check(CLI::IsMember({"time", "spectral"}));
    convolve->add_flag("--check", c.check, "compute both routes and compare");

    VerifyArgs v;
    auto* verify = app.add_subcommand(
        "verify", "run the built-in invariant suite over an (alpha, N) grid");
    verify->add_option("--alpha", v.alphas, "angle grid (repeatable or comma separated)")
        ->delimiter(',');
    verify->add_option("--n", v.sizes, "length grid (repeatable or comma separated)")
        ->delimiter(',');
    verify->add_option("--seed", v.seed, "base seed for the deterministic generator");
    verify->add_option("--trials", v.trials, "random trials per grid point");
    verify->add_option("--report", v.report, "write the JSON report here (default: stdout)");

    MatrixArgs m;
    auto* matrix =
        app.add_subcommand("matrix", "write the dense transform matrix as CSV");
    matrix->add_option("--alpha", m.alpha, "rotation angle in radians")->required();
    matrix->add_option("--n", m.n, "matrix size N")->required();
    matrix->add_option("--output", m.output, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(frft::ErrorCode::Usage);
    }

    try {
        if (*transform) return run_transform(t);
        if (*convolve) return run_convolve(c);
        if (*verify) return run_verify(v);
        if (*matrix) return run_matrix(m);
    } catch (const frft::FrftError& e) {
        std::cerr << "frft: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "frft: " << e.what() << "\n";
        return static_cast<int>(frft::ErrorCode::Usage);
    }
    return 0;
}

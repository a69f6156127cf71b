#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#include "frft/kernel.hpp"
#include "frft/rng.hpp"
#include "frft/signal_io.hpp"

using namespace frft;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("frft_io_test_" + name);
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

} // namespace

TEST_CASE("format is inferred from the extension") {
    CHECK(format_from_path("x.csv") == SignalFormat::Csv);
    CHECK(format_from_path("/tmp/a/b.json") == SignalFormat::Json);
    CHECK_THROWS_AS(format_from_path("sig.dat"), FrftError);
}

TEST_CASE("csv round trip is bit-exact") {
    const auto path = temp_file("roundtrip.csv");
    DeterministicRng rng(31);
    cvec x = rng.complex_vector(64);
    x[0] = cplx(-0.0, 1e-300);
    x[1] = cplx(1.0 / 3.0, -12345678.901234567);
    write_signal(path.string(), SignalFormat::Csv, x);
    const SignalFile f = read_signal(path.string(), SignalFormat::Csv);
    REQUIRE(f.n_points == 64);
    for (std::size_t n = 0; n < 64; ++n) {
        CHECK(same_bits(f.samples[n].real(), x[n].real()));
        CHECK(same_bits(f.samples[n].imag(), x[n].imag()));
    }
    fs::remove(path);
}

TEST_CASE("json round trip is bit-exact and keeps the alpha annotation") {
    const auto path = temp_file("roundtrip.json");
    DeterministicRng rng(32);
    const cvec x = rng.complex_vector(16);
    write_signal(path.string(), SignalFormat::Json, x, 0.7);
    const SignalFile f = read_signal(path.string(), SignalFormat::Json);
    REQUIRE(f.n_points == 16);
    REQUIRE(f.alpha.has_value());
    CHECK(*f.alpha == 0.7);
    for (std::size_t n = 0; n < 16; ++n) {
        CHECK(same_bits(f.samples[n].real(), x[n].real()));
        CHECK(same_bits(f.samples[n].imag(), x[n].imag()));
    }
    fs::remove(path);
}

TEST_CASE("writes are deterministic byte for byte") {
    const auto p1 = temp_file("det1.csv");
    const auto p2 = temp_file("det2.csv");
    DeterministicRng rng(33);
    const cvec x = rng.complex_vector(8);
    write_signal(p1.string(), SignalFormat::Csv, x);
    write_signal(p2.string(), SignalFormat::Csv, x);
    CHECK(read_text(p1) == read_text(p2));
    CHECK_FALSE(fs::exists(p1.string() + ".tmp")); // no temp file left behind
    fs::remove(p1);
    fs::remove(p2);
}

TEST_CASE("csv parse errors carry the offending line") {
    const auto path = temp_file("bad.csv");

    write_text(path, "re,im\n0,1,2\n");
    try {
        read_signal(path.string(), SignalFormat::Csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }

    write_text(path, "index,re,im\n1,0.5,0.5\n");
    try {
        read_signal(path.string(), SignalFormat::Csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2); // index 1 where 0 was expected
    }

    write_text(path, "index,re,im\n0,1.0\n");
    CHECK_THROWS_AS(read_signal(path.string(), SignalFormat::Csv), ParseError);

    write_text(path, "index,re,im\n0,inf,0\n");
    try {
        read_signal(path.string(), SignalFormat::Csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }

    write_text(path, "index,re,im\n0,0.5,abc\n");
    CHECK_THROWS_AS(read_signal(path.string(), SignalFormat::Csv), ParseError);

    write_text(path, "index,re,im\n");
    CHECK_THROWS_AS(read_signal(path.string(), SignalFormat::Csv), ParseError);

    fs::remove(path);
}

TEST_CASE("json structural errors") {
    const auto path = temp_file("bad.json");

    write_text(path, "{\"n\": 4, \"data\": [[1,0],[0,1],[1,1]]}");
    CHECK_THROWS_AS(read_signal(path.string(), SignalFormat::Json), LengthMismatch);

    write_text(path, "{\"data\": [[1,0]]}");
    CHECK_THROWS_AS(read_signal(path.string(), SignalFormat::Json), ParseError);

    write_text(path, "{\"n\": 1, \"data\": [[1,0,3]]}");
    CHECK_THROWS_AS(read_signal(path.string(), SignalFormat::Json), ParseError);

    write_text(path, "{\"n\": 1, \"data\": [[1e999,0]]}");
    CHECK_THROWS_AS(read_signal(path.string(), SignalFormat::Json), ParseError);

    write_text(path, "not json at all");
    CHECK_THROWS_AS(read_signal(path.string(), SignalFormat::Json), ParseError);

    fs::remove(path);
}

TEST_CASE("missing files raise IoError") {
    CHECK_THROWS_AS(read_signal("/nonexistent/frft/in.csv", SignalFormat::Csv), IoError);
}

TEST_CASE("matrix csv layout") {
    const auto path = temp_file("matrix.csv");
    const FrftMatrix m = build_matrix(make_params(2.0 * M_PI, 2));
    write_matrix_csv(path.string(), m);
    CHECK(read_text(path) == "n,k,re,im\n0,0,1,0\n0,1,0,0\n1,0,0,0\n1,1,1,0\n");
    fs::remove(path);
}

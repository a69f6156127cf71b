#include "frft/signal_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace frft {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Full-string double parse; rejects trailing junk, NaN and infinities.
bool parse_finite_double(const std::string& field, double& out) {
    if (field.empty()) return false;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) return false;
    if (errno == ERANGE && !std::isfinite(v)) return false;
    if (!std::isfinite(v)) return false;
    out = v;
    return true;
}

std::string rstrip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

SignalFile read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");

    std::string line;
    if (!std::getline(in, line) || rstrip_cr(line) != "index,re,im") {
        throw ParseError(path + ":1: expected header 'index,re,im'", 1, 1);
    }

    SignalFile f;
    f.format = SignalFormat::Csv;
    std::size_t lineno = 1;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = rstrip_cr(line);
        if (line.empty()) continue; // tolerate a trailing blank line
        const auto fields = split_csv(line);
        if (fields.size() != 3) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": expected 3 comma-separated fields",
                             lineno, 1);
        }
        char* end = nullptr;
        const unsigned long long idx = std::strtoull(fields[0].c_str(), &end, 10);
        if (fields[0].empty() || end != fields[0].c_str() + fields[0].size() || idx != row) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected index " +
                                 std::to_string(row),
                             lineno, 1);
        }
        double re = 0.0, im = 0.0;
        if (!parse_finite_double(fields[1], re)) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": field 2 is not a finite number",
                             lineno, 2);
        }
        if (!parse_finite_double(fields[2], im)) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": field 3 is not a finite number",
                             lineno, 3);
        }
        f.samples.emplace_back(re, im);
        ++row;
    }
    if (row == 0) {
        throw ParseError(path + ":2: expected at least one data row", 2, 1);
    }
    f.n_points = row;
    return f;
}

SignalFile read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        // covers syntax errors and number overflow alike
        throw ParseError(path + ": " + e.what(), 0, 0);
    }

    if (!j.is_object() || !j.contains("n") || !j.contains("data")) {
        throw ParseError(path + ": expected an object with keys 'n' and 'data'", 0, 0);
    }
    if (!j["n"].is_number_unsigned()) {
        throw ParseError(path + ": 'n' must be a non-negative integer", 0, 0);
    }
    if (!j["data"].is_array()) {
        throw ParseError(path + ": 'data' must be an array of [re, im] pairs", 0, 0);
    }

    SignalFile f;
    f.format = SignalFormat::Json;
    f.n_points = j["n"].get<std::size_t>();
    if (j.contains("alpha")) {
        if (!j["alpha"].is_number()) {
            throw ParseError(path + ": 'alpha' must be a number", 0, 0);
        }
        f.alpha = j["alpha"].get<double>();
    }
    for (const auto& pair : j["data"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number()) {
            throw ParseError(path + ": each data entry must be a [re, im] number pair",
                             0, 0);
        }
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw ParseError(path + ": non-finite sample value", 0, 0);
        }
        f.samples.emplace_back(re, im);
    }
    if (f.samples.size() != f.n_points) {
        throw LengthMismatch(path + ": declared n = " + std::to_string(f.n_points) +
                             " but data holds " + std::to_string(f.samples.size()) +
                             " pairs");
    }
    return f;
}

} // namespace

SignalFormat format_from_path(const std::string& path) {
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".csv") return SignalFormat::Csv;
    if (ext == ".json") return SignalFormat::Json;
    throw FrftError(ErrorCode::Usage,
                    path + ": cannot infer signal format; use a .csv or .json path");
}

SignalFile read_signal(const std::string& path, SignalFormat format) {
    return format == SignalFormat::Csv ? read_csv(path) : read_json(path);
}

void write_signal(const std::string& path, SignalFormat format, const cvec& samples,
                  std::optional<double> alpha) {
    if (format == SignalFormat::Csv) {
        std::ostringstream out;
        out << "index,re,im\n";
        for (std::size_t n = 0; n < samples.size(); ++n) {
            out << n << ',' << format_double(samples[n].real()) << ','
                << format_double(samples[n].imag()) << '\n';
        }
        atomic_write_text(path, out.str());
        return;
    }
    nlohmann::ordered_json j;
    j["n"] = samples.size();
    if (alpha) j["alpha"] = *alpha;
    auto& data = j["data"] = nlohmann::ordered_json::array();
    for (const auto& z : samples) {
        data.push_back({z.real(), z.imag()});
    }
    atomic_write_text(path, j.dump(2) + "\n");
}

void write_matrix_csv(const std::string& path, const FrftMatrix& m) {
    std::ostringstream out;
    out << "n,k,re,im\n";
    for (std::size_t n = 0; n < m.n_points; ++n) {
        for (std::size_t k = 0; k < m.n_points; ++k) {
            const cplx& z = m.at(n, k);
            out << n << ',' << k << ',' << format_double(z.real()) << ','
                << format_double(z.imag()) << '\n';
        }
    }
    atomic_write_text(path, out.str());
}

void atomic_write_text(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("failed writing " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("failed to move " + tmp + " into place: " + ec.message());
    }
}

} // namespace frft

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "frft/kernel.hpp"
#include "frft/types.hpp"

namespace frft {

enum class SignalFormat { Csv, Json };

/// On-disk signal: CSV with header `index,re,im` and rows 0..N-1 in order,
/// or a JSON object {"n": N, "alpha": <optional radians>, "data": [[re,im],...]}.
struct SignalFile {
    SignalFormat format = SignalFormat::Csv;
    std::size_t n_points = 0;
    cvec samples;
    std::optional<double> alpha;
};

/// Picks the format from the file extension (.csv / .json).
SignalFormat format_from_path(const std::string& path);

SignalFile read_signal(const std::string& path, SignalFormat format);

/// Values are written with 17 significant digits, so anything this tool
/// emits reads back bit-exactly.
void write_signal(const std::string& path, SignalFormat format, const cvec& samples,
                  std::optional<double> alpha = {});

/// Matrix CSV with header `n,k,re,im`, rows in row-major (n, k) order.
void write_matrix_csv(const std::string& path, const FrftMatrix& m);

/// Writes to a temporary file in the same directory, then renames into
/// place; a crashed run never leaves a truncated file under the final name.
void atomic_write_text(const std::string& path, const std::string& text);

} // namespace frft

#pragma once

#include <complex>
#include <optional>
#include <string>

namespace cyclaudit {

/// Result of one identity check: an exact residual rendered in canonical text
/// (or a numeric residual for floating checks), with is_zero true exactly when
/// the residual is the canonical zero (or within the check's tolerance for
/// numeric checks, in which case the tolerance is echoed in params).
struct DefectReport {
    std::string check;
    std::string params;
    bool is_zero = false;
    std::string residual;
    double elapsed_ms = 0.0;
};

/// A numeric value with a rigorous truncation-error bound (plus an eps-scale
/// floor so the bound also covers an exactly-computed value's rounding) and an
/// echo of the parameters that produced it.
struct EvalResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    std::string parameters;

    double real() const { return value.real(); }
};

/// Fixed-format rendering for numeric values in reports (deterministic).
std::string format_double(double v);
std::string format_complex(const std::complex<double>& v);

}  // namespace cyclaudit

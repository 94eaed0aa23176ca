#include "cyclaudit/report.hpp"

#include <cmath>
#include <cstdio>

namespace cyclaudit {

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15e", v);
    return buf;
}

std::string format_complex(const std::complex<double>& v) {
    if (v.imag() == 0.0) return format_double(v.real());
    return format_double(v.real()) + (v.imag() < 0 ? " - " : " + ") +
           format_double(std::fabs(v.imag())) + "i";
}

}  // namespace cyclaudit

#include "qes/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qes {

double round_significant(double x, int digits)
{
    if (!std::isfinite(x) || x == 0.0) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;
}

std::string format_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

nlohmann::json json_number(double x)
{
    if (!std::isfinite(x)) {
        return nullptr;
    }
    return round_significant(x, 12);
}

} // namespace qes

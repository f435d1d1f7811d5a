#include "igmc/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace igmc {

namespace {

double capped_tail(double exponent) {
    return std::min(1.0, 2.0 * std::exp(exponent));
}

void require_nonneg(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be finite and >= 0");
}

void require_count(std::size_t v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

} // namespace

std::string_view to_string(BoundKind kind) noexcept {
    switch (kind) {
        case BoundKind::Hoeffding: return "hoeffding";
        case BoundKind::AzumaTail: return "azuma_tail";
        case BoundKind::DkwTail: return "dkw_tail";
        case BoundKind::Theorem1L1: return "theorem1_l1";
    }
    return "unknown";
}

double hoeffding_bound(std::size_t m, double t) {
    require_count(m, "m");
    require_nonneg(t, "t");
    return capped_tail(-2.0 * static_cast<double>(m) * t * t);
}

double azuma_tail(std::size_t m, std::size_t h, double a) {
    require_count(m, "m");
    require_count(h, "h");
    require_nonneg(a, "a");
    return capped_tail(-0.5 * static_cast<double>(h + m) * a * a);
}

double dkw_tail(std::size_t n, double a) {
    require_count(n, "n");
    require_nonneg(a, "a");
    return capped_tail(-2.0 * static_cast<double>(n) * a * a);
}

BoundReport theorem1_l1_bound(std::size_t m, std::size_t h, std::size_t n) {
    require_count(m, "m");
    require_count(h, "h");
    require_count(n, "n");
    const double depth_term = std::sqrt(2.0 * std::numbers::pi / static_cast<double>(m + h));
    const double mc_term = std::sqrt(std::numbers::pi / (2.0 * static_cast<double>(n)));

    BoundReport report;
    report.kind = BoundKind::Theorem1L1;
    report.inputs = {{"m", static_cast<double>(m)},
                     {"h", static_cast<double>(h)},
                     {"n", static_cast<double>(n)},
                     {"depth_term", depth_term},
                     {"mc_term", mc_term}};
    report.value = depth_term + mc_term;
    return report;
}

} // namespace igmc

#include "schwarzian_lab/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "schwarzian_lab/errors.hpp"

namespace schwarzian_lab {

void GridConfig::validate() const {
    if (!(r_max > 0.0 && r_max < 1.0)) throw DomainError("grid: r_max must lie in (0, 1), got " + std::to_string(r_max));
    if (n_radii < 2 || n_angles < 2) throw DomainError("grid: n_radii and n_angles must be >= 2");
}

std::vector<double> GridConfig::radii() const {
    std::vector<double> r(n_radii);
    const double last = static_cast<double>(n_radii - 1);
    for (std::size_t i = 0; i < n_radii; ++i)
        r[i] = 0.5 * r_max * (1.0 - std::cos(std::numbers::pi * static_cast<double>(i) / last));
    r.front() = 0.0;
    r.back() = r_max;
    return r;
}

std::vector<double> GridConfig::angles() const {
    std::vector<double> t(n_angles);
    for (std::size_t j = 0; j < n_angles; ++j)
        t[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
    return t;
}

}  // namespace schwarzian_lab

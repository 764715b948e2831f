#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mixsel::quadrature {

/// Grid size used by entropy and relative-entropy integrals.
/// Reads MIXSEL_QUAD_POINTS from the environment; defaults to 4096.
std::size_t default_points();

/// Uniform grid of `n` points between `a` and `b` inclusive.
std::vector<double> uniform_grid(double a, double b, std::size_t n);

/// Composite Simpson integral of samples `f` on a uniform grid with spacing `h`.
/// Odd interval counts use the 3/8 rule on the last three intervals.
double simpson(std::span<const double> f, double h);

}  // namespace mixsel::quadrature

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "wgm/sweep.hpp"

namespace wgm::svg {

using Rgb = std::array<std::uint8_t, 3>;

/// 256-step perceptually uniform colormap (viridis samples), index 0 = low.
const std::array<Rgb, 256>& colormap();

/// Maps t in [0, 1] (clamped) to a colormap entry.
Rgb color_at(double t);

/// R_f/R_b (red) and T_f/T_b (black) against the swept axis; forward solid,
/// backward dash-dotted.
std::string line_plot(const SpectrumTable& table, const std::string& title = {});

/// One rectangle per grid cell, axis1 horizontal and axis2 vertical, with a
/// colour bar spanning the data range.
std::string heatmap(const GridTable& table, const std::string& title = {});

}  // namespace wgm::svg

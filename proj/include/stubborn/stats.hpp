#pragma once

#include <span>
#include <vector>

namespace stubborn {

// Ranks starting at 1, ties share their average rank.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of the average ranks. NaN when either input is
// constant or the sizes differ.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace stubborn

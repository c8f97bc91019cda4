#pragma once

// Published MDPDE fits of the annual maximum flood series, tau = 0, 0.1, ..., 1.

#include <array>

namespace golden {

struct FloodRow {
  double tau;
  double alpha[3];  // original, outlier removed, outlier times five
  double beta[3];
};

inline constexpr const char* kFloodConditions[3] = {"flood-scotland", "flood-scotland-no-outlier",
                                                    "flood-scotland-extreme"};

inline constexpr std::array<FloodRow, 11> kFlood{{
    {0.0, {128.59299, 125.57231, 129.58311}, {4.81482, 5.38407, 4.07479}},
    {0.1, {126.41016, 124.03480, 125.43259}, {4.96074, 5.43479, 4.95591}},
    {0.2, {124.22583, 122.45253, 122.92421}, {5.15710, 5.54203, 5.39308}},
    {0.3, {122.13689, 120.87111, 121.16535}, {5.39338, 5.69915, 5.61685}},
    {0.4, {120.27189, 119.37588, 119.69423}, {5.64689, 5.89073, 5.80014}},
    {0.5, {118.73857, 118.06536, 118.44261}, {5.88462, 6.09034, 5.97323}},
    {0.6, {117.56760, 117.00301, 117.42982}, {6.07831, 6.26885, 6.12397}},
    {0.7, {116.71259, 116.19007, 116.65135}, {6.21776, 6.40834, 6.23973}},
    {0.8, {116.09615, 115.58392, 116.06922}, {6.30865, 6.50643, 6.31889}},
    {0.9, {115.64679, 115.13113, 115.63486}, {6.36291, 6.57022, 6.36764}},
    {1.0, {115.31082, 114.78594, 115.30545}, {6.39223, 6.60927, 6.39440}},
}};

}  // namespace golden

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wrep::detail {

// Solve sum_j x_j cols[j] = rhs over F_p. Free variables are set to zero.
std::optional<std::vector<uint32_t>> fp_solve(uint32_t p, const std::vector<std::vector<uint32_t>> &cols,
                                              const std::vector<uint32_t> &rhs);

} // namespace wrep::detail

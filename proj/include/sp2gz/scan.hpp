#pragma once

#include <cstdint>
#include <vector>

#include "sp2gz/criterion.hpp"

// Bulk range kernels. Each kernel is an OpenMP-parallel loop over
// independent inputs; the _serial variants are the reference
// implementations the tests and the benchmark compare against. Results are
// deterministic and identical between the two.
namespace sp2gz::scan {

// m in [lo, hi] where phi(m) > m^(log2/log3) fails, ascending.
std::vector<std::uint64_t> shapiro_non_strict(std::uint64_t lo, std::uint64_t hi);
std::vector<std::uint64_t> shapiro_non_strict_serial(std::uint64_t lo, std::uint64_t hi);

// m in [lo, hi] passing the phi-budget criterion for this genus, ascending.
std::vector<std::uint64_t> admissible_orders(Genus genus, std::uint64_t lo, std::uint64_t hi);
std::vector<std::uint64_t> admissible_orders_serial(Genus genus, std::uint64_t lo, std::uint64_t hi);

// flags[i] = power_solvable(lo + i, genus).solvable. Requires lo >= 2.
std::vector<std::uint8_t> solvable_flags(Genus genus, std::uint64_t lo, std::uint64_t hi);
std::vector<std::uint8_t> solvable_flags_serial(Genus genus, std::uint64_t lo, std::uint64_t hi);

}  // namespace sp2gz::scan

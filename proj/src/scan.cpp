#include "sp2gz/scan.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sp2gz::scan {

namespace {

void check_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t min_lo, const char* who) {
    if (lo < min_lo || hi < lo)
        throw std::invalid_argument(std::string(who) + ": bad range");
    if (hi - lo >= std::uint64_t{1} << 32)
        throw std::invalid_argument(std::string(who) + ": range too large");
}

// Marks each m in [lo, hi] with pred, then compacts the hits in order.
template <typename Pred>
std::vector<std::uint64_t> collect_parallel(std::uint64_t lo, std::uint64_t hi, Pred pred) {
    const std::int64_t n = static_cast<std::int64_t>(hi - lo + 1);
    std::vector<std::uint8_t> hit(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i)
        hit[static_cast<std::size_t>(i)] = pred(lo + static_cast<std::uint64_t>(i)) ? 1 : 0;
    std::vector<std::uint64_t> out;
    for (std::int64_t i = 0; i < n; ++i)
        if (hit[static_cast<std::size_t>(i)])
            out.push_back(lo + static_cast<std::uint64_t>(i));
    return out;
}

template <typename Pred>
std::vector<std::uint64_t> collect_serial(std::uint64_t lo, std::uint64_t hi, Pred pred) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = lo; m <= hi; ++m)
        if (pred(m))
            out.push_back(m);
    return out;
}

bool shapiro_fails(std::uint64_t m) {
    return !shapiro_check(m).strictly_greater;
}

}  // namespace

std::vector<std::uint64_t> shapiro_non_strict(std::uint64_t lo, std::uint64_t hi) {
    check_range(lo, hi, 1, "shapiro_non_strict");
    return collect_parallel(lo, hi, shapiro_fails);
}

std::vector<std::uint64_t> shapiro_non_strict_serial(std::uint64_t lo, std::uint64_t hi) {
    check_range(lo, hi, 1, "shapiro_non_strict_serial");
    return collect_serial(lo, hi, shapiro_fails);
}

std::vector<std::uint64_t> admissible_orders(Genus genus, std::uint64_t lo, std::uint64_t hi) {
    check_range(lo, hi, 1, "admissible_orders");
    return collect_parallel(lo, hi,
                            [genus](std::uint64_t m) { return burgisser_criterion(m, genus).order_exists; });
}

std::vector<std::uint64_t> admissible_orders_serial(Genus genus, std::uint64_t lo, std::uint64_t hi) {
    check_range(lo, hi, 1, "admissible_orders_serial");
    return collect_serial(lo, hi,
                          [genus](std::uint64_t m) { return burgisser_criterion(m, genus).order_exists; });
}

std::vector<std::uint8_t> solvable_flags(Genus genus, std::uint64_t lo, std::uint64_t hi) {
    check_range(lo, hi, 2, "solvable_flags");
    const std::int64_t n = static_cast<std::int64_t>(hi - lo + 1);
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i)
        flags[static_cast<std::size_t>(i)] =
            power_solvable(lo + static_cast<std::uint64_t>(i), genus).solvable ? 1 : 0;
    return flags;
}

std::vector<std::uint8_t> solvable_flags_serial(Genus genus, std::uint64_t lo, std::uint64_t hi) {
    check_range(lo, hi, 2, "solvable_flags_serial");
    std::vector<std::uint8_t> flags;
    flags.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::uint64_t m = lo; m <= hi; ++m)
        flags.push_back(power_solvable(m, genus).solvable ? 1 : 0);
    return flags;
}

}  // namespace sp2gz::scan

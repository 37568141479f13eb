#pragma once

#include <cstdint>
#include <vector>

#include "tinv/config.hpp"
#include "tinv/integer.hpp"

namespace tinv {

/// F_0(x) = x + 1, F_{n+1}(x) = F_n iterated x + 1 times at x.
/// Throws BudgetExceeded when the value or the iteration count would pass the
/// budget.
Integer fgh(unsigned n, const Integer& x, const FghBudget& budget = {});

/// min(F_n(x), cap). Never fails: iteration stops as soon as the cap is hit,
/// which makes it usable as a bound at any level.
std::uint64_t fgh_capped(unsigned n, std::uint64_t x, std::uint64_t cap);

/// f tabulated on 0 .. values.size() - 1.
struct TabulatedFunction {
    std::vector<std::uint64_t> values;

    std::uint64_t size() const noexcept { return values.size(); }
    /// Throws OutsideTable.
    std::uint64_t at(std::uint64_t x) const;
    bool strictly_increasing() const noexcept;
};

/// F_{0,f}(x) = f(x) + 1, F_{n+1,f}(x) = F_{n,f} iterated x + 1 times at x.
/// Evaluated literally. Throws OutsideTable or BudgetExceeded.
Integer fgh_relative(unsigned n, std::uint64_t x, const TabulatedFunction& f, const FghBudget& budget = {});

}  // namespace tinv

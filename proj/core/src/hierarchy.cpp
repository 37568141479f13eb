#include "tinv/hierarchy.hpp"

#include <limits>
#include <string>

#include "tinv/error.hpp"

namespace tinv {
namespace {

std::size_t bit_length(const Integer& v) { return v == 0 ? 0 : static_cast<std::size_t>(msb(v)) + 1; }

class Evaluator {
public:
    explicit Evaluator(const FghBudget& budget) : budget_(budget) {}

    Integer eval(unsigned n, const Integer& x) {
        if (bit_length(x) > budget_.max_result_bits) too_big(n);
        switch (n) {
            case 0:
                return checked(n, x + 1);
            case 1:
                return checked(n, 2 * x + 1);
            case 2: {
                // 2^(x+1) (x+1) - 1
                if (x + 1 + bit_length(x + 1) > budget_.max_result_bits + 1) too_big(n);
                const auto e = static_cast<unsigned>(x + 1);
                return checked(n, (Integer{1} << e) * (x + 1) - 1);
            }
            default: {
                Integer y = x;
                for (Integer i = 0; i <= x; ++i) {
                    if (++steps_ > budget_.max_recursive_steps) {
                        fail(ErrorKind::BudgetExceeded, "F_" + std::to_string(n) + " needs more than " +
                                                            std::to_string(budget_.max_recursive_steps) +
                                                            " iteration steps");
                    }
                    y = eval(n - 1, y);
                }
                return y;
            }
        }
    }

private:
    Integer checked(unsigned n, Integer v) const {
        if (bit_length(v) > budget_.max_result_bits) too_big(n);
        return v;
    }

    [[noreturn]] void too_big(unsigned n) const {
        fail(ErrorKind::BudgetExceeded, "F_" + std::to_string(n) + " value exceeds " +
                                            std::to_string(budget_.max_result_bits) + " bits");
    }

    const FghBudget& budget_;
    std::uint64_t steps_ = 0;
};

}  // namespace

Integer fgh(unsigned n, const Integer& x, const FghBudget& budget) {
    if (x < 0) fail(ErrorKind::InvalidArgument, "argument must be a natural number");
    return Evaluator(budget).eval(n, x);
}

std::uint64_t fgh_capped(unsigned n, std::uint64_t x, std::uint64_t cap) {
    if (x >= cap) return cap;
    switch (n) {
        case 0:
            return std::min(x + 1, cap);
        case 1:
            return x >= cap / 2 ? cap : std::min(2 * x + 1, cap);
        case 2: {
            if (x + 1 >= 64) return cap;
            std::uint64_t v = 0;
            if (__builtin_mul_overflow(std::uint64_t{1} << (x + 1), x + 1, &v)) return cap;
            return v - 1 >= cap ? cap : v - 1;
        }
        default: {
            // F_n(y) > y, so the loop runs at most cap times before saturating.
            std::uint64_t y = x;
            for (std::uint64_t i = 0; i <= x; ++i) {
                y = fgh_capped(n - 1, y, cap);
                if (y >= cap) return cap;
            }
            return y;
        }
    }
}

std::uint64_t TabulatedFunction::at(std::uint64_t x) const {
    if (x >= values.size()) {
        fail(ErrorKind::OutsideTable, "f(" + std::to_string(x) + ") is outside the table of size " +
                                          std::to_string(values.size()));
    }
    return values[x];
}

bool TabulatedFunction::strictly_increasing() const noexcept {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1]) return false;
    return true;
}

namespace {

std::uint64_t relative(unsigned n, std::uint64_t x, const TabulatedFunction& f, const FghBudget& budget,
                       std::uint64_t& steps) {
    if (++steps > budget.max_recursive_steps) {
        fail(ErrorKind::BudgetExceeded,
             "relativized hierarchy needs more than " + std::to_string(budget.max_recursive_steps) + " steps");
    }
    if (n == 0) {
        std::uint64_t v = f.at(x);
        if (v == std::numeric_limits<std::uint64_t>::max()) fail(ErrorKind::BudgetExceeded, "value overflow");
        return v + 1;
    }
    std::uint64_t y = x;
    for (std::uint64_t i = 0; i <= x; ++i) y = relative(n - 1, y, f, budget, steps);
    return y;
}

}  // namespace

Integer fgh_relative(unsigned n, std::uint64_t x, const TabulatedFunction& f, const FghBudget& budget) {
    std::uint64_t steps = 0;
    return Integer{relative(n, x, f, budget, steps)};
}

}  // namespace tinv

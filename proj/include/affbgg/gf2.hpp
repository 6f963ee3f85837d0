#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace affbgg {

/// Dense-bitset GF(2) linear system, one 64-bit word block row per equation.
/// Solutions set free variables to zero.
class Gf2System {
  public:
    explicit Gf2System(int num_vars);

    void add_equation(const std::vector<int>& vars, bool rhs);

    /// Any solution, or nullopt when inconsistent. `offending` (if given)
    /// receives, for an inconsistent system, the indices of the original
    /// equations whose XOR is 0 = 1.
    std::optional<std::vector<bool>> solve(std::vector<int>* offending = nullptr) const;

    int num_vars() const { return nvars_; }
    int num_equations() const { return int(rows_.size()); }

  private:
    int nvars_;
    int words_;
    std::vector<std::vector<std::uint64_t>> rows_;  // coefficient bits
    std::vector<bool> rhs_;
};

}  // namespace affbgg

#include "affbgg/gf2.hpp"

#include <stdexcept>

namespace affbgg {

Gf2System::Gf2System(int num_vars)
    : nvars_(num_vars), words_((num_vars + 63) / 64) {}

void Gf2System::add_equation(const std::vector<int>& vars, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (int v : vars) {
        if (v < 0 || v >= nvars_) throw std::out_of_range("Gf2System: bad variable");
        row[v / 64] ^= (std::uint64_t(1) << (v % 64));
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
}

std::optional<std::vector<bool>> Gf2System::solve(std::vector<int>* offending) const {
    int m = int(rows_.size());
    auto rows = rows_;
    std::vector<bool> rhs = rhs_;
    // history[r] tracks which original equations were XORed into row r
    int hist_words = (m + 63) / 64;
    std::vector<std::vector<std::uint64_t>> hist(m,
                                                 std::vector<std::uint64_t>(hist_words, 0));
    for (int r = 0; r < m; ++r) hist[r][r / 64] = std::uint64_t(1) << (r % 64);

    std::vector<int> pivot_of_row;
    int rank = 0;
    for (int col = 0; col < nvars_ && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r) {
            if (rows[r][col / 64] >> (col % 64) & 1) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        std::swap(hist[piv], hist[rank]);
        std::swap(rhs[piv], rhs[rank]);
        for (int r = 0; r < m; ++r) {
            if (r == rank) continue;
            if (rows[r][col / 64] >> (col % 64) & 1) {
                for (int w = 0; w < words_; ++w) rows[r][w] ^= rows[rank][w];
                for (int w = 0; w < hist_words; ++w) hist[r][w] ^= hist[rank][w];
                rhs[r] = rhs[r] != rhs[rank];
            }
        }
        pivot_of_row.push_back(col);
        ++rank;
    }
    for (int r = rank; r < m; ++r) {
        bool zero = true;
        for (int w = 0; w < words_; ++w)
            if (rows[r][w]) zero = false;
        if (zero && rhs[r]) {
            if (offending) {
                for (int e = 0; e < m; ++e)
                    if (hist[r][e / 64] >> (e % 64) & 1) offending->push_back(e);
            }
            return std::nullopt;
        }
    }
    std::vector<bool> x(nvars_, false);
    for (int r = 0; r < rank; ++r) x[pivot_of_row[r]] = rhs[r];
    return x;
}

}  // namespace affbgg

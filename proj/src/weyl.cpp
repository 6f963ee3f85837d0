#include "affbgg/weyl.hpp"

#include <algorithm>

namespace affbgg {

FiniteWeylGroup::FiniteWeylGroup(const RootSystemData& rs) : rs_(rs) {
    std::vector<IntMat> gens;
    for (int i = 0; i < rs.rank; ++i) gens.push_back(rs.simple_reflection_matrix(i));

    matrices_.push_back(identity_mat(rs.rank));
    lookup_[matrices_[0]] = 0;
    length_.push_back(0);
    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int idx : frontier) {
            IntMat base = matrices_[idx];
            for (const auto& g : gens) {
                IntMat m = mat_mul(g, base);
                auto [it, inserted] = lookup_.emplace(m, int(matrices_.size()));
                if (inserted) {
                    matrices_.push_back(m);
                    length_.push_back(length_[idx] + 1);
                    next.push_back(it->second);
                }
            }
        }
        frontier = std::move(next);
    }
}

int FiniteWeylGroup::index_of(const IntMat& m) const {
    auto it = lookup_.find(m);
    if (it == lookup_.end())
        throw input_error("matrix is not an element of the finite Weyl group");
    return it->second;
}

int finite_length(const RootSystemData& rs, const IntMat& y) {
    int count = 0;
    for (const auto& alpha : rs.positive_roots) {
        IntVec img = mat_apply(y, alpha);
        for (auto c : img) {
            if (c != 0) {
                if (c < 0) ++count;
                break;
            }
        }
    }
    return count;
}

bool is_weyl_matrix(const RootSystemData& rs, const IntMat& m) {
    if (m.size() != size_t(rs.rank)) return false;
    for (const auto& alpha : rs.positive_roots)
        if (!rs.is_root(mat_apply(m, alpha))) return false;
    return true;
}

}  // namespace affbgg

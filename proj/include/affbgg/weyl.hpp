#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "affbgg/root_system.hpp"

namespace affbgg {

/// The finite Weyl group of a root system, fully enumerated by BFS.
///
/// Used wherever an exhaustive run over finite parts is needed (window
/// enumerations). Elements are action matrices on simple-root-basis
/// coordinates; BFS depth is the Coxeter length. Immutable after construction.
class FiniteWeylGroup {
  public:
    explicit FiniteWeylGroup(const RootSystemData& rs);

    size_t size() const { return matrices_.size(); }
    const RootSystemData& root_system() const { return rs_; }

    const IntMat& matrix(int idx) const { return matrices_[idx]; }
    int index_of(const IntMat& m) const;
    bool contains(const IntMat& m) const { return lookup_.count(m) > 0; }
    int length(int idx) const { return length_[idx]; }

  private:
    RootSystemData rs_;
    std::vector<IntMat> matrices_;
    std::map<IntMat, int> lookup_;
    std::vector<int> length_;
};

/// #{alpha in positive roots : y(alpha) < 0}, no enumeration of the group.
int finite_length(const RootSystemData& rs, const IntMat& y);

/// True iff m maps the root set to itself (i.e. lies in the finite Weyl
/// group); decided by checking images of the positive roots.
bool is_weyl_matrix(const RootSystemData& rs, const IntMat& m);

}  // namespace affbgg

#pragma once

// The reflection R_i on Dynkin diagrams and the integer matrices s_i^X.

#include "nichols/braiding.hpp"

namespace nichols {

enum class ReflectMode {
  Fast,    // first applicable case per label
  Verify,  // evaluate every applicable case and require agreement
};

// Throws NotIFinite when D is not i-finite, CaseExhaustion if no case fits.
DynkinData reflect(const DynkinData& d, int i, ReflectMode mode = ReflectMode::Fast);

// Column j is alpha_j - a_ij alpha_i.
IntMatrix simple_reflection_matrix(const IntMatrix& a, int i);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> apply_matrix(const IntMatrix& m, const std::vector<std::int64_t>& v);
IntMatrix identity_matrix(int n);

}  // namespace nichols

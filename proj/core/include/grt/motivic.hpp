#pragma once

#include <map>
#include <string>

#include "grt/lyndon.hpp"
#include "grt/numeric.hpp"

namespace grt {

/// Real places, complex places and #S of a number field with a finite set
/// S of places containing the primes over l.
struct NumberFieldProfile {
  int r1 = 1;
  int r2 = 0;
  int s_size = 1;

  /// Throws Error(Precondition) unless r1, r2 >= 0, r1 + 2 r2 >= 1, #S >= 1.
  void validate() const;
  static NumberFieldProfile rationals(int s_size = 1) { return {1, 0, s_size}; }
};

/// Number of free generators of Gr^W in degree n (weight -2n).
Integer dn(const NumberFieldProfile& profile, int n);

/// dim Ext^i(Q(0), Q(n)) in the category of mixed Tate modules.
Integer ext_dim(const NumberFieldProfile& profile, int i, int n);

/// Graded dimensions of the free Lie algebra with dn generators in degree n.
DimensionTable k_graded_dims(const NumberFieldProfile& profile, int max_degree);

/// Free Lie algebra on one generator in each odd degree >= 3.
DimensionTable image_model_dims(int max_degree);

}  // namespace grt

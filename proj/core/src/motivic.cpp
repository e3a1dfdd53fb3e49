#include "grt/motivic.hpp"

#include "grt/error.hpp"

namespace grt {

void NumberFieldProfile::validate() const {
  if (r1 < 0 || r2 < 0) throw Error(ErrorCode::Precondition, "place counts must be nonnegative");
  if (r1 + 2 * r2 < 1) throw Error(ErrorCode::Precondition, "r1 + 2 r2 must be at least 1");
  if (s_size < 1) throw Error(ErrorCode::Precondition, "#S must be positive");
}

Integer dn(const NumberFieldProfile& profile, int n) {
  profile.validate();
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be positive");
  if (n == 1) return Integer(profile.r1 + profile.r2 + profile.s_size - 1);
  if (n % 2 == 1) return Integer(profile.r1 + profile.r2);
  return Integer(profile.r2);
}

Integer ext_dim(const NumberFieldProfile& profile, int i, int n) {
  profile.validate();
  if (i == 0 && n == 0) return Integer(1);
  if (i == 1 && n > 0) return dn(profile, n);
  return Integer(0);
}

DimensionTable k_graded_dims(const NumberFieldProfile& profile, int max_degree) {
  profile.validate();
  if (max_degree < 1) throw Error(ErrorCode::Precondition, "max degree must be positive");
  std::vector<int> gens;
  for (int n = 1; n <= max_degree; ++n) {
    const Integer count = dn(profile, n);
    if (!count.fits_sint_p() || count > 4096)
      throw Error(ErrorCode::Precondition, "too many generators in degree " + std::to_string(n));
    for (long k = 0; k < count.get_si(); ++k) gens.push_back(n);
  }
  if (gens.empty()) {
    DimensionTable zero;
    for (int n = 1; n <= max_degree; ++n) zero[n] = 0;
    return zero;
  }
  return weighted_witt_dims(gens, max_degree);
}

DimensionTable image_model_dims(int max_degree) {
  if (max_degree < 3) throw Error(ErrorCode::Precondition, "max degree must be at least 3");
  std::vector<int> gens;
  for (int d = 3; d <= max_degree; d += 2) gens.push_back(d);
  return weighted_witt_dims(gens, max_degree);
}

}  // namespace grt

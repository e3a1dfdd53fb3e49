#include "grt/serialize.hpp"

namespace grt {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(to_string(z));
}

Json integer_list_json(const std::vector<Integer>& zs) {
  Json out = Json::array();
  for (const auto& z : zs) out.push_back(integer_json(z));
  return out;
}

namespace {

template <class T>
Json matrix_json_impl(const DenseMatrix<T>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(Rational(m(i, j))));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json matrix_json(const RatMatrix& m) { return matrix_json_impl(m); }
Json matrix_json(const IntMatrix& m) { return matrix_json_impl(m); }

Json derivation_json(const Derivation& d) {
  return Json{{"degree", d.degree()},
              {"image_x", to_string(d.image_x())},
              {"image_y", to_string(d.image_y())}};
}

Json ihara_basis_json(int degree, const std::vector<IharaElement>& basis) {
  Json elements = Json::array();
  for (const auto& e : basis) elements.push_back(to_string(e.f()));
  return Json{{"degree", degree}, {"dimension", basis.size()}, {"basis", elements}};
}

Json congruence_json(const CongruenceReport& report) {
  const auto& ab = *GradedAlphabet::xy();
  auto entries = [&](const std::vector<std::pair<Word, Integer>>& list) {
    Json out = Json::array();
    for (const auto& [w, v] : list)
      out.push_back(Json{{"word", ab.spell(w)}, {"value", integer_json(v)}});
    return out;
  };
  Json out{{"modulus", integer_json(report.modulus)},
           {"divisible", report.divisible},
           {"coefficients", entries(report.coefficients)},
           {"nondivisible_coefficients", entries(report.nondivisible_coefficients)}};
  if (report.modular_check) out["modular_check"] = *report.modular_check;
  if (report.sign_change) out["sign_change"] = *report.sign_change;
  return out;
}

Json freeness_json(const std::vector<FreenessRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    const Integer dim(static_cast<unsigned long>(r.dimension));
    out.push_back(Json{{"n", r.degree},
                       {"dim_d", r.dimension},
                       {"free_model", integer_json(r.free_model)},
                       {"agrees", dim == r.free_model}});
  }
  return Json{{"rows", out}};
}

Json profile_json(const NumberFieldProfile& profile) {
  return Json{{"r1", profile.r1}, {"r2", profile.r2}, {"s", profile.s_size}};
}

Json dimension_table_json(const DimensionTable& table) {
  Json rows = Json::array();
  for (const auto& [degree, dim] : table)
    rows.push_back(Json{{"degree", degree}, {"dim", integer_json(dim)}});
  return Json{{"rows", rows}};
}

Json filtration_json(const std::vector<FiltrationRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row{{"m", r.m},
             {"rank", r.rank},
             {"torsion", integer_list_json(r.torsion)},
             {"d_mod_l", integer_list_json(r.d_mod_l)}};
    if (r.lcs_torsion) row["lcs_torsion"] = integer_list_json(*r.lcs_torsion);
    out.push_back(std::move(row));
  }
  return Json{{"rows", out}};
}

}  // namespace grt

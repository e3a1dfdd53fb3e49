#include "grt_tools/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "grt/derivation.hpp"
#include "grt/ihara.hpp"
#include "grt/lie.hpp"
#include "grt/lyndon.hpp"
#include "grt/malcev.hpp"
#include "grt/motivic.hpp"
#include "grt/parse.hpp"
#include "grt/serialize.hpp"

namespace grt::cli {

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string table(const std::vector<std::string>& head, const Rows& rows) {
  std::vector<std::size_t> width(head.size());
  for (std::size_t j = 0; j < head.size(); ++j) width[j] = head[j].size();
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size() && j < width.size(); ++j)
      width[j] = std::max(width[j], r[j].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      out << cells[j];
      if (j + 1 < cells.size()) out << std::string(width[j] - cells[j].size() + 2, ' ');
    }
    out << '\n';
  };
  line(head);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string list_text(const std::vector<Integer>& zs) {
  std::string s = "[";
  for (std::size_t i = 0; i < zs.size(); ++i) s += (i ? "," : "") + to_string(zs[i]);
  return s + "]";
}

AlphabetPtr alphabet_from(const std::string& spec) {
  auto parsed = GradedAlphabet::parse(spec);
  if (*parsed == *GradedAlphabet::xy()) return GradedAlphabet::xy();
  return parsed;
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::UnknownGenerator:
      return kParse;
    case ErrorCode::Internal:
      return kInternal;
    default:
      return kPrecondition;
  }
}

struct Output {
  Json payload;
  std::string rendering;
};

// Integers become Soule generators; anything else is parsed as f.
IharaElement ihara_operand(const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit))
    return soule_generator(std::stoi(text));
  LieElement f = parse_lie(text, GradedAlphabet::xy());
  if (f.is_zero()) throw Error(ErrorCode::Precondition, "zero operand has no degree");
  IharaElement e(f);
  if (!is_stable_derivation(f))
    throw Error(ErrorCode::Precondition, "'" + text + "' is not a stable derivation");
  return e;
}

NumberFieldProfile profile_of(int r1, int r2, int s) {
  NumberFieldProfile p{r1, r2, s};
  p.validate();
  return p;
}

}  // namespace

std::string CommandResult::output() const {
  if (json) return payload.is_null() ? std::string() : payload.dump(2) + "\n";
  if (rendering.empty() || rendering.back() == '\n') return rendering;
  return rendering + "\n";
}

CommandResult run(const std::vector<std::string>& argv) {
  CLI::App app{"Exact computations with free Lie algebras, stable derivations and Malcev completions",
               argv.empty() ? "grt" : argv.front()};
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  unsigned threads = 1;
  app.add_flag("--json", json, "Emit JSON instead of a table");
  app.add_option("--threads", threads, "Worker threads for degreewise computations")
      ->check(CLI::Range(1u, 256u));

  std::function<Output()> action;

  // ---- lie ----------------------------------------------------------------
  auto* lie = app.add_subcommand("lie", "Free Lie algebras")->require_subcommand(1);
  std::string alphabet_spec = "x,y";
  std::string expr_a, expr_b;

  int letters = 2, degree = 1;
  std::vector<int> weights;
  auto* lie_dim = lie->add_subcommand("dim", "Witt dimension of a graded piece");
  lie_dim->add_option("--letters", letters, "Number of degree-1 letters")->check(CLI::Range(1, 64));
  lie_dim->add_option("--degree", degree, "Degree")->required()->check(CLI::Range(1, 1000));
  lie_dim->add_option("--weights", weights, "Generator degrees (weighted mode)")->delimiter(',');
  lie_dim->callback([&] {
    action = [&]() -> Output {
      if (!weights.empty()) {
        auto dims = weighted_witt_dims(weights, degree);
        Json j = dimension_table_json(dims);
        j["weights"] = weights;
        Rows rows;
        for (const auto& [d, v] : dims) rows.push_back({std::to_string(d), to_string(v)});
        return {j, table({"degree", "dim"}, rows)};
      }
      Integer d = witt_dim(static_cast<unsigned>(letters), static_cast<unsigned>(degree));
      return {Json{{"letters", letters}, {"degree", degree}, {"dim", integer_json(d)}},
              to_string(d)};
    };
  });

  auto* lie_lyndon = lie->add_subcommand("lyndon", "Lyndon words of a degree");
  lie_lyndon->add_option("--alphabet", alphabet_spec, "Letters, e.g. x,y or a:1,b:2");
  lie_lyndon->add_option("--degree", degree, "Degree")->required()->check(CLI::Range(1, 16));
  lie_lyndon->callback([&] {
    action = [&]() -> Output {
      auto ab = alphabet_from(alphabet_spec);
      auto words = lyndon_words(*ab, degree);
      Json list = Json::array();
      Rows rows;
      for (const auto& w : words) {
        list.push_back(Json{{"word", ab->spell(w)}, {"bracketing", bracketing(*ab, w)}});
        rows.push_back({ab->spell(w), bracketing(*ab, w)});
      }
      return {Json{{"degree", degree}, {"count", words.size()}, {"words", list}},
              table({"word", "bracketing"}, rows)};
    };
  });

  auto* lie_bracket = lie->add_subcommand("bracket", "Bracket of two Lie expressions");
  lie_bracket->add_option("--alphabet", alphabet_spec, "Letters");
  lie_bracket->add_option("a", expr_a, "First expression")->required();
  lie_bracket->add_option("b", expr_b, "Second expression")->required();
  lie_bracket->callback([&] {
    action = [&]() -> Output {
      auto ab = alphabet_from(alphabet_spec);
      const std::string r = to_string(bracket(parse_lie(expr_a, ab), parse_lie(expr_b, ab)));
      return {Json{{"result", r}}, r};
    };
  });

  auto* lie_parse = lie->add_subcommand("parse", "Canonical form of a Lie expression");
  lie_parse->add_option("--alphabet", alphabet_spec, "Letters");
  lie_parse->add_option("expr", expr_a, "Expression")->required();
  lie_parse->callback([&] {
    action = [&]() -> Output {
      auto ab = alphabet_from(alphabet_spec);
      LieElement e = parse_lie(expr_a, ab);
      Json terms = Json::array();
      for (const auto& [key, c] : e.terms())
        terms.push_back(Json{{"word", ab->spell(key.word)},
                             {"degree", key.degree},
                             {"bracketing", bracketing(*ab, key.word)},
                             {"coefficient", to_string(c)}});
      const std::string canonical = to_string(e);
      return {Json{{"canonical", canonical}, {"terms", terms}}, canonical};
    };
  });

  auto* lie_expand = lie->add_subcommand("expand", "Tensor-algebra expansion");
  lie_expand->add_option("--alphabet", alphabet_spec, "Letters");
  lie_expand->add_option("expr", expr_a, "Expression")->required();
  lie_expand->callback([&] {
    action = [&]() -> Output {
      auto ab = alphabet_from(alphabet_spec);
      AssocPoly p = expand_assoc(parse_lie(expr_a, ab));
      Json terms = Json::array();
      for (const auto& [w, c] : p.terms())
        terms.push_back(Json{{"word", ab->spell(w)}, {"coefficient", to_string(c)}});
      const std::string text = to_string(p);
      return {Json{{"expansion", text}, {"terms", terms}}, text};
    };
  });

  // ---- der ----------------------------------------------------------------
  auto* der = app.add_subcommand("der", "Derivations of the free Lie algebra on x, y")
                  ->require_subcommand(1);
  int max_degree = 0;
  auto* der_outdim = der->add_subcommand("outdim", "Dimension of outer derivations");
  auto* outdim_degree =
      der_outdim->add_option("--degree", degree, "Degree")->check(CLI::Range(1, 14));
  der_outdim->add_option("--max-degree", max_degree, "Table for degrees 1..N")
      ->check(CLI::Range(1, 14))
      ->excludes(outdim_degree);
  der_outdim->callback([&] {
    action = [&]() -> Output {
      const int lo = max_degree ? 1 : degree, hi = max_degree ? max_degree : degree;
      Json rows = Json::array();
      Rows text;
      for (int n = lo; n <= hi; ++n) {
        const std::size_t dim = outder_dim(n);
        const Integer formula = outder_dim_formula(n);
        rows.push_back(Json{{"degree", n},
                            {"weight", weight_of_degree(n)},
                            {"outder_dim", dim},
                            {"formula", integer_json(formula)}});
        text.push_back({std::to_string(n), std::to_string(weight_of_degree(n)),
                        std::to_string(dim), to_string(formula)});
      }
      std::string rendering = max_degree ? table({"degree", "weight", "outder_dim", "formula"}, text)
                                         : text.front()[2];
      return {Json{{"rows", rows}}, rendering};
    };
  });

  std::string image_x = "0", image_y = "0";
  std::optional<int> der_degree;
  auto* der_apply = der->add_subcommand("apply", "Apply a derivation given on generators");
  der_apply->add_option("--image-x", image_x, "Image of x");
  der_apply->add_option("--image-y", image_y, "Image of y");
  der_apply->add_option("--degree", der_degree, "Degree (needed when both images vanish)");
  der_apply->add_option("expr", expr_a, "Element to differentiate")->required();
  der_apply->callback([&] {
    action = [&]() -> Output {
      auto ab = GradedAlphabet::xy();
      LieElement ix = parse_lie(image_x, ab), iy = parse_lie(image_y, ab);
      int d = der_degree.value_or(0);
      if (!der_degree) {
        if (auto k = ix.degree()) d = *k - 1;
        else if (auto k2 = iy.degree()) d = *k2 - 1;
      }
      Derivation D(ix, iy, d);
      const std::string r = to_string(apply(D, parse_lie(expr_a, ab)));
      return {Json{{"derivation", derivation_json(D)}, {"result", r}}, r};
    };
  });

  // ---- ihara --------------------------------------------------------------
  auto* ihara = app.add_subcommand("ihara", "Stable derivation algebra")->require_subcommand(1);
  auto* ihara_basis = ihara->add_subcommand("basis", "Basis of D_n");
  ihara_basis->add_option("--degree", degree, "Degree n >= 2")->required()
      ->check(CLI::Range(2, kIharaHardDegreeCap));
  ihara_basis->callback([&] {
    action = [&]() -> Output {
      auto basis = special_basis(degree);
      std::string text = "dim D_" + std::to_string(degree) + " = " + std::to_string(basis.size()) + "\n";
      for (const auto& e : basis) text += to_string(e.f()) + "\n";
      return {ihara_basis_json(degree, basis), text};
    };
  });

  int soule_m = 3;
  auto* ihara_soule = ihara->add_subcommand("soule", "Normalized generator of D_m");
  ihara_soule->add_option("--m", soule_m, "Odd m >= 3")->required();
  ihara_soule->callback([&] {
    action = [&]() -> Output {
      IharaElement f = soule_generator(soule_m);
      const Rational lead = *f.f().coefficient(Word(static_cast<std::size_t>(soule_m - 1), 0) + '\1');
      const std::string text = to_string(f.f());
      return {Json{{"m", soule_m},
                   {"degree", f.degree()},
                   {"generator", text},
                   {"leading_coefficient", to_string(lead)}},
              text};
    };
  });

  auto* ihara_br = ihara->add_subcommand("bracket", "Ihara bracket <f, g>");
  ihara_br->add_option("f", expr_a, "Odd m for the Soule generator, or a Lie expression")->required();
  ihara_br->add_option("g", expr_b, "Odd m for the Soule generator, or a Lie expression")->required();
  ihara_br->callback([&] {
    action = [&]() -> Output {
      IharaElement h = ihara_bracket(ihara_operand(expr_a), ihara_operand(expr_b));
      const std::string text = to_string(h.f());
      return {Json{{"degree", h.degree()}, {"result", text}, {"zero", h.f().is_zero()}}, text};
    };
  });

  std::string modulus_text = "691";
  auto* ihara_cong = ihara->add_subcommand("congruence", "2<f3,f9> - 27<f5,f7> modulo m");
  ihara_cong->add_option("--modulus", modulus_text, "Modulus m >= 2");
  ihara_cong->callback([&] {
    action = [&]() -> Output {
      Integer m;
      if (m.set_str(modulus_text, 10) != 0)
        throw ParseError(0, "modulus must be a decimal integer");
      CongruenceReport r = ihara_691_congruence(m);
      Json j = congruence_json(r);
      j["combination"] = "2<f3,f9> - 27<f5,f7>";
      std::ostringstream text;
      text << "2<f3,f9> - 27<f5,f7> mod " << to_string(m) << ": "
           << (r.divisible ? "divisible" : "not divisible") << " (" << r.coefficients.size()
           << " nonzero coefficients, " << r.nondivisible_coefficients.size()
           << " not divisible)\n";
      if (r.modular_check)
        text << "recomputed mod " << to_string(m) << ": " << (*r.modular_check ? "zero" : "nonzero")
             << "\n";
      if (r.sign_change) {
        text << "sign change making it divisible:";
        for (int s : *r.sign_change) text << ' ' << (s > 0 ? '+' : '-');
        text << "\n";
      }
      return {j, text.str()};
    };
  });

  auto* ihara_free = ihara->add_subcommand("freeness", "dim D_n against the free model");
  ihara_free->add_option("--max-degree", max_degree, "Largest degree (default 12, at most 16)");
  ihara_free->callback([&] {
    action = [&]() -> Output {
      const int top = max_degree ? max_degree : kIharaDefaultDegreeCap;
      if (top > kIharaHardDegreeCap)
        throw Error(ErrorCode::Precondition, "refusing degrees above " +
                                                 std::to_string(kIharaHardDegreeCap));
      auto rows = freeness_table(top, threads, std::max(top, kIharaDefaultDegreeCap));
      Rows text;
      for (const auto& r : rows)
        text.push_back({std::to_string(r.degree), std::to_string(r.dimension),
                        to_string(r.free_model),
                        Integer(static_cast<unsigned long>(r.dimension)) == r.free_model ? "yes" : "no"});
      return {freeness_json(rows), table({"n", "dim D_n", "free model", "agrees"}, text)};
    };
  });

  // ---- motivic ------------------------------------------------------------
  auto* motivic = app.add_subcommand("motivic", "Dimension tables for weighted completions")
                      ->require_subcommand(1);
  int r1 = 1, r2 = 0, s_size = 1, n_value = 1, i_value = 1, max_i = 0, max_n = 0;
  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--r1", r1, "Real places");
    sub->add_option("--r2", r2, "Complex places");
    sub->add_option("--s", s_size, "#S");
  };

  auto* mot_dn = motivic->add_subcommand("dn", "Generator counts d_n");
  add_profile(mot_dn);
  auto* dn_n = mot_dn->add_option("--n", n_value, "n >= 1")->check(CLI::Range(1, 100000));
  mot_dn->add_option("--max-n", max_n, "Table for n = 1..N")->check(CLI::Range(1, 100000))->excludes(dn_n);
  mot_dn->callback([&] {
    action = [&]() -> Output {
      auto profile = profile_of(r1, r2, s_size);
      const int lo = max_n ? 1 : n_value, hi = max_n ? max_n : n_value;
      Json rows = Json::array();
      Rows text;
      for (int n = lo; n <= hi; ++n) {
        Integer d = dn(profile, n);
        rows.push_back(Json{{"n", n}, {"d_n", integer_json(d)}});
        text.push_back({std::to_string(n), to_string(d)});
      }
      return {Json{{"profile", profile_json(profile)}, {"rows", rows}},
              max_n ? table({"n", "d_n"}, text) : text.front()[1]};
    };
  });

  auto* mot_ext = motivic->add_subcommand("ext", "dim Ext^i(Q(0), Q(n))");
  add_profile(mot_ext);
  auto* ext_i = mot_ext->add_option("--i", i_value, "Degree i >= 0")->check(CLI::Range(0, 1000));
  auto* ext_n = mot_ext->add_option("--n", n_value, "Twist n");
  mot_ext->add_option("--max-i", max_i, "Table for i = 0..I")->check(CLI::Range(0, 1000))->excludes(ext_i);
  mot_ext->add_option("--max-n", max_n, "Table for n = 0..N")->check(CLI::Range(0, 100000))->excludes(ext_n);
  mot_ext->callback([&] {
    action = [&]() -> Output {
      auto profile = profile_of(r1, r2, s_size);
      const bool table_i = mot_ext->count("--max-i") > 0, table_n = mot_ext->count("--max-n") > 0;
      const int i_lo = table_i ? 0 : i_value, i_hi = table_i ? max_i : i_value;
      const int n_lo = table_n ? 0 : n_value, n_hi = table_n ? max_n : n_value;
      Json rows = Json::array();
      Rows text;
      for (int i = i_lo; i <= i_hi; ++i)
        for (int n = n_lo; n <= n_hi; ++n) {
          Integer e = ext_dim(profile, i, n);
          rows.push_back(Json{{"i", i}, {"n", n}, {"ext", integer_json(e)}});
          text.push_back({std::to_string(i), std::to_string(n), to_string(e)});
        }
      const bool single = !table_i && !table_n;
      return {Json{{"profile", profile_json(profile)}, {"rows", rows}},
              single ? text.front()[2] : table({"i", "n", "ext"}, text)};
    };
  });

  auto* mot_k = motivic->add_subcommand("kdims", "Graded dimensions of the free model of k_{F,S}");
  add_profile(mot_k);
  mot_k->add_option("--max-degree", max_degree, "Largest degree")->required()->check(CLI::Range(1, 60));
  mot_k->callback([&] {
    action = [&]() -> Output {
      auto profile = profile_of(r1, r2, s_size);
      auto dims = k_graded_dims(profile, max_degree);
      Json j = dimension_table_json(dims);
      j["profile"] = profile_json(profile);
      Rows text;
      for (const auto& [d, v] : dims) text.push_back({std::to_string(d), to_string(v)});
      return {j, table({"degree", "dim"}, text)};
    };
  });

  auto* mot_img = motivic->add_subcommand("image", "Free model on one generator per odd degree >= 3");
  mot_img->add_option("--max-degree", max_degree, "Largest degree")->required()->check(CLI::Range(3, 60));
  mot_img->callback([&] {
    action = [&]() -> Output {
      auto dims = image_model_dims(max_degree);
      Rows text;
      for (const auto& [d, v] : dims) text.push_back({std::to_string(d), to_string(v)});
      return {dimension_table_json(dims), table({"degree", "dim"}, text)};
    };
  });

  // ---- malcev -------------------------------------------------------------
  auto* malcev = app.add_subcommand("malcev", "Truncated Malcev completions")->require_subcommand(1);
  int nil_class = 2;
  auto* mal_bch = malcev->add_subcommand("bch", "Truncated BCH product");
  mal_bch->add_option("--alphabet", alphabet_spec, "Letters");
  mal_bch->add_option("--class", nil_class, "Nilpotency class")->check(CLI::Range(1, 8));
  mal_bch->add_option("a", expr_a, "First element")->required();
  mal_bch->add_option("b", expr_b, "Second element")->required();
  mal_bch->callback([&] {
    action = [&]() -> Output {
      auto ab = alphabet_from(alphabet_spec);
      auto r = bch(NilpotentElement(parse_lie(expr_a, ab), nil_class),
                   NilpotentElement(parse_lie(expr_b, ab), nil_class));
      const std::string text = to_string(r.value());
      return {Json{{"class", nil_class}, {"result", text}}, text};
    };
  });

  auto* mal_word = malcev->add_subcommand("word", "Image of a group word");
  mal_word->add_option("--alphabet", alphabet_spec, "Letters");
  mal_word->add_option("--class", nil_class, "Nilpotency class")->check(CLI::Range(1, 8));
  mal_word->add_option("word", expr_a, "Tokens g, g^-1, g^k separated by spaces")->required();
  mal_word->callback([&] {
    action = [&]() -> Output {
      auto r = word_to_group(expr_a, alphabet_from(alphabet_spec), nil_class);
      const std::string text = to_string(r.value());
      return {Json{{"class", nil_class}, {"word", expr_a}, {"result", text}}, text};
    };
  });

  std::string family = "free", torsion_text = "2";
  int generators = 2, lattice_rank = 1, max_m = 0;
  std::vector<std::string> gen_exprs;
  auto* mal_filt = malcev->add_subcommand("filtration", "Lower central series against D^m");
  mal_filt->add_option("--family", family, "free | lattice | subgroup")
      ->check(CLI::IsMember({"free", "lattice", "subgroup"}));
  mal_filt->add_option("--generators", generators, "Free group rank")->check(CLI::Range(1, 6));
  mal_filt->add_option("--class", nil_class, "Nilpotency class")->check(CLI::Range(1, 6));
  mal_filt->add_option("--rank", lattice_rank, "Lattice rank")->check(CLI::Range(0, 1000));
  mal_filt->add_option("--torsion", torsion_text, "Cyclic torsion order");
  mal_filt->add_option("--gen", gen_exprs, "Subgroup generator (repeatable)");
  mal_filt->add_option("--alphabet", alphabet_spec, "Letters for subgroup generators");
  mal_filt->add_option("--max-m", max_m, "Rows m = 1..M (default: class, or 3)")->check(CLI::Range(1, 12));
  mal_filt->callback([&] {
    action = [&]() -> Output {
      FilteredGroupSpec spec;
      Json desc;
      if (family == "free") {
        spec = FreeGroupSpec{generators, nil_class};
        desc = Json{{"family", "free"}, {"generators", generators}, {"class", nil_class}};
      } else if (family == "lattice") {
        Integer t;
        if (t.set_str(torsion_text, 10) != 0) throw ParseError(0, "torsion must be a decimal integer");
        spec = LatticeTimesCyclicSpec{lattice_rank, t};
        desc = Json{{"family", "lattice"}, {"rank", lattice_rank}, {"torsion", integer_json(t)}};
      } else {
        auto ab = alphabet_from(alphabet_spec);
        SubgroupOfNilpotentSpec sub;
        for (const auto& g : gen_exprs) sub.generators.emplace_back(parse_lie(g, ab), nil_class);
        spec = sub;
        desc = Json{{"family", "subgroup"}, {"generators", gen_exprs}, {"class", nil_class}};
      }
      const int rows_m = max_m ? max_m : (family == "lattice" ? 3 : nil_class);
      auto rows = filtration_report(spec, rows_m);
      Json j = filtration_json(rows);
      j["spec"] = desc;
      j["columns"] = "induced-graded";
      Rows text;
      for (const auto& r : rows)
        text.push_back({std::to_string(r.m), std::to_string(r.rank), list_text(r.torsion),
                        list_text(r.d_mod_l)});
      return {j, table({"m", "rank", "torsion", "d_mod_l"}, text)};
    };
  });

  CommandResult result;
  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  if (raw.empty()) raw.push_back("grt");
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    result.rendering = out.str();
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    result.rendering = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = kUsage;
    result.diagnostics = std::string("error: ") + e.what() + "\n\n" + app.help();
    return result;
  }
  result.json = json;
  if (!action) {
    result.status = kUsage;
    result.diagnostics = app.help();
    return result;
  }
  try {
    Output out = action();
    result.payload = std::move(out.payload);
    result.rendering = std::move(out.rendering);
  } catch (const Error& e) {
    result.status = status_for(e.code());
    result.payload = Json{{"error", Json{{"code", to_string(e.code())}, {"message", e.what()}}}};
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace grt::cli

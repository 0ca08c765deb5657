#include "cli.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "schemoid/algebra.hpp"
#include "schemoid/constructors.hpp"
#include "schemoid/error.hpp"
#include "schemoid/io.hpp"
#include "schemoid/repcat.hpp"
#include "schemoid/schemoid.hpp"

namespace schemoid::cli {

namespace {

using io::json;

struct Outcome {
  int code = 0;
  json data;
  std::string text;
  bool raw_json = false;  // data is a file format, printed regardless of --json
};

SchemoidPtr load_schemoid(const std::string& path) {
  return std::make_shared<const Schemoid>(io::schemoid_from_json(io::read_json(path)));
}

Outcome emit_schemoid(const Schemoid& s) {
  Outcome o;
  o.data = io::schemoid_to_json(s);
  o.raw_json = true;
  return o;
}

std::string list_str(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string algebra_text(const FDAlgebra& a) {
  std::ostringstream t;
  t << "algebra over " << a.field().name() << ", dimension " << a.dim() << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.product(i, j).empty()) continue;
      t << "  " << a.labels()[i] << " * " << a.labels()[j] << " =";
      bool first = true;
      for (const auto& term : a.product(i, j)) {
        t << (first ? " " : " + ");
        first = false;
        if (term.coeff != 1) t << term.coeff.get_str() << " ";
        t << a.labels()[term.index];
      }
      t << "\n";
    }
  return t.str();
}

FDAlgebra algebra_of(const std::string& kind, const Schemoid& s, const Field& k) {
  if (kind == "bose-mesner") return bose_mesner(s, k);
  if (kind == "category") return category_algebra(s.cat(), k);
  if (kind == "quotient") return quotient_linear_algebra(s, k);
  throw ParseError("unknown algebra kind '" + kind + "'");
}

// Options shared by the rep subcommands.
struct RepOptions {
  std::string schemoid, source, target, morphism, rep, rep2, field = "Q";
  bool id = false;
};

SchemoidMorphism load_morphism(const RepOptions& o) {
  if (o.id) {
    if (o.schemoid.empty()) throw ParseError("--id needs --schemoid");
    return identity_morphism(load_schemoid(o.schemoid));
  }
  if (o.source.empty() || o.target.empty() || o.morphism.empty())
    throw ParseError("give --id --schemoid FILE or --source, --target and --morphism");
  return validate_morphism(load_schemoid(o.source), load_schemoid(o.target),
                           io::functor_from_json(io::read_json(o.morphism)));
}

FunctorRep load_rep(const std::string& path, SchemoidPtr s, const Field& k) {
  if (path.empty()) throw ParseError("missing --rep");
  FunctorRep r = io::rep_from_json(io::read_json(path), std::move(s), k);
  validate_functor_rep(r);
  return r;
}

Outcome rep_outcome(const FunctorRep& r, const std::string& what) {
  Outcome o;
  o.data = io::rep_to_json(r);
  std::ostringstream t;
  t << what << " over " << r.field.name() << ", dims " << list_str(r.dims) << "\n";
  for (BlockId b = 0; b < r.schemoid->num_blocks(); ++b)
    t << "  " << pad(r.schemoid->block_name(b), 8) << " " << r.block_mat(b).to_string() << "\n";
  o.text = t.str();
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite schemoids: construction, invariants, algebras and representations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::function<Outcome()> action;

  // ---- construct --------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Build a schemoid and print it as JSON");
  construct->require_subcommand(1);
  std::string c_file, c_group = "Z2", c_family;
  std::vector<std::uint32_t> c_subgroup{0};
  std::size_t c_n = 0, c_ground = 0;
  {
    auto* s = construct->add_subcommand("discrete", "Discrete schemoid of a category file");
    s->add_option("file", c_file, "Category JSON")->required();
    s->callback([&] {
      action = [&] { return emit_schemoid(discrete(io::category_from_json(io::read_json(c_file)))); };
    });

    s = construct->add_subcommand("as", "Schemoid of an association scheme file");
    s->add_option("file", c_file, "Scheme JSON")->required();
    s->callback([&] {
      action = [&] {
        AssociationScheme a = io::scheme_from_json(io::read_json(c_file));
        SchemeReport r = validate_association_scheme(a);
        if (!r.ok) throw ValidationError("not an association scheme: " + r.failures.front());
        return emit_schemoid(from_association_scheme(a));
      };
    });

    s = construct->add_subcommand("hamming", "Hamming scheme H(n,2)");
    s->add_option("n", c_n, "Word length (1..10)")->required();
    s->callback([&] { action = [&] { return emit_schemoid(from_association_scheme(hamming(c_n))); }; });

    s = construct->add_subcommand("group-case", "Scheme of a group acting on cosets of a subgroup");
    s->add_option("--group", c_group, "Group name (Z4, S3, D4, Q8, ...) or table file");
    s->add_option("--subgroup", c_subgroup, "Subgroup elements (0-based)")->delimiter(',');
    s->callback([&] {
      action = [&] {
        return emit_schemoid(from_association_scheme(group_case(
            c_group.find(".json") != std::string::npos ? io::group_from_json(io::read_json(c_group))
                                                       : io::group_by_name(c_group),
            c_subgroup)));
      };
    });

    s = construct->add_subcommand("groupoid", "Schemoid S~(H) of a groupoid");
    s->add_option("--group", c_group, "Group name, used when no category file is given");
    s->add_option("--category", c_file, "Groupoid as a category file");
    s->callback([&] {
      action = [&] {
        FinCat h = c_file.empty() ? group_category(io::group_by_name(c_group))
                                  : io::category_from_json(io::read_json(c_file));
        return emit_schemoid(from_groupoid(h));
      };
    });

    s = construct->add_subcommand("nat", "Truncated length schemoid on 0..n");
    s->add_option("n", c_n, "Largest object")->required();
    s->callback([&] { action = [&] { return emit_schemoid(truncated_len(c_n)); }; });

    s = construct->add_subcommand("powerset", "Difference schemoid of a family of subsets");
    s->add_option("--ground", c_ground, "Size of the ground set")->required();
    s->add_option("--family", c_family, "JSON {\"sets\": [[1,2], ...]} (default: all subsets)");
    s->callback([&] {
      action = [&] {
        std::vector<Subset> family;
        if (c_family.empty()) {
          family = full_powerset(c_ground);
        } else {
          const json j = io::read_json(c_family);
          if (!j.contains("sets") || !j["sets"].is_array()) throw ParseError("family file needs \"sets\"");
          for (const auto& set : j["sets"]) {
            Subset u = 0;
            for (const auto& v : set) {
              if (!v.is_number_integer() || v.get<long>() < 1 || v.get<long>() > static_cast<long>(c_ground))
                throw ParseError("family element out of range: " + v.dump());
              u |= Subset{1} << (v.get<long>() - 1);
            }
            family.push_back(u);
          }
        }
        return emit_schemoid(powerset_difference(family, c_ground).schemoid);
      };
    });

    s = construct->add_subcommand("simplicial", "Schemoid P(K) of a simplicial complex");
    s->add_option("file", c_file, "Complex JSON")->required();
    s->callback([&] {
      action = [&] { return emit_schemoid(simplicial_schemoid(io::complex_from_json(io::read_json(c_file))).schemoid); };
    });

    s = construct->add_subcommand("open-sets", "Open-set schemoid of a finite space");
    s->add_option("file", c_file, "Space JSON")->required();
    s->callback([&] {
      action = [&] {
        FiniteSpace x = io::space_from_json(io::read_json(c_file));
        check_topology(x);
        return emit_schemoid(open_set_schemoid(x).schemoid);
      };
    });
  }

  // ---- schemoid-level commands ------------------------------------------
  std::string file = "-", file2;
  std::size_t max_objects = 8;

  auto* validate = app.add_subcommand("validate", "Check the schemoid axiom");
  validate->add_option("file", file, "Schemoid JSON (default: stdin)");
  validate->callback([&] {
    action = [&] {
      const json j = io::read_json(file);
      Outcome o;
      CategoryReport cr = validate_category(io::category_data_from_json(j));
      if (!cr.ok()) {
        o.code = 1;
        o.data = {{"valid", false}, {"reason", cr.summary()}};
        o.text = "invalid category: " + cr.summary() + "\n";
        return o;
      }
      std::vector<std::vector<MorId>> blocks;
      for (const auto& b : j.at("blocks")) blocks.push_back(b.get<std::vector<MorId>>());
      SchemoidValidation v = validate_schemoid(FinCat::from_data(io::category_data_from_json(j)), std::move(blocks));
      if (!v.ok()) {
        o.code = 1;
        o.data = {{"valid", false}, {"reason", v.violation->describe()}};
        o.text = "invalid: " + v.violation->describe() + "\n";
        return o;
      }
      const Schemoid& s = *v.schemoid;
      o.data = {{"valid", true},
                {"objects", s.cat().num_objects()},
                {"morphisms", s.cat().num_morphisms()},
                {"blocks", s.num_blocks()}};
      o.text = "valid: " + std::to_string(s.cat().num_objects()) + " objects, " +
               std::to_string(s.cat().num_morphisms()) + " morphisms, " + std::to_string(s.num_blocks()) + " blocks\n";
      return o;
    };
  });

  auto* constants = app.add_subcommand("constants", "Print the structure constants");
  constants->add_option("file", file, "Schemoid JSON (default: stdin)");
  constants->callback([&] {
    action = [&] {
      SchemoidPtr s = load_schemoid(file);
      Outcome o;
      json rows = json::array();
      std::ostringstream t;
      t << pad("sigma", 10) << pad("tau", 10) << pad("mu", 10) << "p\n";
      for (const Constant& c : s->constants()) {
        rows.push_back({{"sigma", s->block_name(c.sigma)},
                        {"tau", s->block_name(c.tau)},
                        {"mu", s->block_name(c.mu)},
                        {"value", c.value}});
        t << pad(s->block_name(c.sigma), 10) << pad(s->block_name(c.tau), 10) << pad(s->block_name(c.mu), 10)
          << c.value << "\n";
      }
      o.data = {{"constants", rows}};
      o.text = t.str();
      return o;
    };
  });

  auto* tame = app.add_subcommand("tame", "Check T(i), T(ii), T(iii)");
  tame->add_option("file", file, "Schemoid JSON (default: stdin)");
  tame->callback([&] {
    action = [&] {
      SchemoidPtr s = load_schemoid(file);
      TamenessReport r = tameness_report(*s);
      Outcome o;
      json fails = json::array();
      for (const auto& f : r.tiii_failures)
        fails.push_back({{"sigma", s->block_name(f.sigma)}, {"tau", s->block_name(f.tau)}, {"reason", f.describe(*s)}});
      o.data = {{"tame", r.tame}, {"unital", r.unital}, {"tii", r.tii_holds}, {"tiii", r.tiii_holds},
                {"tiii_failures", fails}};
      std::ostringstream t;
      t << (r.tame ? "tame" : "not tame") << "\n";
      t << "  T(i)   " << (r.unital ? "holds" : "fails: " + r.unital_witness) << "\n";
      t << "  T(ii)  " << (r.tii_holds ? "holds" : "fails: " + r.tii_witness) << "\n";
      t << "  T(iii) " << (r.tiii_holds ? "holds" : "fails") << "\n";
      for (const auto& f : r.tiii_failures) t << "    " << f.describe(*s) << "\n";
      if (!r.unital) o.data["unital_witness"] = r.unital_witness;
      if (!r.tii_holds) o.data["tii_witness"] = r.tii_witness;
      o.text = t.str();
      o.code = r.tame ? 0 : 1;
      return o;
    };
  });

  auto* quotient = app.add_subcommand("quotient", "Quotient category [C] of a tame schemoid");
  quotient->add_option("file", file, "Schemoid JSON (default: stdin)");
  quotient->callback([&] {
    action = [&] {
      SchemoidPtr s = load_schemoid(file);
      Quotient q = quotient_category(*s);
      Outcome o;
      o.data = io::category_to_json(q.category);
      o.data["format"] = 1;
      o.data["object_of"] = q.object_of;
      std::vector<std::string> labels;
      for (BlockId b = 0; b < s->num_blocks(); ++b) labels.push_back(s->block_name(b));
      o.data["morphism_labels"] = labels;
      o.raw_json = true;
      return o;
    };
  });

  auto* iso = app.add_subcommand("iso", "Brute-force schemoid isomorphism");
  iso->add_option("a", file, "First schemoid")->required();
  iso->add_option("b", file2, "Second schemoid")->required();
  iso->add_option("--max-objects", max_objects, "Object-count guard")->capture_default_str();
  iso->callback([&] {
    action = [&] {
      SchemoidPtr a = load_schemoid(file), b = load_schemoid(file2);
      auto f = schemoid_isomorphic_bruteforce(*a, *b, max_objects);
      Outcome o;
      o.code = f ? 0 : 1;
      o.data = {{"isomorphic", f.has_value()}};
      if (f) o.data["functor"] = io::functor_to_json(*f);
      o.text = f ? "isomorphic\n" : "not isomorphic\n";
      return o;
    };
  });

  // ---- algebra ------------------------------------------------------------
  auto* algebra = app.add_subcommand("algebra", "Algebras attached to a schemoid");
  algebra->require_subcommand(1);
  std::string a_field = "Q", a_of = "bose-mesner";
  std::size_t a_max = 2, a_max_dim = 12;
  {
    auto add_common = [&](CLI::App* s, const char* what) {
      s->add_option("file", file, what)->required();
      s->add_option("--field", a_field, "Q or Fp")->capture_default_str();
    };
    auto* s = algebra->add_subcommand("category", "Category algebra");
    add_common(s, "Category or schemoid JSON");
    s->callback([&] {
      action = [&] {
        FDAlgebra a = category_algebra(io::category_from_json(io::read_json(file)), Field::parse(a_field));
        return Outcome{0, io::algebra_to_json(a), algebra_text(a)};
      };
    });
    s = algebra->add_subcommand("bose-mesner", "Bose-Mesner algebra on block sums");
    add_common(s, "Schemoid JSON");
    s->callback([&] {
      action = [&] {
        FDAlgebra a = bose_mesner(*load_schemoid(file), Field::parse(a_field));
        return Outcome{0, io::algebra_to_json(a), algebra_text(a)};
      };
    });
    s = algebra->add_subcommand("quotient", "Linearized quotient category");
    add_common(s, "Schemoid JSON");
    s->callback([&] {
      action = [&] {
        FDAlgebra a = quotient_linear_algebra(*load_schemoid(file), Field::parse(a_field));
        return Outcome{0, io::algebra_to_json(a), algebra_text(a)};
      };
    });
    s = algebra->add_subcommand("sr-compare", "Stanley-Reisner ring mod squares against Bose-Mesner of P(K)");
    add_common(s, "Complex JSON");
    s->callback([&] {
      action = [&] {
        SrComparison c = stanley_reisner_mod_squares(io::complex_from_json(io::read_json(file)), Field::parse(a_field));
        Outcome o;
        o.code = c.alpha_is_iso ? 0 : 1;
        o.data = {{"sr_dim", c.sr.dim()}, {"bm_dim", c.bm.dim()}, {"alpha_is_iso", c.alpha_is_iso}};
        if (!c.alpha_is_iso) o.data["defect"] = c.defect;
        o.text = "SR dim " + std::to_string(c.sr.dim()) + ", Bose-Mesner dim " + std::to_string(c.bm.dim()) +
                 (c.alpha_is_iso ? ", alpha is an isomorphism\n" : ", alpha fails: " + c.defect + "\n");
        return o;
      };
    });
    s = algebra->add_subcommand("center", "Dimension of the center");
    add_common(s, "Schemoid JSON");
    s->add_option("--of", a_of, "bose-mesner, category or quotient")->capture_default_str();
    s->callback([&] {
      action = [&] {
        FDAlgebra a = algebra_of(a_of, *load_schemoid(file), Field::parse(a_field));
        CenterResult c = center(a);
        return Outcome{0, {{"algebra", a_of}, {"dim", a.dim()}, {"center_dim", c.dimension}},
                       "center of the " + a_of + " algebra: dimension " + std::to_string(c.dimension) + "\n"};
      };
    });
    s = algebra->add_subcommand("hh", "Hochschild cohomology dimensions");
    add_common(s, "Schemoid JSON");
    s->add_option("--of", a_of, "bose-mesner, category or quotient")->capture_default_str();
    s->add_option("--max", a_max, "Highest degree")->capture_default_str();
    s->add_option("--max-dim", a_max_dim, "Dimension guard")->capture_default_str();
    s->callback([&] {
      action = [&] {
        FDAlgebra a = algebra_of(a_of, *load_schemoid(file), Field::parse(a_field));
        auto hh = hochschild_cohomology(a, a_max, a_max_dim);
        return Outcome{0, {{"algebra", a_of}, {"hh", hh}}, "HH^0..HH^" + std::to_string(a_max) + " = " + list_str(hh) + "\n"};
      };
    });
  }

  // ---- rep ----------------------------------------------------------------
  auto* rep = app.add_subcommand("rep", "Functor representations");
  rep->require_subcommand(1);
  RepOptions ro;
  bool r_all = false, r_perturb = false;
  std::size_t r_max = 3, r_bound = 1, r_hamming = 0;
  std::uint64_t r_candidates = 1'000'000;
  std::string r_u, r_v;
  {
    auto field_opt = [&](CLI::App* s) { s->add_option("--field", ro.field, "Q or Fp")->capture_default_str(); };
    auto morphism_opts = [&](CLI::App* s) {
      s->add_flag("--id", ro.id, "Use the identity morphism of --schemoid");
      s->add_option("--schemoid", ro.schemoid, "Schemoid JSON");
      s->add_option("--source", ro.source, "Source schemoid JSON");
      s->add_option("--target", ro.target, "Target schemoid JSON");
      s->add_option("--morphism", ro.morphism, "Morphism JSON {\"obj\": [...], \"mor\": [...]}");
      field_opt(s);
    };

    auto* s = rep->add_subcommand("validate", "Check functoriality and block constancy");
    s->add_option("--schemoid", ro.schemoid, "Schemoid JSON")->required();
    s->add_option("--rep", ro.rep, "Rep JSON")->required();
    field_opt(s);
    s->callback([&] {
      action = [&] {
        SchemoidPtr sch = load_schemoid(ro.schemoid);
        FunctorRep r = io::rep_from_json(io::read_json(ro.rep), sch, Field::parse(ro.field));
        auto d = rep_defect(r);
        Outcome o;
        o.code = d ? 1 : 0;
        o.data = {{"valid", !d}};
        if (d) o.data["reason"] = *d;
        o.text = d ? "invalid: " + *d + "\n" : "valid, dims " + list_str(r.dims) + "\n";
        return o;
      };
    });

    s = rep->add_subcommand("hom", "Dimension of the locally constant hom space");
    s->add_option("--schemoid", ro.schemoid, "Schemoid JSON")->required();
    s->add_option("--rep", ro.rep, "Source rep")->required();
    s->add_option("--rep2", ro.rep2, "Target rep")->required();
    s->add_flag("--all", r_all, "Count all natural transformations instead");
    field_opt(s);
    s->callback([&] {
      action = [&] {
        SchemoidPtr sch = load_schemoid(ro.schemoid);
        const Field k = Field::parse(ro.field);
        FunctorRep m = load_rep(ro.rep, sch, k), n = load_rep(ro.rep2, sch, k);
        HomSpace h = r_all ? nat_hom(m, n) : lc_hom(m, n);
        return Outcome{0, {{"dimension", h.dimension}, {"locally_constant", !r_all}},
                       std::string(r_all ? "natural" : "locally constant") + " hom dimension " +
                           std::to_string(h.dimension) + "\n"};
      };
    });

    s = rep->add_subcommand("restrict", "Restriction u*F of a rep on the target");
    morphism_opts(s);
    s->add_option("--rep", ro.rep, "Rep on the target")->required();
    s->callback([&] {
      action = [&] {
        SchemoidMorphism u = load_morphism(ro);
        return rep_outcome(restrict(u, load_rep(ro.rep, u.target, Field::parse(ro.field))), "restriction");
      };
    });

    for (const char* side : {"ran", "lan"}) {
      const bool right = std::string(side) == "ran";
      s = rep->add_subcommand(side, right ? "Right Kan extension along a morphism into a tame schemoid"
                                          : "Left Kan extension along a morphism into a tame schemoid");
      morphism_opts(s);
      s->add_option("--rep", ro.rep, "Rep on the source")->required();
      s->callback([&, right] {
        action = [&, right] {
          SchemoidMorphism u = load_morphism(ro);
          FunctorRep m = load_rep(ro.rep, u.source, Field::parse(ro.field));
          return right ? rep_outcome(kan_right(u, m), "right Kan extension")
                       : rep_outcome(kan_left(u, m), "left Kan extension");
        };
      });
    }

    s = rep->add_subcommand("ext", "Ext between two reps of a tame schemoid");
    s->add_option("--schemoid", ro.schemoid, "Schemoid JSON")->required();
    s->add_option("--rep", ro.rep, "First rep")->required();
    s->add_option("--rep2", ro.rep2, "Second rep")->required();
    s->add_option("--max", r_max, "Highest degree")->capture_default_str();
    field_opt(s);
    s->callback([&] {
      action = [&] {
        SchemoidPtr sch = load_schemoid(ro.schemoid);
        const Field k = Field::parse(ro.field);
        auto dims = ext_dims(mitchell(load_rep(ro.rep, sch, k)), mitchell(load_rep(ro.rep2, sch, k)), r_max);
        return Outcome{0, {{"dims", dims}}, "Ext^0..Ext^" + std::to_string(r_max) + " = " + list_str(dims) + "\n"};
      };
    });

    s = rep->add_subcommand("cohomology", "Schemoid cohomology H*(u; M)");
    morphism_opts(s);
    s->add_option("--rep", ro.rep, "Rep on the source (default: constant 1-dimensional)");
    s->add_option("--max", r_max, "Highest degree")->capture_default_str();
    s->callback([&] {
      action = [&] {
        SchemoidMorphism u = load_morphism(ro);
        const Field k = Field::parse(ro.field);
        FunctorRep m = ro.rep.empty() ? FunctorRep::constant(u.source, k) : load_rep(ro.rep, u.source, k);
        auto dims = schemoid_cohomology(u, m, r_max);
        return Outcome{0, {{"dims", dims}}, "H^0..H^" + std::to_string(r_max) + " = " + list_str(dims) + "\n"};
      };
    });

    s = rep->add_subcommand("morita-check", "Check a pair of Morita witnesses u: D → C, v: C → D");
    s->add_option("--hamming", r_hamming, "Use the Hamming witnesses for H(n,2) and S~(Z/2)");
    s->add_flag("--perturb", r_perturb, "Swap the objects in the image of v (Hamming witnesses only)");
    s->add_option("--source", ro.source, "D");
    s->add_option("--target", ro.target, "C");
    s->add_option("--u", r_u, "u: D → C as morphism JSON");
    s->add_option("--v", r_v, "v: C → D as morphism JSON");
    s->add_option("--bound", r_bound, "Dimension bound for enumeration")->capture_default_str();
    field_opt(s);
    s->callback([&] {
      action = [&] {
        const Field k = Field::parse(ro.field);
        std::optional<SchemoidMorphism> u, v;
        if (r_hamming) {
          auto sz2 = std::make_shared<const Schemoid>(from_groupoid(group_category(cyclic_group(2))));
          auto hn = std::make_shared<const Schemoid>(from_association_scheme(hamming(r_hamming)));
          u = hamming_u(sz2, hn);
          v = hamming_v(hn, sz2, r_perturb);
        } else {
          if (ro.source.empty() || ro.target.empty() || r_u.empty() || r_v.empty())
            throw ParseError("give --hamming n or --source, --target, --u and --v");
          SchemoidPtr d = load_schemoid(ro.source), c = load_schemoid(ro.target);
          u = validate_morphism(d, c, io::functor_from_json(io::read_json(r_u)));
          v = validate_morphism(c, d, io::functor_from_json(io::read_json(r_v)));
        }
        MoritaReport r = morita_witness_check(*u, *v, k, r_bound);
        Outcome o;
        o.code = r.ok() ? 0 : 1;
        o.data = {{"ok", r.ok()},          {"clause1", r.clause1}, {"clause2", r.clause2},
                  {"clause3", r.clause3},  {"clause4", r.clause4}, {"reps_source", r.reps_d},
                  {"reps_target", r.reps_c}};
        if (!r.witness.empty()) o.data["witness"] = r.witness;
        std::ostringstream t;
        t << "clauses " << r.clause1 << r.clause2 << r.clause3 << r.clause4 << " over " << r.reps_d << " + "
          << r.reps_c << " enumerated reps: " << (r.ok() ? "pass" : "fail") << "\n";
        if (!r.witness.empty()) t << "  " << r.witness << "\n";
        o.text = t.str();
        return o;
      };
    });

    s = rep->add_subcommand("enumerate", "Every rep over a small prime field up to a dimension bound");
    s->add_option("--schemoid", ro.schemoid, "Schemoid JSON")->required();
    s->add_option("--bound", r_bound, "Dimension bound")->capture_default_str();
    s->add_option("--max-candidates", r_candidates, "Candidate-matrix guard")->capture_default_str();
    field_opt(s);
    s->callback([&] {
      action = [&] {
        EnumerationGuard g;
        g.max_candidates = r_candidates;
        auto reps = enumerate_functor_reps(load_schemoid(ro.schemoid), Field::parse(ro.field), r_bound, g);
        Outcome o;
        json list = json::array();
        std::ostringstream t;
        t << reps.size() << " reps\n";
        for (const auto& r : reps) {
          list.push_back(io::rep_to_json(r));
          t << "  dims " << list_str(r.dims) << "\n";
        }
        o.data = {{"count", reps.size()}, {"reps", list}};
        o.text = t.str();
        return o;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!action) {
    err << "no command\n";
    return 2;
  }
  try {
    Outcome o = action();
    if (o.raw_json || as_json)
      out << o.data.dump(o.raw_json && !as_json ? -1 : 2) << "\n";
    else
      out << o.text;
    return o.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const io::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace schemoid::cli

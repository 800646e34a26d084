#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "schur/analysis.hpp"
#include "schur/constructors.hpp"
#include "schur/enumeration.hpp"
#include "schur/error.hpp"
#include "schur/io.hpp"
#include "schur/iso.hpp"

using namespace schur;

namespace {

// Exit codes: 0 success, 1 negative verdict, 2 input error, 3 bound exceeded.
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBoundExceeded = 3;

struct Globals {
  int bound = kDefaultIsoBound;
  int enum_bound = kDefaultEnumBound;
  int rank_bound = kDefaultRankBound;
  int workers = 1;
  bool bound_set = false;
};

void diagnose(std::string_view kind, const std::string& message) {
  Json d{{"error", std::string(kind)}, {"message", message}};
  std::cerr << d.dump() << '\n';
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_doc(const std::string& path) { return parse_json(slurp(path)); }

void emit(const Json& j) { std::cout << to_text(j) << '\n'; }

std::vector<int> parse_factors(const std::string& text) {
  Json j = parse_json("[" + text + "]");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorKind::InvalidInput, "factors must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// A JSON array of residue arrays, e.g. [[1,0,0],[0,1,0]].
std::vector<int> parse_elements(const GroupSpec& g, const std::string& text, const std::string& what) {
  Json j = parse_json(text);
  if (!j.is_array()) throw Error(ErrorKind::Schema, what + ": expected an array of elements");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(elem_from_json(g, j[i], what + "/" + std::to_string(i)));
  return out;
}

Subgroup parse_subgroup(const GroupSpec& g, const std::string& text, const std::string& what) {
  auto gens = parse_elements(g, text, what);
  return generated_subgroup(g, gens);
}

AlgMap parse_alg_map(const std::string& text, int rank) {
  Json doc{{"alg_map", parse_json(text)}};
  return *alg_map_from_json(doc, rank, "--map");
}

// Map from the option if present, else from the document's "alg_map" field.
AlgMap alg_map_or_field(const std::string& opt, const Json& doc, const SRing& a) {
  if (!opt.empty()) return parse_alg_map(opt, a.rank());
  if (auto m = alg_map_from_json(doc, a.rank())) return *m;
  throw Error(ErrorKind::InvalidInput, "no algebraic map given (use --map or an alg_map field)");
}

Json perm_group_json(const PermGroup& p) {
  Json gens = Json::array();
  for (const Perm& g : p.generators()) gens.push_back(perm_to_json(g));
  return Json{{"order", big_to_json(p.order())}, {"generators", gens}};
}

Json alg_maps_json(const std::vector<AlgMap>& maps) {
  Json out = Json::array();
  for (const AlgMap& m : maps) out.push_back(m.images());
  return out;
}

std::vector<Perm> parse_group_automorphisms(const GroupSpec& g, const std::string& text) {
  // Each automorphism is given by the images of the canonical generators.
  Json j = parse_json(text);
  if (!j.is_array()) throw Error(ErrorKind::Schema, "--aut: expected an array of generator-image lists");
  std::vector<Perm> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string where = "--aut/" + std::to_string(i);
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != g.num_factors())
      throw Error(ErrorKind::Schema, where + ": expected one image per generator");
    std::vector<int> images;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      images.push_back(elem_from_json(g, j[i][k], where + "/" + std::to_string(k)));
    auto f = hom_from_generator_images(g, images);
    if (!f) throw Error(ErrorKind::NotAutomorphism, where + ": images do not define an automorphism");
    out.push_back(f->as_perm());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over finite abelian groups"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--bound", gl.bound, "size limit for searches and enumeration (group order)")
      ->check(CLI::PositiveNumber);
  app.add_option("--rank-bound", gl.rank_bound, "rank limit for algebraic isomorphism search")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", gl.workers, "worker threads; output is identical for any value")
      ->check(CLI::PositiveNumber);

  int status = 0;
  std::string input = "-";
  std::string input2;
  std::string factors;
  std::string upper, lower, sub;
  std::string map_text;
  std::string aut_text;
  std::string perms_text;
  int class_index = 0;
  bool self = false;
  bool exhaustive = false;
  bool up_to_cayley_flag = false;
  bool as_json = false;
  std::vector<std::string> target_files;

  auto ring_arg = [&](CLI::App* c) { c->add_option("ring", input, "S-ring JSON file, - for stdin"); };

  // group
  auto* group = app.add_subcommand("group", "abelian group facts")->require_subcommand(1);
  auto* group_info = group->add_subcommand("info", "order, exponent, subgroups, |Aut(G)|");
  group_info->add_option("--factors", factors, "cyclic factor orders, e.g. 2,2,4")->required();

  // sring
  auto* sring = app.add_subcommand("sring", "single S-ring operations")->require_subcommand(1);
  auto* s_validate = sring->add_subcommand("validate", "check the axioms and print the canonical form");
  ring_arg(s_validate);
  auto* s_constants = sring->add_subcommand("constants", "structure constants c[X][Y][Z]");
  ring_arg(s_constants);
  auto* s_induce = sring->add_subcommand("induce", "the S-ring on a section U/L");
  ring_arg(s_induce);
  s_induce->add_option("--upper", upper, "generators of U as a JSON array")->required();
  s_induce->add_option("--lower", lower, "generators of L as a JSON array (default: trivial)");
  auto* s_radical = sring->add_subcommand("radical", "radical of a basic set");
  ring_arg(s_radical);
  s_radical->add_option("--class", class_index, "basic set index")->required();

  // build
  auto* build = app.add_subcommand("build", "S-ring constructors")->require_subcommand(1);
  auto* b_cyc = build->add_subcommand("cyc", "orbits of K <= Aut(G)");
  b_cyc->add_option("--factors", factors)->required();
  b_cyc->add_option("--aut", aut_text, "generators of K as generator-image lists")->required();
  auto* b_orbit = build->add_subcommand("orbit", "orbits of the stabilizer of e in <G_right, perms>");
  b_orbit->add_option("--factors", factors)->required();
  b_orbit->add_option("--perms", perms_text, "extra permutations of G as image arrays")->required();
  auto* b_tensor = build->add_subcommand("tensor", "tensor product");
  b_tensor->add_option("first", input)->required();
  b_tensor->add_option("second", input2)->required();
  auto* b_wreath = build->add_subcommand("wreath", "A_L wr A_{G/L}");
  b_wreath->add_option("inner", input)->required();
  b_wreath->add_option("quotient", input2)->required();
  b_wreath->add_option("--factors", factors)->required();
  b_wreath->add_option("--lower", lower)->required();
  auto* b_swreath = build->add_subcommand("swreath", "A_U wr_S A_{G/L} for S = U/L");
  b_swreath->add_option("inner", input)->required();
  b_swreath->add_option("quotient", input2)->required();
  b_swreath->add_option("--factors", factors)->required();
  b_swreath->add_option("--upper", upper)->required();
  b_swreath->add_option("--lower", lower)->required();
  auto* b_fusion = build->add_subcommand("fusion", "algebraic fusion by <phi>");
  ring_arg(b_fusion);
  b_fusion->add_option("--map", map_text, "phi as a JSON class-index array (default: alg_map field)");
  auto* b_lift = build->add_subcommand("lift", "B wr Z(G/H) with phi extended by the identity");
  ring_arg(b_lift);
  b_lift->add_option("--factors", factors)->required();
  b_lift->add_option("--sub", sub, "generators of H, images of B's canonical generators")->required();
  b_lift->add_option("--map", map_text);

  // iso
  auto* iso = app.add_subcommand("iso", "isomorphisms")->require_subcommand(1);
  auto* i_aut = iso->add_subcommand("aut", "Aut(A) as a permutation group");
  ring_arg(i_aut);
  auto* i_autalg = iso->add_subcommand("autalg", "Aut_alg(A) and its induced part");
  ring_arg(i_autalg);
  auto* i_induced = iso->add_subcommand("induced", "a combinatorial isomorphism inducing a map");
  ring_arg(i_induced);
  i_induced->add_option("--target", input2, "target S-ring (default: the source)");
  i_induced->add_option("--map", map_text);
  auto* i_between = iso->add_subcommand("between", "algebraic and combinatorial isomorphisms A -> B");
  i_between->add_option("first", input)->required();
  i_between->add_option("second", input2)->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "verdicts")->require_subcommand(1);
  auto* a_schurian = analyze->add_subcommand("schurian", "exit 1 when not schurian");
  ring_arg(a_schurian);
  auto* a_normal = analyze->add_subcommand("normal", "exit 1 when G_right is not normal in Aut(A)");
  ring_arg(a_normal);
  auto* a_sep = analyze->add_subcommand("separable", "exit 1 when a non-induced isomorphism exists");
  ring_arg(a_sep);
  auto* self_opt = a_sep->add_flag("--self", self, "A itself is the only target");
  auto* ex_opt = a_sep->add_flag("--exhaustive", exhaustive, "every S-ring over every group of order |G|");
  auto* tg_opt = a_sep->add_option("--targets", target_files, "target S-ring files");
  self_opt->excludes(ex_opt)->excludes(tg_opt);
  ex_opt->excludes(tg_opt);

  // enum
  auto* en = app.add_subcommand("enum", "enumeration")->require_subcommand(1);
  auto* e_srings = en->add_subcommand("srings", "every S-ring as JSON lines");
  e_srings->add_option("--factors", factors)->required();
  e_srings->add_flag("--up-to-cayley", up_to_cayley_flag, "one ring per Cayley isomorphism class");
  auto* e_table = en->add_subcommand("table1", "exceptional S-rings over C3^3 as CSV");
  e_table->add_flag("--json", as_json, "JSON lines instead of CSV");

  // witness
  auto* wit = app.add_subcommand("witness", "non-separability witnesses")->require_subcommand(1);
  auto* w_p2 = wit->add_subcommand("p2", "over C2 x C2 x C4");
  auto* w_p3 = wit->add_subcommand("p3", "over C3 x C3 x C9");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose("Usage", e.what());
    return kInputError;
  }
  gl.bound_set = app.get_option("--bound")->count() > 0;
  if (gl.bound_set) gl.enum_bound = gl.bound;

  try {
    if (group_info->parsed()) {
      GroupSpec g(parse_factors(factors));
      check_bound(g.order(), gl.bound_set ? gl.bound : kDefaultGroupBound, "group order");
      auto [nf, iso_map] = normal_form(g);
      emit(Json{{"factors", g.factors()},
                {"order", g.order()},
                {"exponent", g.exponent()},
                {"invariant_factors", nf.factors()},
                {"subgroups", all_subgroups(g, g.order()).size()},
                {"aut_order", big_to_json(automorphism_group(g, g.order()).order())}});
    } else if (s_validate->parsed()) {
      Json doc = load_doc(input);
      SRing a = sring_from_json(doc);
      emit(sring_to_json(a, alg_map_from_json(doc, a.rank())));
    } else if (s_constants->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      const SCTensor& c = a.constants();
      Json t = Json::array();
      for (int x = 0; x < a.rank(); ++x) {
        Json row = Json::array();
        for (int y = 0; y < a.rank(); ++y) {
          Json col = Json::array();
          for (int z = 0; z < a.rank(); ++z) col.push_back(c(x, y, z));
          row.push_back(std::move(col));
        }
        t.push_back(std::move(row));
      }
      emit(Json{{"rank", a.rank()}, {"constants", t}});
    } else if (s_induce->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      const GroupSpec& g = a.group();
      Subgroup u = parse_subgroup(g, upper, "--upper");
      Subgroup l = lower.empty() ? trivial_subgroup() : parse_subgroup(g, lower, "--lower");
      emit(sring_to_json(induced_sring(a, quotient_section(g, u, l))));
    } else if (s_radical->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      if (class_index < 0 || class_index >= a.rank())
        throw Error(ErrorKind::InvalidInput, "class index out of range");
      Subgroup r = radical(a.group(), a.basic_set(class_index));
      Json members = Json::array();
      for (int x : r.members) members.push_back(elem_to_json(a.group(), x));
      emit(Json{{"class", class_index}, {"order", r.order()}, {"members", members}});
    } else if (b_cyc->parsed()) {
      GroupSpec g(parse_factors(factors));
      check_bound(g.order(), gl.bound_set ? gl.bound : kDefaultGroupBound, "group order");
      emit(sring_to_json(cyclotomic(g, parse_group_automorphisms(g, aut_text))));
    } else if (b_orbit->parsed()) {
      GroupSpec g(parse_factors(factors));
      check_bound(g.order(), gl.bound_set ? gl.bound : kDefaultGroupBound, "group order");
      Json j = parse_json(perms_text);
      if (!j.is_array()) throw Error(ErrorKind::Schema, "--perms: expected an array of image arrays");
      std::vector<Perm> gens = right_translations(g);
      for (std::size_t i = 0; i < j.size(); ++i)
        gens.push_back(perm_from_json(j[i], g.order(), "--perms/" + std::to_string(i)));
      emit(sring_to_json(orbit_sring(g, PermGroup(g.order(), gens, {0}))));
    } else if (b_tensor->parsed()) {
      emit(sring_to_json(tensor(sring_from_json(load_doc(input)), sring_from_json(load_doc(input2)))));
    } else if (b_wreath->parsed()) {
      GroupSpec g(parse_factors(factors));
      SRing inner = sring_from_json(load_doc(input));
      SRing quot = sring_from_json(load_doc(input2));
      emit(sring_to_json(wreath(inner, quot, g, parse_subgroup(g, lower, "--lower"))));
    } else if (b_swreath->parsed()) {
      GroupSpec g(parse_factors(factors));
      SRing inner = sring_from_json(load_doc(input));
      SRing quot = sring_from_json(load_doc(input2));
      emit(sring_to_json(s_wreath(inner, quot, g, parse_subgroup(g, upper, "--upper"),
                                  parse_subgroup(g, lower, "--lower"))));
    } else if (b_fusion->parsed()) {
      Json doc = load_doc(input);
      SRing a = sring_from_json(doc);
      AlgMap phi = alg_map_or_field(map_text, doc, a);
      AlgCheck chk = is_algebraic_iso(a, a, phi);
      if (!chk.ok) throw Error(ErrorKind::MapNotAlgebraic, chk.reason);
      std::vector<AlgMap> gens{phi};
      emit(sring_to_json(fusion(a, gens)));
    } else if (b_lift->parsed()) {
      Json doc = load_doc(input);
      SRing b = sring_from_json(doc);
      GroupSpec g(parse_factors(factors));
      AlgMap phi = alg_map_or_field(map_text, doc, b);
      // --sub lists the images in G of B's canonical generators.
      auto images = parse_elements(g, sub, "--sub");
      if (static_cast<int>(images.size()) != b.group().num_factors())
        throw Error(ErrorKind::InvalidInput, "--sub needs one element per factor of B's group");
      Subgroup h = generated_subgroup(g, images);
      if (h.order() != b.group().order())
        throw Error(ErrorKind::InvalidInput, "--sub does not generate a copy of B's group");
      std::vector<int> embed(static_cast<std::size_t>(b.group().order()));
      for (int x = 0; x < b.group().order(); ++x) {
        int y = 0;
        Elem e = b.group().element(x);
        for (int i = 0; i < b.group().num_factors(); ++i)
          y = g.add(y, g.scale(images[static_cast<std::size_t>(i)], e.residues[static_cast<std::size_t>(i)]));
        embed[static_cast<std::size_t>(x)] = y;
      }
      LiftResult r = nonsep_lift(b, phi, g, h, embed);
      emit(sring_to_json(r.ring, r.psi));
    } else if (i_aut->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      PermGroup aut = automorphisms(a, gl.bound);
      Json j = perm_group_json(aut);
      j["stabilizer_order"] = big_to_json(aut.order() / a.group().order());
      emit(j);
    } else if (i_autalg->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      InducedSplit s = aut_alg_induced(a, gl.bound, gl.rank_bound);
      emit(Json{{"aut_alg_order", s.aut_alg.size()},
                {"induced_order", s.induced.size()},
                {"aut_order", big_to_json(s.aut_order)},
                {"iso_order", big_to_json(s.iso_order)},
                {"aut_alg", alg_maps_json(s.aut_alg)},
                {"induced", alg_maps_json(s.induced)}});
    } else if (i_induced->parsed()) {
      Json doc = load_doc(input);
      SRing a = sring_from_json(doc);
      SRing b = input2.empty() ? a : sring_from_json(load_doc(input2));
      AlgMap m = alg_map_or_field(map_text, doc, a);
      auto f = is_induced(a, b, m, gl.bound);
      emit(Json{{"alg_map", m.images()}, {"induced_by", f ? perm_to_json(*f) : Json(nullptr)}});
      if (!f) status = kNegative;
    } else if (i_between->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      SRing b = sring_from_json(load_doc(input2));
      auto maps = algebraic_isomorphisms(a, b, gl.rank_bound);
      IsoCount ic = color_isomorphisms(a, b, gl.bound, gl.rank_bound);
      emit(Json{{"algebraic", alg_maps_json(maps)},
                {"combinatorial_count", big_to_json(ic.count)},
                {"witness", ic.witness ? perm_to_json(*ic.witness) : Json(nullptr)}});
      if (!ic.witness) status = kNegative;
    } else if (a_schurian->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      SchurianResult r = is_schurian(a, gl.bound);
      Json orbits = Json::array();
      for (const auto& o : r.orbits) {
        Json c = Json::array();
        for (int x : o) c.push_back(elem_to_json(a.group(), x));
        orbits.push_back(std::move(c));
      }
      emit(Json{{"schurian", r.schurian}, {"aut_order", big_to_json(r.aut_order)}, {"orbits", orbits}});
      if (!r.schurian) status = kNegative;
    } else if (a_normal->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      bool normal = is_normal(a, gl.bound);
      emit(Json{{"normal", normal}});
      if (!normal) status = kNegative;
    } else if (a_sep->parsed()) {
      SRing a = sring_from_json(load_doc(input));
      std::vector<SRing> targets;
      TargetsMode mode = TargetsMode::Explicit;
      if (exhaustive) {
        mode = TargetsMode::Exhaustive;
        targets = exhaustive_targets(a.group().order(), gl.enum_bound, gl.workers);
      } else if (!target_files.empty()) {
        for (const auto& f : target_files) targets.push_back(sring_from_json(load_doc(f)));
      } else {
        targets.push_back(a);  // --self is the default
      }
      SeparabilityReport r =
          separability_verdict(a, targets, mode, gl.bound, gl.rank_bound, gl.workers);
      emit(report_to_json(r));
      if (r.verdict == Verdict::NonSeparable) status = kNegative;
    } else if (e_srings->parsed()) {
      GroupSpec g(parse_factors(factors));
      auto rings = enumerate_srings(g, gl.enum_bound, gl.workers);
      if (up_to_cayley_flag) rings = up_to_cayley(rings, g);
      for (const SRing& a : rings) std::cout << sring_to_json(a).dump() << '\n';
    } else if (e_table->parsed()) {
      GroupSpec g({3, 3, 3});
      auto reps = up_to_cayley(enumerate_srings(g, gl.enum_bound, gl.workers), g);
      auto rows = table1_report(reps, gl.workers);
      if (as_json) {
        for (const auto& r : rows) std::cout << table1_row_to_json(r).dump() << '\n';
      } else {
        std::cout << table1_csv(rows);
      }
    } else if (w_p2->parsed() || w_p3->parsed()) {
      Witness w = w_p2->parsed() ? witness_p2() : witness_p3();
      Json j = sring_to_json(w.ring, w.phi);
      Json names = Json::object();
      for (const auto& n : w.names) names[n.name] = n.index;
      j["names"] = names;
      emit(j);
    }
  } catch (const Error& e) {
    diagnose(to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::BoundExceeded ? kBoundExceeded : kInputError;
  } catch (const std::exception& e) {
    diagnose("Internal", e.what());
    return kInputError;
  }
  return status;
}

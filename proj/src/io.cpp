#include "schur/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "schur/error.hpp"

namespace schur {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Schema, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    schema(where, "integer out of range");
  return static_cast<int>(v);
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Json group_to_json(const GroupSpec& g) { return Json{{"factors", g.factors()}}; }

GroupSpec group_from_json(const Json& j, const std::string& where) {
  const Json& f = field(j, "factors", where);
  if (!f.is_array()) schema(where + "/factors", "expected an array");
  std::vector<int> factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    int v = as_int(f[i], where + "/factors/" + std::to_string(i));
    if (v < 2) schema(where + "/factors/" + std::to_string(i), "factor must be at least 2");
    factors.push_back(v);
  }
  try {
    return GroupSpec(factors);
  } catch (const Error& e) {
    schema(where, e.what());
  }
}

Json elem_to_json(const GroupSpec& g, int element) { return Json(g.element(element).residues); }

int elem_from_json(const GroupSpec& g, const Json& j, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != g.num_factors())
    schema(where, "expected a residue array of length " + std::to_string(g.num_factors()));
  Elem e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    int r = as_int(j[i], where + "/" + std::to_string(i));
    if (r < 0 || r >= g.factors()[i]) schema(where + "/" + std::to_string(i), "residue out of range");
    e.residues.push_back(r);
  }
  return g.index(e);
}

Json sring_to_json(const SRing& a, const std::optional<AlgMap>& alg_map) {
  Json classes = Json::array();
  for (const auto& cls : a.classes()) {
    Json c = Json::array();
    for (int x : cls) c.push_back(elem_to_json(a.group(), x));
    classes.push_back(std::move(c));
  }
  Json j{{"version", kFormatVersion}, {"group", group_to_json(a.group())}, {"classes", classes}};
  if (alg_map) j["alg_map"] = alg_map->images();
  return j;
}

SRing sring_from_json(const Json& j) {
  if (!j.is_object()) schema("", "expected an object");
  int version = as_int(field(j, "version", ""), "/version");
  if (version != kFormatVersion)
    schema("/version", "unsupported version " + std::to_string(version));
  GroupSpec g = group_from_json(field(j, "group", ""), "/group");
  const Json& cl = field(j, "classes", "");
  if (!cl.is_array()) schema("/classes", "expected an array");
  std::vector<std::vector<int>> parts;
  std::vector<char> seen(at(g.order()), 0);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    std::string where = "/classes/" + std::to_string(i);
    if (!cl[i].is_array()) schema(where, "expected an array");
    std::vector<int> cls;
    for (std::size_t k = 0; k < cl[i].size(); ++k) {
      std::string w = where + "/" + std::to_string(k);
      int x = elem_from_json(g, cl[i][k], w);
      if (seen[at(x)])
        throw Error(ErrorKind::NotAPartition, w + ": element " + cl[i][k].dump() + " repeated");
      seen[at(x)] = 1;
      cls.push_back(x);
    }
    parts.push_back(std::move(cls));
  }
  return validate_sring(g, std::move(parts));
}

std::optional<AlgMap> alg_map_from_json(const Json& j, int rank, const std::string& where) {
  if (!j.is_object() || !j.contains("alg_map")) return std::nullopt;
  const Json& m = j["alg_map"];
  if (!m.is_array() || static_cast<int>(m.size()) != rank)
    schema(where, "expected an array of length " + std::to_string(rank));
  std::vector<int> images;
  for (std::size_t i = 0; i < m.size(); ++i) images.push_back(as_int(m[i], where + "/" + std::to_string(i)));
  try {
    return AlgMap(images);
  } catch (const Error&) {
    schema(where, "not a bijection of class indices");
  }
}

Json perm_to_json(const Perm& p) { return Json(p.images()); }

Perm perm_from_json(const Json& j, int degree, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != degree)
    schema(where, "expected an image array of length " + std::to_string(degree));
  std::vector<int> images;
  for (std::size_t i = 0; i < j.size(); ++i) images.push_back(as_int(j[i], where + "/" + std::to_string(i)));
  try {
    return Perm(images);
  } catch (const Error&) {
    schema(where, "not a permutation");
  }
}

Json report_to_json(const SeparabilityReport& r) {
  Json j;
  j["ring"] = sring_to_json(r.ring);
  j["verdict"] = r.verdict == Verdict::Separable ? "SEPARABLE" : "NON_SEPARABLE";
  if (r.witness_target && r.witness_map)
    j["witness"] = Json{{"target", sring_to_json(*r.witness_target)}, {"alg_map", r.witness_map->images()}};
  else
    j["witness"] = nullptr;
  j["targets_mode"] = r.mode == TargetsMode::Explicit ? "explicit" : "exhaustive";
  j["targets_checked"] = r.targets_checked;
  j["counts"] = Json{{"aut", big_to_json(r.aut)},
                     {"aut_alg", big_to_json(r.aut_alg)},
                     {"aut_alg_induced", big_to_json(r.aut_alg_induced)}};
  return j;
}

Json table1_row_to_json(const Table1Row& r) {
  return Json{{"name", r.name},
              {"rank", r.rank},
              {"sizes", size_multiset(r.sizes)},
              {"schurian", r.schurian},
              {"aut_order", big_to_json(r.aut_order)},
              {"iso_over_aut", big_to_json(r.iso_over_aut)},
              {"aut_alg_order", big_to_json(r.aut_alg_order)}};
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "name,rank,sizes,schurian,aut_order,iso_over_aut,aut_alg_order\n";
  for (const auto& r : rows) {
    out << r.name << ',' << r.rank << ',' << size_multiset(r.sizes) << ','
        << (r.schurian ? "true" : "false") << ',' << r.aut_order << ',' << r.iso_over_aut << ','
        << r.aut_alg_order << '\n';
  }
  return out.str();
}

namespace {

int depth(const Json& j) {
  if (!j.is_structured()) return 0;
  int d = 0;
  for (const auto& v : j) d = std::max(d, depth(v));
  return d + 1;
}

void format(const Json& j, int indent, std::string& out) {
  if (depth(j) <= 2) {
    out += j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    format(it.value(), indent + 2, out);
    if (i + 1 < j.size()) out += ',';
    out += '\n';
  }
  out += std::string(static_cast<std::size_t>(indent), ' ');
  out += obj ? '}' : ']';
}

}  // namespace

std::string to_text(const Json& j) {
  std::string out;
  format(j, 0, out);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
  }
}

SRing read_sring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return sring_from_json(parse_json(buf.str()));
}

void write_sring(const std::string& path, const SRing& a, const std::optional<AlgMap>& alg_map) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << to_text(sring_to_json(a, alg_map)) << '\n';
}

}  // namespace schur

#include "rootleib/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace rootleib {

namespace {

json table_to_json(const std::vector<SVec>& tab, long dim) {
  json out = json::array();
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j)
      for (const auto& e : tab[i * dim + j])
        out.push_back(json::array({i, j, e.idx, rational_str(e.v)}));
  return out;
}

std::vector<SVec> table_from_json(const json& j, long dim, const std::string& what) {
  check(j.is_array(), "MalformedInput", what + " must be an array of [i,j,k,scalar]");
  std::vector<std::vector<Trip>> cells(dim * dim);
  for (const auto& row : j) {
    check(row.is_array() && row.size() == 4, "MalformedInput",
          what + " entries must be [i,j,k,\"num/den\"]");
    check(row[0].is_number_integer() && row[1].is_number_integer() &&
              row[2].is_number_integer() && row[3].is_string(),
          "MalformedInput", what + " entry types must be [int,int,int,string]");
    long i = row[0].get<long>(), jj = row[1].get<long>(), k = row[2].get<long>();
    check(i >= 0 && i < dim && jj >= 0 && jj < dim && k >= 0 && k < dim,
          "MalformedInput", what + " index out of range");
    cells[i * dim + jj].push_back({0, k, parse_rational(row[3].get<std::string>())});
  }
  std::vector<SVec> tab(dim * dim);
  for (long c = 0; c < dim * dim; ++c) {
    std::map<long, Q> acc;
    for (const auto& t : cells[c]) {
      check(!acc.count(t.c), "MalformedInput", what + " has a duplicate (i,j,k) entry");
      acc[t.c] = t.v;
    }
    SVec v;
    for (const auto& [idx, val] : acc)
      if (val != 0) v.push_back({idx, val});
    tab[c] = v;
  }
  return tab;
}

std::vector<std::string> names_from_json(const json& j, long dim) {
  check(j.is_array() && static_cast<long>(j.size()) == dim, "MalformedInput",
        "basis must list exactly dim names");
  std::vector<std::string> out;
  for (const auto& s : j) {
    check(s.is_string(), "MalformedInput", "basis names must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

QVec qvec_from_json(const json& j, long dim, const std::string& what) {
  check(j.is_array() && static_cast<long>(j.size()) == dim, "MalformedInput",
        what + " must list exactly dim coordinates");
  QVec out;
  for (const auto& s : j) {
    check(s.is_string(), "MalformedInput", what + " coordinates must be scalar strings");
    out.push_back(parse_rational(s.get<std::string>()));
  }
  return out;
}

json qvec_to_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_str(x));
  return out;
}

long dim_from_json(const json& j) {
  check(j.is_object() && j.contains("dim") && j["dim"].is_number_integer(),
        "MalformedInput", "missing integer field 'dim'");
  long dim = j["dim"].get<long>();
  check(dim >= 1, "MalformedInput", "'dim' must be positive");
  return dim;
}

}  // namespace

json mat_to_json(const Mat& m) {
  json entries = json::array();
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) entries.push_back(json::array({i, j, rational_str(m.at(i, j))}));
  return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

Mat mat_from_json(const json& j) {
  check(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
        "MalformedInput", "matrix needs fields rows, cols, entries");
  check(j["rows"].is_number_integer() && j["cols"].is_number_integer() &&
            j["entries"].is_array(),
        "MalformedInput", "matrix field types");
  Mat m(j["rows"].get<long>(), j["cols"].get<long>());
  for (const auto& row : j["entries"]) {
    check(row.is_array() && row.size() == 3 && row[0].is_number_integer() &&
              row[1].is_number_integer() && row[2].is_string(),
          "MalformedInput", "matrix entries must be [row,col,\"num/den\"]");
    long r = row[0].get<long>(), c = row[1].get<long>();
    check(r >= 0 && r < m.rows && c >= 0 && c < m.cols, "MalformedInput",
          "matrix entry out of range");
    m.at(r, c) = parse_rational(row[2].get<std::string>());
  }
  return m;
}

json dialgebra_to_json(const Dialgebra& d) {
  json j{{"dim", d.dim},
         {"basis", d.basis},
         {"left", table_to_json(d.left, d.dim)},
         {"right", table_to_json(d.right, d.dim)}};
  j["bar_unit"] = d.bar_unit ? qvec_to_json(*d.bar_unit) : json(nullptr);
  return j;
}

Dialgebra dialgebra_from_json(const json& j) {
  Dialgebra d;
  d.dim = dim_from_json(j);
  check(j.contains("basis") && j.contains("left") && j.contains("right") &&
            j.contains("bar_unit"),
        "MalformedInput", "dialgebra needs fields dim, basis, left, right, bar_unit");
  d.basis = names_from_json(j["basis"], d.dim);
  d.left = table_from_json(j["left"], d.dim, "left");
  d.right = table_from_json(j["right"], d.dim, "right");
  if (!j["bar_unit"].is_null()) d.bar_unit = qvec_from_json(j["bar_unit"], d.dim, "bar_unit");
  d.validate();
  return d;
}

json leibniz_to_json(const LeibnizAlgebra& l) {
  return json{{"dim", l.dim},
              {"basis", l.basis},
              {"bracket", table_to_json(l.table, l.dim)}};
}

LeibnizAlgebra leibniz_from_json(const json& j) {
  long dim = dim_from_json(j);
  check(j.contains("basis") && j.contains("bracket"), "MalformedInput",
        "Leibniz algebra needs fields dim, basis, bracket");
  return make_leibniz(dim, names_from_json(j["basis"], dim),
                      table_from_json(j["bracket"], dim, "bracket"));
}

json axiom_report_to_json(const AxiomReport& r) {
  json laws = json::array();
  for (const auto& l : r.laws) {
    json jl{{"name", l.name}, {"pass", l.pass}};
    if (l.witness) {
      jl["witness"] = json{{"at", json::array({l.witness->idx[0], l.witness->idx[1],
                                               l.witness->idx[2]})},
                           {"lhs", l.witness->lhs},
                           {"rhs", l.witness->rhs}};
    }
    laws.push_back(jl);
  }
  return json{{"subject", r.subject}, {"pass", r.pass()}, {"laws", laws}};
}

json check_report_to_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& c : r.items)
    items.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"subject", r.subject}, {"pass", r.pass()}, {"checks", items}};
}

json embedding_to_json(const Embedding& emb, const RootSystem& rs) {
  invariant(static_cast<long>(emb.e.size()) == rs.nroots() &&
                static_cast<long>(emb.h.size()) == rs.rank,
            "embedding shape does not match the root system");
  json e = json::object();
  for (long b = 0; b < rs.nroots(); ++b) e[rs.name(b)] = qvec_to_json(emb.e[b]);
  json h = json::array();
  for (const auto& v : emb.h) h.push_back(qvec_to_json(v));
  return json{{"e", e}, {"H", h}};
}

Embedding embedding_from_json(const json& j, const RootSystem& rs, long dim) {
  check(j.is_object() && j.contains("e") && j.contains("H"), "MalformedInput",
        "embedding needs fields 'e' (object) and 'H' (array)");
  check(j["e"].is_object() && j["H"].is_array(), "MalformedInput",
        "'e' must map root names to coordinate vectors and 'H' must be an array");
  Embedding emb;
  emb.e.assign(rs.nroots(), QVec());
  std::vector<bool> seen(rs.nroots(), false);
  for (auto it = j["e"].begin(); it != j["e"].end(); ++it) {
    long id = rs.id_by_name(it.key());
    check(id >= 0, "MalformedInput", "unknown root name '" + it.key() + "'");
    seen[id] = true;
    emb.e[id] = qvec_from_json(it.value(), dim, "e['" + it.key() + "']");
  }
  for (long b = 0; b < rs.nroots(); ++b)
    check(seen[b], "MalformedInput", "embedding is missing root '" + rs.name(b) + "'");
  check(static_cast<long>(j["H"].size()) == rs.rank, "MalformedInput",
        "'H' must list exactly rank = " + std::to_string(rs.rank) + " vectors");
  for (const auto& row : j["H"]) emb.h.push_back(qvec_from_json(row, dim, "H"));
  return emb;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  check(in.good(), "MalformedInput", "cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  check(!j.is_discarded(), "MalformedInput", "invalid JSON in '" + path + "'");
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  check(out.good(), "MalformedInput", "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string json_digest(const json& j) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(j.dump());
  return os.str();
}

namespace {

bool type_matches(const std::string& t, const json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "number") return v.is_number();
  if (t == "integer") return v.is_number_integer();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

std::string validate_at(const json& schema, const json& value, const std::string& path) {
  if (!schema.is_object()) return "";
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    if (t.is_string() && !type_matches(t.get<std::string>(), value))
      return path + ": expected type " + t.get<std::string>();
    if (t.is_array()) {
      bool any = false;
      for (const auto& tt : t)
        if (tt.is_string() && type_matches(tt.get<std::string>(), value)) any = true;
      if (!any) return path + ": value matches none of the allowed types";
    }
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto& e : schema["enum"])
      if (e == value) any = true;
    if (!any) return path + ": value not in enum";
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& r : schema["required"])
        if (!value.contains(r.get<std::string>()))
          return path + ": missing required field '" + r.get<std::string>() + "'";
    if (schema.contains("properties")) {
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (schema["properties"].contains(it.key())) {
          std::string err =
              validate_at(schema["properties"][it.key()], it.value(), path + "/" + it.key());
          if (!err.empty()) return err;
        } else if (schema.contains("additionalProperties") &&
                   schema["additionalProperties"].is_boolean() &&
                   !schema["additionalProperties"].get<bool>()) {
          return path + ": unexpected field '" + it.key() + "'";
        }
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    long i = 0;
    for (const auto& el : value) {
      std::string err = validate_at(schema["items"], el, path + "/" + std::to_string(i));
      if (!err.empty()) return err;
      ++i;
    }
  }
  return "";
}

}  // namespace

std::string schema_violation(const json& schema, const json& value) {
  return validate_at(schema, value, "$");
}

}  // namespace rootleib

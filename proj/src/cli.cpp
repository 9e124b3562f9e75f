#include "rootleib/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rootleib/base.hpp"
#include "rootleib/chevalley.hpp"
#include "rootleib/dialg.hpp"
#include "rootleib/json_io.hpp"
#include "rootleib/leibniz.hpp"
#include "rootleib/linalg.hpp"
#include "rootleib/matrixleib.hpp"
#include "rootleib/recognition.hpp"
#include "rootleib/report.hpp"
#include "rootleib/rootsys.hpp"

namespace rootleib {

namespace {

json qvec_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_str(x));
  return out;
}

bool qvec_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Collects one subcommand run — input digests, check items, an optional
// machine-readable payload — and serializes it per data/report.schema.json.
struct Reporter {
  std::string command;
  std::string mode = "json";  // "text", "json", or a path to write JSON to
  json inputs = json::array();
  json payload;
  CheckReport checks;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void input(const std::string& name, const json& j) {
    inputs.push_back(json{{"name", name}, {"digest", json_digest(j)}});
  }

  json to_json() const {
    json items = json::array();
    for (const auto& c : checks.items)
      items.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count());
    json rep{{"command", command},    {"version", ROOTLEIB_VERSION},
             {"inputs", inputs},      {"checks", items},
             {"pass", checks.pass()}, {"elapsed_ms", ms}};
    if (!payload.is_null()) rep["payload"] = payload;
    return rep;
  }

  void print_text() const {
    for (const auto& c : checks.items) {
      std::string line = std::string(c.pass ? " ok  " : "FAIL ") + c.name;
      if (!c.detail.empty()) line += "  [" + c.detail + "]";
      std::puts(line.c_str());
    }
    std::printf("%s: %s (%zu checks)\n", command.c_str(),
                checks.pass() ? "PASS" : "FAIL", checks.items.size());
  }

  int finish() {
    if (mode == "json") {
      std::puts(to_json().dump(2).c_str());
    } else if (mode == "text") {
      print_text();
    } else {
      save_json_file(mode, to_json());
      print_text();
      std::printf("report written to %s\n", mode.c_str());
    }
    return checks.pass() ? 0 : 1;
  }

  void append(const CheckReport& r) {
    for (const auto& c : r.items) checks.items.push_back(c);
  }
};

// Non-malformed toolkit errors become a failing check item so the run still
// produces a report (exit 1); malformed input propagates to exit 2.
int guarded(Reporter& rep, const std::function<void()>& body) {
  try {
    body();
  } catch (const ToolkitError& e) {
    if (e.kind == "MalformedInput") throw;
    rep.checks.add("aborted [" + e.kind + "]", false, e.what());
  }
  return rep.finish();
}

std::string rs_label(const RootSystem& rs) {
  return sl_type_str(rs.type) + std::to_string(rs.rank);
}

// Any failure turning CLI words into a root system is a usage error.
RootSystem roots_from_type_rank(const std::string& type, long rank) {
  try {
    return build_root_system(sl_type_of(type), static_cast<int>(rank));
  } catch (const ToolkitError& e) {
    fail("MalformedInput", e.what());
  }
}

RootSystem roots_from_arg(const std::string& s) {
  if (s.size() < 2)
    fail("MalformedInput", "a root system label is a type letter plus rank, e.g. A3, D4, E6");
  long rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stol(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    fail("MalformedInput", "cannot read the rank in '" + s + "'");
  }
  return roots_from_type_rank(s.substr(0, 1), rank);
}

Dialgebra load_dialgebra(Reporter& rep, const std::string& path) {
  json j = load_json_file(path);
  rep.input(path, j);
  return dialgebra_from_json(j);
}

// One of the toolkit's named constructions, together with what recognition
// and the round-trip comparison need: the grading embedding and the
// canonical ambient images of the coordinate dialgebra's basis.
struct BuiltAlgebra {
  LeibnizAlgebra L;
  bool graded = false;
  RootSystem rs;
  Embedding emb;
  std::vector<QVec> base_images;
};

BuiltAlgebra build_named(const std::string& what, long n, const Dialgebra& D,
                         const std::string& roots_arg, long cap) {
  BuiltAlgebra out;
  if (what == "gl") {
    check(n >= 1, "MalformedInput", "--what gl needs --n at least 1");
    out.L = build_gl(n, D).carrier;
    return out;
  }
  if (what == "sl" || what == "stl") {
    check(n >= 3, "MalformedInput", "--what " + what + " needs --n at least 3");
    out.rs = build_root_system(SLType::A, static_cast<int>(n - 1));
    out.graded = true;
    if (what == "sl") {
      MatrixLeibnizAlgebra sl = build_sl(n, D);
      out.L = sl.carrier;
      out.emb = sl_embedding(sl, out.rs);
      for (long a = 0; a < D.dim; ++a) out.base_images.push_back(sl.elem_basis(0, 1, a));
    } else {
      SteinbergModel S = build_steinberg_model(n, D, cap);
      out.L = S.ext.total;
      out.emb = steinberg_embedding(S, out.rs);
      for (long a = 0; a < D.dim; ++a) out.base_images.push_back(S.v_basis(0, 1, a));
    }
    return out;
  }
  if (what == "tensor") {
    check(!roots_arg.empty(), "MalformedInput", "--what tensor needs --roots (e.g. D4)");
    out.rs = roots_from_arg(roots_arg);
    ChevalleyAlgebra g = build_chevalley(out.rs, VerifyLevel::Off);
    out.L = build_tensor_algebra(g, D);
    out.emb = tensor_embedding(g, D);
    out.graded = true;
    long e_base = g.e_index(out.rs.simple_idx[0]);
    for (long a = 0; a < D.dim; ++a) {
      QVec v(out.L.dim, Q(0));
      v[e_base * D.dim + a] = 1;
      out.base_images.push_back(v);
    }
    return out;
  }
  fail("MalformedInput", "unknown --what '" + what + "'");
}

std::string grading_detail(const GradedDecomposition& gd) {
  long lo = gd.dim_at(0), hi = lo;
  for (long b = 1; b < gd.rs.nroots(); ++b) {
    lo = std::min(lo, gd.dim_at(b));
    hi = std::max(hi, gd.dim_at(b));
  }
  std::string dims = lo == hi ? "dim " + std::to_string(lo)
                              : "dims " + std::to_string(lo) + ".." + std::to_string(hi);
  return std::to_string(gd.rs.nroots()) + " root spaces of " + dims + ", zero part dim " +
         std::to_string(gd.zero_space().cols) + ", total " + std::to_string(gd.L.dim);
}

RecognitionResult run_recognition(Reporter& rep, const LeibnizAlgebra& L,
                                  const Embedding& emb, const RootSystem& rs,
                                  long alt_words, long cross_checks) {
  RecognitionResult rec = recognize(L, emb, rs, alt_words, cross_checks);
  rep.checks.add("grading over " + rs_label(rs) + " verified", true, grading_detail(rec.gd));
  rep.checks.add("coordinate charts built at base root " + rs.name(rec.chart.base_root), true,
                 "coordinate dim " + std::to_string(rec.chart.R_dim) +
                     "; transport coherence and word independence certified");
  std::string pairs =
      "left product at (" + rs.name(rec.rd.pos_beta) + ", " + rs.name(rec.rd.pos_gamma) +
      "), right product " +
      (rec.rd.right_is_flip ? "= flip of left (single pair class)"
                            : "at (" + rs.name(rec.rd.neg_beta) + ", " +
                                  rs.name(rec.rd.neg_gamma) + ")");
  rep.checks.add("dialgebra products recovered", true, pairs);
  rep.append(rec.axioms);
  rep.payload["R_dim"] = rec.chart.R_dim;
  rep.payload["base_root"] = rs.name(rec.chart.base_root);
  rep.payload["right_is_flip"] = rec.rd.right_is_flip;
  return rec;
}

std::string sidecar_path(const std::string& out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() &&
      out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
    return out.substr(0, out.size() - suffix.size()) + ".emb.json";
  return out + ".emb.json";
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact toolkit for dialgebras and root-graded Leibniz algebras"};
  app.name("rootleib");
  app.require_subcommand(1);

  std::string report_mode = "json";
  long cap = 10000000;
  std::uint64_t seed = 1;
  app.add_option("--report", report_mode,
                 "report format: 'text', 'json', or a path to write the JSON report to")
      ->capture_default_str();
  app.add_option("--cap", cap, "bound on tensor coordinates in homology computations")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for sampled scans")->capture_default_str();
  app.set_version_flag("--version", ROOTLEIB_VERSION);

  auto* roots_cmd =
      app.add_subcommand("roots", "enumerate a root system, optionally with its pair census");
  roots_cmd->fallthrough();
  std::string ro_type;
  long ro_rank = 0;
  bool ro_classes = false;
  roots_cmd->add_option("--type", ro_type, "A, D or E")->required();
  roots_cmd->add_option("--rank", ro_rank, "rank of the system")->required();
  roots_cmd->add_flag("--a2-classes", ro_classes,
                      "census of ordered pairs with pairing -1 and their orbit classes");

  auto* chev_cmd =
      app.add_subcommand("chevalley", "build a split simple Lie algebra and certify it");
  chev_cmd->fallthrough();
  std::string ch_type, ch_verify = "full";
  long ch_rank = 0, ch_samples = 10000;
  chev_cmd->add_option("--type", ch_type, "A, D or E")->required();
  chev_cmd->add_option("--rank", ch_rank, "rank of the system")->required();
  chev_cmd->add_option("--verify", ch_verify, "level of the Jacobi triple scan")
      ->check(CLI::IsMember({"off", "sampled", "full"}))
      ->capture_default_str();
  chev_cmd->add_option("--samples", ch_samples, "triples for --verify sampled")
      ->capture_default_str();

  auto* dialg_cmd = app.add_subcommand("dialg", "dialgebra file operations");
  dialg_cmd->fallthrough();
  dialg_cmd->require_subcommand(1);
  auto* dcheck_cmd = dialg_cmd->add_subcommand("check", "verify dialgebra axioms on a file");
  dcheck_cmd->fallthrough();
  std::string dc_input, dc_axioms = "all";
  dcheck_cmd->add_option("--input", dc_input, "dialgebra JSON file")->required();
  dcheck_cmd->add_option("--axioms", dc_axioms, "axiom family to scan")
      ->check(CLI::IsMember({"ass", "alt", "all"}))
      ->capture_default_str();

  auto* leib_cmd = app.add_subcommand("leib", "Leibniz algebra computations");
  leib_cmd->fallthrough();
  leib_cmd->require_subcommand(1);
  std::string lb_input, lb_what, lb_dialg, lb_roots;
  long lb_n = 0, lb_degree = 2;
  leib_cmd->add_option("--input", lb_input, "Leibniz algebra JSON file");
  leib_cmd->add_option("--what", lb_what, "build the input instead: gl|sl|stl|tensor")
      ->check(CLI::IsMember({"gl", "sl", "stl", "tensor"}));
  leib_cmd->add_option("--dialgebra", lb_dialg, "coordinate dialgebra JSON for --what");
  leib_cmd->add_option("--n", lb_n, "matrix size for gl|sl|stl");
  leib_cmd->add_option("--roots", lb_roots, "root system for --what tensor (e.g. D4)");
  auto* lcheck_cmd =
      leib_cmd->add_subcommand("check", "Leibniz identity scan plus structure facts");
  lcheck_cmd->fallthrough();
  auto* lhom_cmd = leib_cmd->add_subcommand("homology", "homology of the boundary complex");
  lhom_cmd->fallthrough();
  lhom_cmd->add_option("--degree", lb_degree, "homology degree")->capture_default_str();
  auto* luce_cmd = leib_cmd->add_subcommand("uce", "universal central extension");
  luce_cmd->fallthrough();

  auto* build_cmd =
      app.add_subcommand("build", "construct a named algebra and write it to files");
  build_cmd->fallthrough();
  std::string bd_what, bd_dialg, bd_roots, bd_out;
  long bd_n = 0;
  build_cmd->add_option("--what", bd_what, "gl|sl|stl|tensor")
      ->required()
      ->check(CLI::IsMember({"gl", "sl", "stl", "tensor"}));
  build_cmd->add_option("--n", bd_n, "matrix size for gl|sl|stl");
  build_cmd->add_option("--dialgebra", bd_dialg, "coordinate dialgebra JSON file")->required();
  build_cmd->add_option("--roots", bd_roots, "root system for --what tensor");
  build_cmd->add_option("--out", bd_out, "output path for the algebra JSON")->required();

  auto* rec_cmd = app.add_subcommand(
      "recognize", "grade an algebra and recover its coordinate dialgebra");
  rec_cmd->fallthrough();
  std::string rc_algebra, rc_embedding, rc_roots, rc_out;
  long rc_alt = 3, rc_cross = 3;
  rec_cmd->add_option("--algebra", rc_algebra, "Leibniz algebra JSON file")->required();
  rec_cmd->add_option("--embedding", rc_embedding,
                      "embedding JSON file: {\"e\": {root name: coords}, \"H\": [coords]}")
      ->required();
  rec_cmd->add_option("--roots", rc_roots, "root system label, e.g. A3")->required();
  rec_cmd->add_option("--out", rc_out, "write the recovered dialgebra JSON here");
  rec_cmd->add_option("--alt-words", rc_alt, "alternative transport words checked per root")
      ->capture_default_str();
  rec_cmd->add_option("--cross-checks", rc_cross, "extra pair replays per product class")
      ->capture_default_str();

  auto* rt_cmd = app.add_subcommand(
      "roundtrip", "build, grade, recover, and compare against the input dialgebra");
  rt_cmd->fallthrough();
  std::string rt_what, rt_dialg, rt_roots;
  long rt_n = 0, rt_alt = 3, rt_cross = 3;
  rt_cmd->add_option("--what", rt_what, "sl|stl|tensor")
      ->required()
      ->check(CLI::IsMember({"sl", "stl", "tensor"}));
  rt_cmd->add_option("--n", rt_n, "matrix size for sl|stl");
  rt_cmd->add_option("--dialgebra", rt_dialg, "coordinate dialgebra JSON file")->required();
  rt_cmd->add_option("--roots", rt_roots, "root system for --what tensor");
  rt_cmd->add_option("--alt-words", rt_alt, "alternative transport words checked per root")
      ->capture_default_str();
  rt_cmd->add_option("--cross-checks", rt_cross, "extra pair replays per product class")
      ->capture_default_str();

  auto* acc_cmd = app.add_subcommand("acceptance", "run every acceptance scenario");
  acc_cmd->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Reporter rep;
  rep.mode = report_mode;

  try {
    if (acc_cmd->parsed()) return run_acceptance();

    if (roots_cmd->parsed()) {
      rep.command = "roots";
      return guarded(rep, [&] {
        RootSystem rs = roots_from_type_rank(ro_type, ro_rank);
        json list = json::array();
        for (long b = 0; b < rs.nroots(); ++b)
          list.push_back(json{{"id", b},
                              {"name", rs.name(b)},
                              {"simple_coords", rs.simple_coords_of[b]},
                              {"height", rs.height(b)}});
        rep.payload = json{{"type", sl_type_str(rs.type)}, {"rank", rs.rank}, {"roots", list}};
        rep.checks.add("root system " + rs_label(rs) + " enumerated", true,
                       std::to_string(rs.nroots()) + " roots (" + std::to_string(rs.npos()) +
                           " positive)");
        if (ro_classes) {
          A2PairSet ps = enumerate_a2_pairs(rs);
          long classes = ps.negative_count > 0 ? 2 : 1;
          json pj = json::array();
          for (std::size_t k = 0; k < ps.pairs.size(); ++k)
            pj.push_back(json{
                {"beta", rs.name(ps.pairs[k].beta)},
                {"gamma", rs.name(ps.pairs[k].gamma)},
                {"class", ps.cls[k] == PairClass::Positive ? "positive" : "negative"}});
          rep.payload["pairs"] = pj;
          rep.payload["pair_count"] = static_cast<long>(ps.pairs.size());
          rep.payload["class_count"] = classes;
          rep.payload["positive_count"] = ps.positive_count;
          rep.payload["negative_count"] = ps.negative_count;
          rep.checks.add(
              "pairs with pairing -1 classified", true,
              std::to_string(ps.pairs.size()) + " pairs, " + std::to_string(classes) +
                  " class" + (classes > 1 ? "es" : "") + " (" +
                  std::to_string(ps.positive_count) + " positive, " +
                  std::to_string(ps.negative_count) + " negative)");
        }
      });
    }

    if (chev_cmd->parsed()) {
      rep.command = "chevalley";
      return guarded(rep, [&] {
        RootSystem rs = roots_from_type_rank(ch_type, ch_rank);
        VerifyLevel lvl = verify_level_of(ch_verify);
        ChevalleyAlgebra g = build_chevalley(rs, lvl, seed, ch_samples);
        rep.payload = json{{"dim", g.alg.dim},
                           {"nroots", g.nroots},
                           {"rank", g.rank},
                           {"digest", g.digest}};
        rep.checks.add("algebra built", true,
                       "dim " + std::to_string(g.alg.dim) + " = " + std::to_string(g.nroots) +
                           " root vectors + " + std::to_string(g.rank) +
                           " Cartan generators");
        rep.checks.add("pair certificates", true,
                       "antisymmetry, Cartan action, opposite-pair coroots, root-sum brackets");
        std::string scan =
            lvl == VerifyLevel::Full ? "exhaustive basis triples"
            : lvl == VerifyLevel::Sampled
                ? std::to_string(ch_samples) + " sampled triples (seed " +
                      std::to_string(seed) + ")"
                : "skipped (pair certificates only)";
        rep.checks.add("jacobi identity scan", true, scan);
        rep.checks.add("structure-constant digest", true, g.digest);
      });
    }

    if (dialg_cmd->parsed() && dcheck_cmd->parsed()) {
      rep.command = "dialg check";
      return guarded(rep, [&] {
        Dialgebra D = load_dialgebra(rep, dc_input);
        rep.payload = json{{"dim", D.dim}, {"has_bar_unit", D.bar_unit.has_value()}};
        rep.checks.add("table shapes and bar-unit laws", true,
                       D.bar_unit ? "bar-unit present" : "no bar-unit");
        if (dc_axioms == "ass" || dc_axioms == "all") rep.checks.merge(check_associative(D));
        if (dc_axioms == "alt" || dc_axioms == "all") rep.checks.merge(check_alternative(D));
      });
    }

    auto leib_source = [&](Reporter& r) -> LeibnizAlgebra {
      check(lb_input.empty() != lb_what.empty(), "MalformedInput",
            "give exactly one of --input or --what (with --dialgebra)");
      if (!lb_input.empty()) {
        json j = load_json_file(lb_input);
        r.input(lb_input, j);
        return leibniz_from_json(j);
      }
      check(!lb_dialg.empty(), "MalformedInput", "--what needs --dialgebra");
      Dialgebra D = load_dialgebra(r, lb_dialg);
      return build_named(lb_what, lb_n, D, lb_roots, cap).L;
    };

    if (leib_cmd->parsed() && lcheck_cmd->parsed()) {
      rep.command = "leib check";
      return guarded(rep, [&] {
        LeibnizAlgebra L = leib_source(rep);
        rep.checks.merge(check_leibniz(L));
        bool lie = is_lie(L), perf = is_perfect(L);
        long zdim = center(L).rank();
        rep.checks.add("antisymmetry status", true, lie ? "antisymmetric (Lie)" : "not antisymmetric");
        rep.checks.add("perfectness status", true, perf ? "perfect" : "not perfect");
        rep.checks.add("center dimension", true, std::to_string(zdim));
        rep.payload = json{{"dim", L.dim}, {"lie", lie}, {"perfect", perf}, {"center_dim", zdim}};
      });
    }

    if (leib_cmd->parsed() && lhom_cmd->parsed()) {
      rep.command = "leib homology";
      return guarded(rep, [&] {
        check(lb_degree >= 1, "MalformedInput", "--degree must be at least 1");
        LeibnizAlgebra L = leib_source(rep);
        Homology h = homology(L, lb_degree, cap);
        rep.payload = json{{"degree", h.degree},
                           {"dim", h.dim},
                           {"rank_dn", h.rank_dn},
                           {"rank_dn1", h.rank_dn1}};
        rep.checks.add("homology computed in degree " + std::to_string(h.degree), true,
                       "dim " + std::to_string(h.dim) + " (boundary ranks " +
                           std::to_string(h.rank_dn) + ", " + std::to_string(h.rank_dn1) + ")");
      });
    }

    if (leib_cmd->parsed() && luce_cmd->parsed()) {
      rep.command = "leib uce";
      return guarded(rep, [&] {
        LeibnizAlgebra L = leib_source(rep);
        CentralExtension ext = universal_central_extension(L, cap);
        rep.payload = json{{"base_dim", ext.base_dim},
                           {"total_dim", ext.total.dim},
                           {"kernel_dim", ext.kernel_dim}};
        rep.checks.add("universal central extension built", true,
                       "total dim " + std::to_string(ext.total.dim) + ", kernel dim " +
                           std::to_string(ext.kernel_dim));
        rep.checks.add("total algebra is perfect", is_perfect(ext.total), "");
        bool central = true;
        for (const SVec& zs : kernel_basis(ext.projection)) {
          QVec z(ext.total.dim, Q(0));
          for (const auto& e : zs) z[e.idx] = e.v;
          for (long i = 0; i < ext.total.dim && central; ++i) {
            QVec u(ext.total.dim, Q(0));
            u[i] = 1;
            central = qvec_zero(ext.total.bracket(u, z)) && qvec_zero(ext.total.bracket(z, u));
          }
          if (!central) break;
        }
        rep.checks.add("kernel is central", central, "");
      });
    }

    if (build_cmd->parsed()) {
      rep.command = "build";
      return guarded(rep, [&] {
        Dialgebra D = load_dialgebra(rep, bd_dialg);
        BuiltAlgebra b = build_named(bd_what, bd_n, D, bd_roots, cap);
        json lj = leibniz_to_json(b.L);
        save_json_file(bd_out, lj);
        std::string side_path = sidecar_path(bd_out);
        json side{{"what", bd_what}, {"labels", b.L.basis}};
        if (bd_n > 0) side["n"] = bd_n;
        if (b.graded) {
          side["roots"] = rs_label(b.rs);
          json ej = embedding_to_json(b.emb, b.rs);
          side["e"] = ej["e"];
          side["H"] = ej["H"];
          json imgs = json::array();
          for (const auto& v : b.base_images) imgs.push_back(qvec_json(v));
          side["base_images"] = imgs;
        }
        save_json_file(side_path, side);
        rep.payload = json{{"out", bd_out},
                           {"sidecar", side_path},
                           {"dim", b.L.dim},
                           {"digest", json_digest(lj)}};
        rep.checks.add("algebra written", true,
                       bd_out + " (dim " + std::to_string(b.L.dim) + ")");
        rep.checks.add(b.graded ? "index map with grading embedding written"
                                : "index map written",
                       true, side_path);
      });
    }

    if (rec_cmd->parsed()) {
      rep.command = "recognize";
      return guarded(rep, [&] {
        RootSystem rs = roots_from_arg(rc_roots);
        json lj = load_json_file(rc_algebra);
        rep.input(rc_algebra, lj);
        LeibnizAlgebra L = leibniz_from_json(lj);
        json ej = load_json_file(rc_embedding);
        rep.input(rc_embedding, ej);
        Embedding emb = embedding_from_json(ej, rs, L.dim);
        RecognitionResult rec = run_recognition(rep, L, emb, rs, rc_alt, rc_cross);
        if (!rc_out.empty()) {
          save_json_file(rc_out, dialgebra_to_json(rec.rd.R));
          rep.payload["out"] = rc_out;
          rep.checks.add("recovered dialgebra written", true, rc_out);
        }
      });
    }

    if (rt_cmd->parsed()) {
      rep.command = "roundtrip";
      return guarded(rep, [&] {
        Dialgebra D = load_dialgebra(rep, rt_dialg);
        BuiltAlgebra b = build_named(rt_what, rt_n, D, rt_roots, cap);
        rep.checks.add("construction '" + rt_what + "' built", true,
                       "dim " + std::to_string(b.L.dim) + " over a coordinate dialgebra of dim " +
                           std::to_string(D.dim));
        RecognitionResult rec = run_recognition(rep, b.L, b.emb, b.rs, rt_alt, rt_cross);
        rep.payload["input_dim"] = D.dim;
        rep.checks.add("recovered coordinate dimension matches the input",
                       rec.chart.R_dim == D.dim,
                       std::to_string(rec.chart.R_dim) + " vs " + std::to_string(D.dim));
        Mat ident = chart_identification(rec.chart, b.base_images);
        rep.append(compare_dialgebras(D, rec.rd.R, ident));
      });
    }
  } catch (const ToolkitError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.kind == "MalformedInput" ? 2 : 1;
  }

  return 2;
}

}  // namespace rootleib
#include <doctest.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "rootleib/cli.hpp"
#include "rootleib/json_io.hpp"
#include "rootleib/matrixleib.hpp"
#include "rootleib/recognition.hpp"

using namespace rootleib;

namespace {
std::string data_path(const std::string& name) {
  return std::string(ROOTLEIB_DATA_DIR) + "/" + name;
}

std::string tmp_path(const std::string& name) {
  return "/tmp/rootleib_test_" + std::to_string(getpid()) + "_" + name;
}

// Runs the CLI with stdout redirected to a scratch file, so tests can parse
// the emitted report without polluting the harness output.
struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::vector<std::string>& args) {
  static int counter = 0;
  std::string path = tmp_path("out" + std::to_string(counter++) + ".txt");
  std::fflush(stdout);
  int saved = dup(1);
  REQUIRE(saved >= 0);
  FILE* f = std::fopen(path.c_str(), "w");
  REQUIRE(f != nullptr);
  dup2(fileno(f), 1);
  CliRun r;
  r.code = run_cli(args);
  std::fflush(stdout);
  dup2(saved, 1);
  close(saved);
  std::fclose(f);
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  std::remove(path.c_str());
  return r;
}
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Q(-3, 2));
  CHECK(rational_str(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_str(Q(0)) == "0/1");
  CHECK(q_str(Q(5)) == "5");
  CHECK(q_str(Q(1, 2)) == "1/2");
  for (const char* bad : {"", "1/0", "x", "1.5", "2/", "/3", "1/2/3"})
    CHECK_THROWS_WITH_AS(parse_rational(bad), doctest::Contains("MalformedInput"),
                         ToolkitError);
}

TEST_CASE("bundled dialgebra files load and match the constructors") {
  Dialgebra k2_file = dialgebra_from_json(load_json_file(data_path("k2.json")));
  Dialgebra k2_built = fixtures::k2();
  CHECK(k2_file.left == k2_built.left);
  CHECK(k2_file.right == k2_built.right);
  CHECK(k2_file.bar_unit == k2_built.bar_unit);

  Dialgebra dual = dialgebra_from_json(load_json_file(data_path("dual.json")));
  Dialgebra dual_built = from_associative_algebra(fixtures::dual_numbers());
  CHECK(dual.left == dual_built.left);
  CHECK(dual.right == dual_built.right);

  Dialgebra k = dialgebra_from_json(load_json_file(data_path("k.json")));
  CHECK(k.dim == 1);
  CHECK(check_associative(k).pass());

  Dialgebra diff3 = dialgebra_from_json(load_json_file(data_path("diff3.json")));
  CHECK(!diff3.bar_unit.has_value());
  CHECK(check_associative(diff3).pass());
  // It matches the differential construction on K1 + span{a,b}, d(b) = a.
  Algebra A;
  A.dim = 3;
  A.basis = {"1", "a", "b"};
  A.mult.assign(9, SVec{});
  for (long i = 0; i < 3; ++i) {
    A.mult[0 * 3 + i] = {{i, Q(1)}};
    A.mult[i * 3 + 0] = {{i, Q(1)}};
  }
  A.unit = {Q(1), Q(0), Q(0)};
  Mat d(3, 3);
  d.at(1, 2) = 1;
  Dialgebra built = from_differential_algebra(A, d);
  CHECK(diff3.left == built.left);
  CHECK(diff3.right == built.right);
  CHECK(diff3.bar_unit == built.bar_unit);
}

TEST_CASE("serialization round-trips are bit-exact") {
  Dialgebra d = fixtures::k2();
  json j1 = dialgebra_to_json(d);
  Dialgebra d2 = dialgebra_from_json(j1);
  json j2 = dialgebra_to_json(d2);
  CHECK(j1.dump() == j2.dump());
  CHECK(json_digest(j1) == json_digest(j2));

  LeibnizAlgebra s = fixtures::sl2();
  json l1 = leibniz_to_json(s);
  LeibnizAlgebra s2 = leibniz_from_json(l1);
  CHECK(leibniz_to_json(s2).dump() == l1.dump());
  CHECK(s2.table == s.table);

  Mat m(2, 3);
  m.at(0, 1) = Q(-3, 2);
  m.at(1, 2) = 7;
  Mat m2 = mat_from_json(mat_to_json(m));
  CHECK(m == m2);
}

TEST_CASE("malformed inputs are rejected with diagnostics") {
  json j = load_json_file(data_path("k2.json"));
  json bad = j;
  bad["left"][0][2] = 9;  // index out of range
  CHECK_THROWS_WITH_AS(dialgebra_from_json(bad), doctest::Contains("out of range"),
                       ToolkitError);
  json dup = j;
  dup["left"].push_back(dup["left"][0]);
  CHECK_THROWS_WITH_AS(dialgebra_from_json(dup), doctest::Contains("duplicate"),
                       ToolkitError);
  json nobasis = j;
  nobasis.erase("basis");
  CHECK_THROWS_AS(dialgebra_from_json(nobasis), ToolkitError);
  CHECK_THROWS_WITH_AS(load_json_file(data_path("nonexistent.json")),
                       doctest::Contains("MalformedInput"), ToolkitError);
}

TEST_CASE("schema validation") {
  json schema = load_json_file(data_path("report.schema.json"));
  json good{{"command", "dialg check"},
            {"version", "0.0.0"},
            {"inputs", json::array({json{{"name", "k2.json"}, {"digest", "abc"}}})},
            {"checks", json::array({json{{"name", "x"}, {"pass", true}, {"detail", ""}}})},
            {"pass", true},
            {"elapsed_ms", 12}};
  CHECK(schema_violation(schema, good).empty());

  json missing = good;
  missing.erase("pass");
  CHECK(schema_violation(schema, missing).find("pass") != std::string::npos);

  json wrong_type = good;
  wrong_type["elapsed_ms"] = "slow";
  CHECK(!schema_violation(schema, wrong_type).empty());

  json bad_item = good;
  bad_item["checks"][0]["pass"] = "yes";
  CHECK(!schema_violation(schema, bad_item).empty());
}

TEST_CASE("cli: reports validate against the bundled schema and carry facts") {
  json schema = load_json_file(data_path("report.schema.json"));

  CliRun roots = run({"roots", "--type", "A", "--rank", "2", "--a2-classes"});
  CHECK(roots.code == 0);
  json rj = json::parse(roots.out);
  CHECK(schema_violation(schema, rj).empty());
  CHECK(rj["pass"] == true);
  CHECK(rj["payload"]["pair_count"] == 12);
  CHECK(rj["payload"]["class_count"] == 2);
  CHECK(rj["payload"]["positive_count"] == 6);
  CHECK(rj["payload"]["roots"].size() == 6);

  CliRun one_class = run({"roots", "--type", "D", "--rank", "4", "--a2-classes"});
  CHECK(one_class.code == 0);
  json oj = json::parse(one_class.out);
  CHECK(oj["payload"]["class_count"] == 1);
  CHECK(oj["payload"]["negative_count"] == 0);

  CliRun chev = run({"chevalley", "--type", "A", "--rank", "2", "--verify", "full"});
  CHECK(chev.code == 0);
  json cj = json::parse(chev.out);
  CHECK(schema_violation(schema, cj).empty());
  CHECK(cj["payload"]["dim"] == 8);
  CHECK(cj["payload"]["digest"].is_string());
}

TEST_CASE("cli: exit codes separate check failures from malformed input") {
  CHECK(run({"dialg", "check", "--input", data_path("k2.json"), "--axioms", "all"}).code == 0);
  CHECK(run({"dialg", "check", "--input", data_path("diff3.json"), "--axioms", "ass"}).code == 0);

  // A corrupted scalar away from the bar-unit: axioms fail with a witness.
  json bad = load_json_file(data_path("k2.json"));
  bad["left"][3] = json::array({1, 1, 1, "2/1"});
  std::string bad_path = tmp_path("bad_ass.json");
  save_json_file(bad_path, bad);
  CliRun failing = run({"dialg", "check", "--input", bad_path, "--axioms", "ass"});
  CHECK(failing.code == 1);
  json fj = json::parse(failing.out);
  CHECK(fj["pass"] == false);
  bool witnessed = false;
  for (const auto& c : fj["checks"])
    if (c["pass"] == false && c["detail"].get<std::string>().find("!=") != std::string::npos)
      witnessed = true;
  CHECK(witnessed);
  std::remove(bad_path.c_str());

  CHECK(run({"dialg", "check", "--input", tmp_path("nonexistent.json")}).code == 2);
  CHECK(run({"dialg", "check", "--input", data_path("k2.json"), "--axioms", "bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"roots", "--type", "B", "--rank", "2"}).code == 2);
  CHECK(run({"roots", "--type", "A", "--rank", "1"}).code == 2);
  CHECK(run({"leib", "check"}).code == 2);  // neither --input nor --what
}

TEST_CASE("cli: leib computations on built and file inputs") {
  CliRun hom = run({"leib", "homology", "--degree", "2", "--dialgebra", data_path("k2.json"),
                    "--what", "sl", "--n", "3"});
  CHECK(hom.code == 0);
  json hj = json::parse(hom.out);
  CHECK(hj["payload"]["dim"] == 0);

  CliRun uce = run({"leib", "uce", "--what", "sl", "--n", "3", "--dialgebra",
                    data_path("k2.json")});
  CHECK(uce.code == 0);
  json uj = json::parse(uce.out);
  CHECK(uj["payload"]["total_dim"] == 16);
  CHECK(uj["payload"]["kernel_dim"] == 0);

  // A Leibniz algebra from a file: write sl(3,K2) out and check it back in.
  MatrixLeibnizAlgebra sl = build_sl(3, fixtures::k2());
  std::string lpath = tmp_path("sl3.json");
  save_json_file(lpath, leibniz_to_json(sl.carrier));
  CliRun chk = run({"leib", "check", "--input", lpath});
  CHECK(chk.code == 0);
  json kj = json::parse(chk.out);
  CHECK(kj["payload"]["perfect"] == true);
  CHECK(kj["payload"]["lie"] == false);
  CHECK(kj["payload"]["center_dim"] == 0);
  std::remove(lpath.c_str());
}

TEST_CASE("cli: build, recognize, and roundtrip compose through files") {
  std::string out = tmp_path("built_sl3.json");
  std::string side = tmp_path("built_sl3.emb.json");
  CliRun built = run({"build", "--what", "sl", "--n", "3", "--dialgebra",
                      data_path("k2.json"), "--out", out});
  CHECK(built.code == 0);

  json side_j = load_json_file(side);
  CHECK(side_j.contains("e"));
  CHECK(side_j.contains("H"));
  CHECK(side_j["roots"] == "A2");
  CHECK(side_j["labels"].size() == 16);

  std::string rpath = tmp_path("recovered.json");
  std::string report_path = tmp_path("rec_report.json");
  CliRun rec = run({"recognize", "--algebra", out, "--embedding", side, "--roots", "A2",
                    "--out", rpath, "--report", report_path});
  CHECK(rec.code == 0);
  json report = load_json_file(report_path);
  CHECK(schema_violation(load_json_file(data_path("report.schema.json")), report).empty());
  CHECK(report["pass"] == true);
  CHECK(report["payload"]["R_dim"] == 2);
  CHECK(report["inputs"].size() == 2);

  Dialgebra rec_R = dialgebra_from_json(load_json_file(rpath));
  CHECK(rec_R.dim == 2);
  CHECK(check_alternative(rec_R).pass());

  // Recognize must reject an embedding whose vectors do not close correctly.
  json bad_emb = load_json_file(side);
  json scaled = json::array();
  for (const auto& c : bad_emb["e"]["a1"])
    scaled.push_back(rational_str(parse_rational(c.get<std::string>()) * 7));
  bad_emb["e"]["a1"] = scaled;
  std::string bad_emb_path = tmp_path("bad_emb.json");
  save_json_file(bad_emb_path, bad_emb);
  CliRun broken = run({"recognize", "--algebra", out, "--embedding", bad_emb_path,
                       "--roots", "A2"});
  CHECK(broken.code == 1);
  CHECK(json::parse(broken.out)["pass"] == false);
  std::remove(bad_emb_path.c_str());

  CliRun rt = run({"roundtrip", "--what", "sl", "--n", "3", "--dialgebra",
                   data_path("k2.json"), "--report", "json"});
  CHECK(rt.code == 0);
  json tj = json::parse(rt.out);
  CHECK(tj["pass"] == true);
  CHECK(tj["payload"]["R_dim"] == 2);

  std::remove(out.c_str());
  std::remove(side.c_str());
  std::remove(rpath.c_str());
  std::remove(report_path.c_str());
}

TEST_CASE("embedding serialization round-trips against the root-system names") {
  RootSystem rs = build_root_system(SLType::A, 2);
  MatrixLeibnizAlgebra sl = build_sl(3, fixtures::k2());
  Embedding emb = sl_embedding(sl, rs);
  json j = embedding_to_json(emb, rs);
  Embedding back = embedding_from_json(j, rs, sl.carrier.dim);
  CHECK(back.e == emb.e);
  CHECK(back.h == emb.h);

  json missing = j;
  missing["e"].erase("a1");
  CHECK_THROWS_WITH_AS(embedding_from_json(missing, rs, sl.carrier.dim),
                       doctest::Contains("missing root"), ToolkitError);
  json unknown = j;
  unknown["e"]["zz"] = j["e"]["a1"];
  CHECK_THROWS_WITH_AS(embedding_from_json(unknown, rs, sl.carrier.dim),
                       doctest::Contains("unknown root"), ToolkitError);
  json short_vec = j;
  short_vec["e"]["a1"] = json::array({"1/1"});
  CHECK_THROWS_AS(embedding_from_json(short_vec, rs, sl.carrier.dim), ToolkitError);
  json bad_h = j;
  bad_h["H"] = json::array();
  CHECK_THROWS_WITH_AS(embedding_from_json(bad_h, rs, sl.carrier.dim),
                       doctest::Contains("rank"), ToolkitError);
}

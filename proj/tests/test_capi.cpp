#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <varkit/varkit.h>

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string group_file(const std::string& name) {
  return read_file(std::string(VARKIT_DATA_DIR) + "/groups/" + name);
}

struct Rep {
  vk_rep* p = nullptr;
  ~Rep() { vk_rep_free(p); }
};

struct Str {
  char* s = nullptr;
  ~Str() { vk_string_free(s); }
  std::string view() const { return s ? std::string(s) : std::string(); }
};

} // namespace

TEST_CASE("version and null handling") {
  CHECK(std::strlen(vk_version()) > 0);
  CHECK(vk_rep_parse(nullptr, nullptr) == VK_ERR_NULL);
  CHECK(std::string(vk_last_error()).find("null") != std::string::npos);
}

TEST_CASE("representation handles") {
  Rep rep;
  REQUIRE(vk_rep_parse(group_file("s3.grp").c_str(), &rep.p) == VK_OK);

  int32_t dim = 0, gens = 0;
  CHECK(vk_rep_dim(rep.p, &dim) == VK_OK);
  CHECK(dim == 3);
  CHECK(vk_rep_generator_count(rep.p, &gens) == VK_OK);
  CHECK(gens == 2);

  int64_t order = 0;
  CHECK(vk_rep_group_order(rep.p, &order) == VK_OK);
  CHECK(order == 6);

  Str text;
  REQUIRE(vk_rep_format(rep.p, &text.s) == VK_OK);
  Rep again;
  REQUIRE(vk_rep_parse(text.s, &again.p) == VK_OK);
  Str text2;
  REQUIRE(vk_rep_format(again.p, &text2.s) == VK_OK);
  CHECK(text.view() == text2.view());

  Rep bad;
  CHECK(vk_rep_parse("kind=matrix\nfield=Q\n", &bad.p) == VK_ERR_PARSE);
  CHECK(std::strlen(vk_last_error()) > 0);
}

TEST_CASE("triangular product through the handle API") {
  Rep k1a, k1b, prod;
  std::string k1 = read_file(std::string(VARKIT_DATA_DIR) + "/reps/k1.rep");
  REQUIRE(vk_rep_parse(k1.c_str(), &k1a.p) == VK_OK);
  REQUIRE(vk_rep_parse(k1.c_str(), &k1b.p) == VK_OK);
  REQUIRE(vk_rep_triangular_product(k1a.p, k1b.p, &prod.p) == VK_OK);
  int32_t dim = 0;
  CHECK(vk_rep_dim(prod.p, &dim) == VK_OK);
  CHECK(dim == 2);
  Str text;
  REQUIRE(vk_rep_format(prod.p, &text.s) == VK_OK);
  CHECK(text.view().find("gen 1 1 ; 0 1") != std::string::npos);
}

TEST_CASE("magnus reports") {
  Str expand;
  REQUIRE(vk_magnus_expand("comm(x1,x2)", 2, 2, &expand.s) == VK_OK);
  CHECK(expand.view().find("a1*a2\t1") != std::string::npos);
  CHECK(expand.view().find("a2*a1\t-1") != std::string::npos);

  int32_t in_dn = -1;
  Str test;
  REQUIRE(vk_magnus_test("comm(x1,x2)", 2, 2, 2, &in_dn, &test.s) == VK_OK);
  CHECK(in_dn == 1);
  CHECK(test.view().find("in_D_n\ttrue") != std::string::npos);
  CHECK(test.view().find("dimension_degree\t2") != std::string::npos);

  REQUIRE(vk_magnus_test("x1", 1, 1, 2, &in_dn, &test.s) == VK_OK);
  CHECK(in_dn == 0);

  CHECK(vk_magnus_expand("z1", 2, 2, &expand.s) == VK_ERR_PARSE);
  CHECK(vk_magnus_expand("x1", 2, 30, &expand.s) == VK_ERR_CAP);
  CHECK(vk_magnus_expand("x3", 2, 2, &expand.s) == VK_ERR_INVALID);
}

TEST_CASE("dimsub and verbal reports") {
  Rep c2;
  REQUIRE(vk_rep_parse(group_file("c2.grp").c_str(), &c2.p) == VK_OK);
  Str z_report;
  REQUIRE(vk_dimsub_report(c2.p, "Z", 2, 0, &z_report.s) == VK_OK);
  CHECK(z_report.view().find("1\t2") != std::string::npos);
  CHECK(z_report.view().find("2\t1") != std::string::npos);
  Str q_report;
  REQUIRE(vk_dimsub_report(c2.p, "Q", 2, 0, &q_report.s) == VK_OK);
  CHECK(q_report.view().find("2\t2") != std::string::npos);
  Str bad;
  CHECK(vk_dimsub_report(c2.p, "F4", 2, 0, &bad.s) == VK_ERR_INVALID);

  Rep s3;
  REQUIRE(vk_rep_parse(group_file("s3.grp").c_str(), &s3.p) == VK_OK);
  Str verbal;
  REQUIRE(vk_verbal_report(s3.p, "Q", "x1*x2 - x2*x1", &verbal.s) == VK_OK);
  CHECK(verbal.view().find("ideal_dim\t4") != std::string::npos);
  CHECK(verbal.view().find("D_sigma_order\t3") != std::string::npos);
  CHECK(verbal.view().find("quotient_abelian\ttrue") != std::string::npos);
}

TEST_CASE("identities and checks") {
  std::string algebra = read_file(std::string(VARKIT_DATA_DIR) + "/algebras/scalar1q.alg");
  Str report;
  REQUIRE(vk_identities_of_algebra(algebra.c_str(), 2, &report.s) == VK_OK);
  CHECK(report.view().find("dimension\t1") != std::string::npos);
  CHECK(report.view().find("basis\tx1*x2 - x2*x1") != std::string::npos);

  Rep ut2;
  std::string rep_text = read_file(std::string(VARKIT_DATA_DIR) + "/reps/ut2f2.rep");
  REQUIRE(vk_rep_parse(rep_text.c_str(), &ut2.p) == VK_OK);

  Str env_report;
  REQUIRE(vk_identities_of_rep(ut2.p, 2, &env_report.s) == VK_OK);
  CHECK(env_report.view().find("enveloping_dim\t2") != std::string::npos);
  CHECK(env_report.view().find("dimension\t1") != std::string::npos);

  int32_t holds = -1;
  Str check1;
  REQUIRE(vk_check_identity(ut2.p, "action:(y1-1)(y2-1)", &holds, &check1.s) == VK_OK);
  CHECK(holds == 1);
  Str check2;
  REQUIRE(vk_check_identity(ut2.p, "action:(y1-1)", &holds, &check2.s) == VK_OK);
  CHECK(holds == 0);
  CHECK(check2.view().find("witness") != std::string::npos);
  Str check3;
  CHECK(vk_check_identity(ut2.p, "nonsense", &holds, &check3.s) == VK_ERR_PARSE);
}

TEST_CASE("limits tighten but never loosen") {
  CHECK(vk_tighten_limit("bogus", 5) == VK_ERR_INVALID);
  CHECK(vk_tighten_limit("group", 0) == VK_ERR_INVALID);
  REQUIRE(vk_tighten_limit("group", 3) == VK_OK);
  REQUIRE(vk_tighten_limit("group", 1000000) == VK_OK); // silently kept at 3

  Rep s3;
  REQUIRE(vk_rep_parse(group_file("s3.grp").c_str(), &s3.p) == VK_OK);
  int64_t order = 0;
  CHECK(vk_rep_group_order(s3.p, &order) == VK_ERR_CAP);
}

#include <doctest.h>

#include <filesystem>
#include <functional>

#include "gpcat/io.hpp"
#include "helpers.hpp"

using namespace gpcat;
using namespace testing;

namespace {

std::string fixture(const std::string& rel) { return std::string(GPCAT_FIXTURE_DIR) + "/" + rel; }

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("document parsing") {
  json d = parse_document(
      "# comment\n"
      "top = 1\n"
      "[s]\n"
      "name = \"a \\\"b\\\"\"  # trailing\n"
      "r = -3/4\n"
      "flag = true\n"
      "m = [\n  [1, 2],\n  [\"1/2\", 0], # row\n]\n"
      "\"quoted key\" = []\n"
      "[s.inner]\n"
      "big = 123456789012345678901234567890\n");
  CHECK(d["top"] == 1);
  CHECK(d["s"]["name"] == "a \"b\"");
  CHECK(d["s"]["r"] == "-3/4");
  CHECK(d["s"]["flag"] == true);
  CHECK(d["s"]["m"] == json::parse(R"([[1,2],["1/2",0]])"));
  CHECK(d["s"]["quoted key"] == json::array());
  CHECK(d["s"]["inner"]["big"] == "123456789012345678901234567890");
  CHECK(parse_document(serialize_document(d)) == d);
  CHECK(serialize_document(parse_document(serialize_document(d))) == serialize_document(d));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_message([] { parse_document("a = 1\nb = 1.5\n", "f.toml"); }) ==
        "f.toml:2:6: malformed number (only integers and rationals p/q are allowed)");
  CHECK(error_message([] { parse_document("a = 1\na = 2\n", "f.toml"); }) == "f.toml:2:1: duplicate key 'a'");
  CHECK(error_message([] { parse_document("a = [1, 2\n", "f.toml"); }).rfind("f.toml:2:1: unterminated array", 0) == 0);
  CHECK(error_message([] { parse_document("a = \"x\n", "f.toml"); }) == "f.toml:1:7: unterminated string");
  CHECK(error_message([] { parse_document("[s]\n[s]\n", "f.toml"); }) == "f.toml:2:1: table [s] defined twice");
  CHECK(error_message([] { parse_document("a = yes\n", "f.toml"); }).find("1:5") != std::string::npos);
  CHECK(error_message([] { parse_document("a = 1/0\n", "f.toml"); }).find("malformed rational") != std::string::npos);
  try {
    parse_document("x");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
  }
}

TEST_CASE("category files") {
  auto sq = load_category(fixture("categories/square.toml"));
  CHECK(sq->structurally_equal(*square()));
  CHECK(load_category(fixture("categories/lambda1.toml"))->structurally_equal(*lambda1()));
  CHECK(load_category(fixture("categories/chain3.toml"))->structurally_equal(*chain(3)));
  CHECK(load_category(fixture("categories/cyclic3.toml"))->structurally_equal(*cyclic(3)));
  CHECK(load_category(fixture("categories/loop_x2.toml"))->structurally_equal(*loop_x2()));
  auto l2 = load_category(fixture("categories/lambda2.toml"));
  auto op = opposite(*lambda1());
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) CHECK(l2->hom_dim(x, y) == op->hom_dim(x, y));
  CHECK(load_category(fixture("categories/a2.toml"), Field::prime(5))->field() == Field::prime(5));
  CHECK(load_category(fixture("categories/a2_f2.toml"))->field() == Field::prime(2));

  json doc = category_to_document(*sq);
  auto again = category_from_document(parse_document(serialize_document(doc)));
  CHECK(again->structurally_equal(*sq));
  auto rat = make_category({"x"}, {{"t", "x", "x"}}, {{{1, "t*t*t"}}});
  CHECK(category_from_document(parse_document(serialize_document(category_to_document(*rat))))->structurally_equal(*rat));

  CHECK_THROWS_AS(category_from_document(parse_document("[category]\nobjects = [\"a\"]\narrows = [[\"f\", \"a\", \"b\"]]\n")),
                  Error);
  CHECK_THROWS_AS(category_from_document(parse_document("[category]\nobjects = [\"a\"]\nextra = 1\n")), Error);
  CHECK_THROWS_AS(category_from_document(parse_document("[category]\nobjects = [\"a\"]\narrows = [[\"x\", \"a\", \"a\"]]\n")),
                  Error);
  CHECK_THROWS_AS(load_category(fixture("categories/missing.toml")), Error);
}

TEST_CASE("representation files") {
  auto s1 = load_representation(fixture("representations/a2_simple1.toml"));
  CHECK(s1.rep.module() == simple(a2(), 0));
  CHECK(s1.files.size() == 2);
  auto sum = load_representation(fixture("representations/a2_sum.toml"));
  CHECK(sum.rep.module() == module_from_rows(a2(), {1, 2}, {{{1}, {0}}}));
  auto right = load_representation(fixture("representations/a2_right_simple2.toml"));
  CHECK(right.right);
  CHECK(right.rep.module() == simple(opposite(*a2()), 1));

  auto p1 = load_representation(fixture("representations/discrepancy_lambda1.toml"));
  CHECK(p1.rep.module() == discrepancy_module().module());
  CHECK(p1.files.size() == 3);
  auto p2 = load_representation(fixture("representations/discrepancy_lambda2.toml"));
  CHECK(p2.rep.module() == p1.rep.swapped(p2.rep.total_ptr()).module());

  for (const char* name : {"a2_simple1", "a2_sum", "a2_right_simple2", "discrepancy_lambda1", "a2_over_a2", "loop_free"}) {
    const std::string path = fixture(std::string("representations/") + name + ".toml");
    auto loaded = load_representation(path);
    json doc = representation_to_document(loaded.rep, loaded.category_path, loaded.base_path, loaded.right);
    auto back = representation_from_document(parse_document(serialize_document(doc)),
                                             std::filesystem::path(path).parent_path().string());
    CHECK(back.rep.module() == loaded.rep.module());
    CHECK(back.right == loaded.right);
  }

  const std::string dir = std::string(GPCAT_FIXTURE_DIR) + "/representations";
  auto load = [&](const std::string& text) { return representation_from_document(parse_document(text), dir); };
  const std::string head = "[representation]\ncategory = \"../categories/a2.toml\"\n";
  CHECK(error_message([&] { load(head + "[dims]\n1 = 1\n2 = 1\n[arrows]\na = [[1, 0]]\n"); }) ==
        "[arrows] a: expected 1 x 1, row 1 has the wrong length");
  CHECK_THROWS_AS(load(head + "[dims]\n3 = 1\n"), Error);
  CHECK_THROWS_AS(load(head + "[dims]\n1 = 1\n[arrows]\nq = []\n"), Error);
  CHECK_THROWS_AS(load(head + "[dims]\n1 = 1\n[base_arrows]\n\"a@1\" = []\n"), Error);
  CHECK_THROWS_AS(load(head + "side = \"up\"\n"), Error);
  auto lp = [&](const std::string& text) {
    return representation_from_document(parse_document("[representation]\ncategory = \"../categories/loop_x2.toml\"\n" + text), dir);
  };
  try {
    lp("[dims]\n0 = 1\n[arrows]\nx = [[1]]\n");
    FAIL("relation violation accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }
  CHECK(lp("[dims]\n0 = 1\n").rep.total_dim() == 1);
}

TEST_CASE("digests") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "chevalley/cli.hpp"

using Json = nlohmann::json;

namespace {

/// Validator for the schema subset used by schemas/report.json:
/// type, enum, pattern, required, properties, additionalProperties, items, $ref.
class Validator {
 public:
  explicit Validator(Json schema) : root_(std::move(schema)) {}

  bool validate(const Json& v, std::string& why) const { return check(v, root_, "$", why); }

 private:
  bool type_ok(const Json& v, const std::string& t) const {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    return false;
  }

  bool check(const Json& v, const Json& s, const std::string& path, std::string& why) const {
    if (s.contains("$ref")) {
      const std::string ref = s["$ref"];
      return check(v, root_["definitions"][ref.substr(ref.rfind('/') + 1)], path, why);
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || type_ok(v, t);
      } else {
        ok = type_ok(v, s["type"]);
      }
      if (!ok) return fail(why, path + ": wrong type");
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
      return fail(why, path + ": not in enum");
    if (s.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
      return fail(why, path + ": pattern mismatch");
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& k : s["required"])
          if (!v.contains(k)) return fail(why, path + ": missing " + k.get<std::string>());
      for (const auto& [k, sub] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(k)) {
          if (!check(sub, s["properties"][k], path + "." + k, why)) return false;
        } else if (s.value("additionalProperties", true) == false) {
          return fail(why, path + ": unexpected key " + k);
        }
      }
    }
    if (v.is_array() && s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!check(v[i], s["items"], path + "[" + std::to_string(i) + "]", why)) return false;
    return true;
  }

  static bool fail(std::string& why, const std::string& msg) {
    why = msg;
    return false;
  }

  Json root_;
};

Validator load_validator() {
  std::ifstream in(SCHEMA_PATH);
  REQUIRE(in.good());
  return Validator(Json::parse(in));
}

struct Result {
  int code;
  std::string out, err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = chev::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(cli({"order", "--type", "A2", "--q", "2"}).code == 0);
  CHECK(cli({"check", "jacobi", "--type", "G2"}).code == 0);
  CHECK(cli({"order", "--type", "A2"}).code == 2);
  CHECK(cli({"order", "--type", "Z3", "--q", "2"}).code == 2);
  CHECK(cli({"order", "--type", "A2", "--q", "6"}).code == 2);
  CHECK(cli({"order", "--type", "A2", "--q", "2", "--nope"}).code == 2);
  CHECK(cli({"bruhat", "--type", "A2", "--q", "3", "--word", "E:a9:1"}).code == 2);
  CHECK(cli({"bruhat", "--type", "A2", "--q", "3", "--word", "n:a1:0"}).code == 2);
  CHECK(cli({"commutator", "--type", "A2", "--x", "a1", "--y", "-a1"}).code == 2);
  CHECK(cli({"check", "hall", "--type", "B2"}).code == 2);
  CHECK(cli({"check", "frobnicate", "--type", "A2"}).code == 2);
  CHECK(cli({"enumerate", "--type", "A3", "--q", "3"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("cli simplicity report follows the exception list") {
  const auto r = cli({"check", "simplicity", "--type", "B2", "--q", "2", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["simple"] == false);
  CHECK(j["exception_listed"] == true);
  CHECK(j["derived_order"] == "360");
}

TEST_CASE("cli order report") {
  const Json j = Json::parse(cli({"order", "--type", "A2", "--q", "2", "--format", "json"}).out);
  CHECK(j["order"] == "168");
  CHECK(j["enumerated_order"] == "168");
  CHECK(j["inputs"]["type"] == "A2");
}

TEST_CASE("cli output is deterministic for a fixed seed") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bruhat", "--type", "B2", "--q", "5", "--word", "E:-a1-a2:2,n:a1,h:a2:3,E:-a2:1", "--strategy", "both",
            "--seed", "11", "--format", "json"},
           {"commutator", "--type", "G2", "--x", "a1", "--y", "a1+a2", "--q", "5", "--seed", "4"},
           {"check", "steinberg", "--type", "A2", "--field", "Q", "--seed", "9", "--format", "json"}}) {
    const auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli json reports validate against the schema") {
  const Validator v = load_validator();
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"info", "--type", "G2"},
           {"order", "--type", "A2", "--q", "2"},
           {"order", "--type", "E6", "--q", "2"},
           {"enumerate", "--type", "A1", "--q", "3", "--cells"},
           {"bruhat", "--type", "A2", "--q", "3", "--word", "E:α1:1,n:α2,E:-α1:2", "--strategy", "both"},
           {"bruhat", "--type", "A2", "--field", "F4", "--word", "E:-a1:1,n:a2"},
           {"commutator", "--type", "G2", "--x", "a1", "--y", "a2"},
           {"constants", "--type", "A3", "--scheme", "extraspecial"},
           {"check", "jacobi", "--type", "D4"},
           {"check", "steinberg", "--type", "A2", "--q", "4"},
           {"check", "poincare", "--type", "B3", "--q", "3"},
           {"check", "hall", "--type", "A3", "--orientation", "2>1,2>3"},
           {"check", "simplicity", "--type", "A1", "--q", "2"}}) {
    auto full = args;
    full.insert(full.end(), {"--format", "json"});
    const auto r = cli(full);
    CAPTURE(args[0]);
    CAPTURE(r.err);
    REQUIRE(r.code == 0);
    std::string why;
    const bool ok = v.validate(Json::parse(r.out), why);
    CAPTURE(why);
    CHECK(ok);
  }
}

TEST_CASE("schema rejects malformed reports") {
  const Validator v = load_validator();
  std::string why;
  Json good = Json::parse(cli({"order", "--type", "A1", "--q", "3", "--format", "json"}).out);
  CHECK(v.validate(good, why));
  Json bad = good;
  bad["order"] = 12;
  CHECK_FALSE(v.validate(bad, why));
  bad = good;
  bad.erase("ok");
  CHECK_FALSE(v.validate(bad, why));
  bad = good;
  bad["surprise"] = true;
  CHECK_FALSE(v.validate(bad, why));
}

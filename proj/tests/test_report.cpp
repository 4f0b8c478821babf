#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qeuler/errors.hpp"
#include "qeuler/report.hpp"

using namespace qeuler;

namespace {

Report full_report() {
    Report r;
    r.subject = "grassmannian";
    r.description = "QH*(G_{2,4}) over Lambda";
    r.dimension = 6;
    r.basis = {"1", "x1", "x2", "x1^2", "x1*x2", "x2^2"};
    r.omega = "6*x2^2 + 2*q";
    r.omega_unit = true;
    r.omega_certificate = "det = 65536*q^6";
    r.semisimple_omega = true;
    r.semisimple_trace = true;
    r.witness = "x1";
    r.hessian = "-6*x2^2 - 2*q";
    r.epsilon = "-1";
    r.paper_sign = 1;
    r.specialized_at = "1";
    r.extras = {{"functional sign", "1"}, {"q weight", "8"}};
    r.timings_ms = {{"build", 12}, {"verify", 3}};
    return r;
}

Report minimal_report() {
    Report r;
    r.subject = "custom";
    r.description = "dry run";
    r.dimension = 2;
    r.basis = {"1", "x"};
    r.omega = "(not computed)";
    return r;
}

}  // namespace

TEST_CASE("text rendering includes every populated field") {
    std::string t = full_report().to_text();
    CHECK(t.find("subject: grassmannian\n") != std::string::npos);
    CHECK(t.find("description: QH*(G_{2,4}) over Lambda\n") != std::string::npos);
    CHECK(t.find("dimension: 6\n") != std::string::npos);
    CHECK(t.find("basis: 1 x1 x2 x1^2 x1*x2 x2^2\n") != std::string::npos);
    CHECK(t.find("omega: 6*x2^2 + 2*q\n") != std::string::npos);
    CHECK(t.find("omega is a unit: yes (det = 65536*q^6)\n") != std::string::npos);
    CHECK(t.find("specialized at: q = 1\n") != std::string::npos);
    CHECK(t.find("semisimple (characteristic element test): yes\n") != std::string::npos);
    CHECK(t.find("semisimple (trace form test): yes\n") != std::string::npos);
    CHECK(t.find("witness: x1\n") != std::string::npos);
    CHECK(t.find("hessian class: -6*x2^2 - 2*q\n") != std::string::npos);
    CHECK(t.find("epsilon: -1\n") != std::string::npos);
    CHECK(t.find("reference sign (-1)^C(n,2): 1\n") != std::string::npos);
    CHECK(t.find("functional sign: 1\n") != std::string::npos);
    CHECK(t.find("timings: build 12 ms, verify 3 ms\n") != std::string::npos);
}

TEST_CASE("text rendering omits absent phases") {
    std::string t = minimal_report().to_text();
    CHECK(t.find("omega: (not computed)") != std::string::npos);
    CHECK(t.find("unit") == std::string::npos);
    CHECK(t.find("semisimple") == std::string::npos);
    CHECK(t.find("witness") == std::string::npos);
    CHECK(t.find("hessian") == std::string::npos);
    CHECK(t.find("epsilon") == std::string::npos);
    CHECK(t.find("timings") == std::string::npos);
    CHECK(t.find("specialized") == std::string::npos);
}

TEST_CASE("json round trip preserves every field") {
    Report r = full_report();
    Report back = Report::from_json_text(r.to_json_text());
    CHECK(back == r);
}

TEST_CASE("json round trip of a minimal report") {
    Report r = minimal_report();
    std::string j = r.to_json_text();
    CHECK(Report::from_json_text(j) == r);
    // absent optionals produce no keys at all
    CHECK(j.find("omega_unit") == std::string::npos);
    CHECK(j.find("semisimple_omega") == std::string::npos);
    CHECK(j.find("witness") == std::string::npos);
    CHECK(j.find("extras") == std::string::npos);
    CHECK(j.find("timings_ms") == std::string::npos);
}

TEST_CASE("json parse failures") {
    CHECK_THROWS_WITH_AS(Report::from_json_text("this is not json"),
                         doctest::Contains("invalid report JSON"), ValidationError);
    // well-formed JSON but missing required fields
    CHECK_THROWS_WITH_AS(Report::from_json_text("{\"subject\": \"x\"}"),
                         doctest::Contains("malformed field"), ValidationError);
    // wrong type on a required field
    CHECK_THROWS_WITH_AS(
        Report::from_json_text(
            "{\"subject\":\"s\",\"description\":\"d\",\"dimension\":\"six\","
            "\"basis\":[],\"omega\":\"w\"}"),
        doctest::Contains("malformed field"), ValidationError);
}

TEST_CASE("equality is field-wise") {
    Report a = full_report();
    Report b = full_report();
    CHECK(a == b);
    b.paper_sign = -1;
    CHECK_FALSE(a == b);
    b = full_report();
    b.extras.emplace_back("note", "changed");
    CHECK_FALSE(a == b);
}

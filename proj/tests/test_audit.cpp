#include <doctest.h>

#include <nlohmann/json.hpp>

#include <fstream>

#include "cyclaudit/audit.hpp"

using namespace cyclaudit;

namespace {

AuditConfig small_config() {
    AuditConfig cfg;
    cfg.sections = {"classical"};
    cfg.n_max = 3;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    AuditConfig cfg;
    cfg.sections = {};
    CHECK_THROWS_AS(run_audit(cfg), ConfigError);
    cfg.sections = {"nonsense"};
    CHECK_THROWS_AS(run_audit(cfg), ConfigError);
    cfg = small_config();
    cfg.n_max = 17;
    CHECK_THROWS_AS(run_audit(cfg), ConfigError);
    cfg = small_config();
    cfg.weight_min = 5;
    CHECK_THROWS_AS(run_audit(cfg), ConfigError);
    cfg = small_config();
    cfg.q_mode = "guess";
    CHECK_THROWS_AS(run_audit(cfg), ConfigError);
}

TEST_CASE("classical section: bernoulli verifies, the others carry known defects") {
    const AuditReport report = run_audit(small_config());
    CHECK(report.verified > 0);
    CHECK(report.defect > 0);
    CHECK(report.error == 0);
    bool bern_zero_seen = false, cm_defect_seen = false;
    for (const CheckEntry& e : report.checks) {
        if (e.name == "cyclic-defect" && e.params.find("family=bernoulli") != std::string::npos) {
            CHECK(e.status == "verified");
            bern_zero_seen = true;
        }
        if (e.name == "cyclic-defect" &&
            e.params.find("family=centered_monomial n=2") != std::string::npos) {
            CHECK(e.status == "defect");
            CHECK(e.known);
            CHECK(e.residual == "1/8*r^2*s + 1/8*r*s^2 - 1/4*r*s");
            cm_defect_seen = true;
        }
    }
    CHECK(bern_zero_seen);
    CHECK(cm_defect_seen);
    // checks are sorted by (name, params)
    for (std::size_t i = 1; i < report.checks.size(); ++i) {
        const auto& a = report.checks[i - 1];
        const auto& b = report.checks[i];
        CHECK(std::tie(a.name, a.params) <= std::tie(b.name, b.params));
    }
}

TEST_CASE("exit code contract") {
    AuditReport report = run_audit(small_config());
    CHECK(exit_code_for(report) == 1);  // known defects still fail without the flag
    AuditConfig cfg = small_config();
    cfg.expect_known = true;
    report = run_audit(cfg);
    CHECK(exit_code_for(report) == 0);  // forgiven when expected
    // a synthetic unknown defect always fails
    CheckEntry bad;
    bad.name = "zz-synthetic";
    bad.status = "defect";
    report.checks.push_back(bad);
    CHECK(exit_code_for(report) == 1);
    // errors alone map to 3
    AuditReport errs;
    errs.config.expect_known = false;
    CheckEntry e;
    e.name = "x";
    e.status = "error";
    errs.checks.push_back(e);
    errs.error = 1;
    CHECK(exit_code_for(errs) == 3);
}

TEST_CASE("JSON report: schema and byte-identical determinism") {
    AuditConfig cfg = small_config();
    cfg.expect_known = true;
    const AuditReport r1 = run_audit(cfg);
    const AuditReport r2 = run_audit(cfg);
    const std::string j1 = emit_report(r1, true);
    const std::string j2 = emit_report(r2, true);
    CHECK(j1 == j2);

    const auto doc = nlohmann::json::parse(j1);
    CHECK(doc.contains("version"));
    CHECK(doc.contains("config"));
    CHECK(doc.contains("checks"));
    CHECK(doc.contains("summary"));
    CHECK(doc["summary"]["verified"].get<int>() == r1.verified);
    CHECK(doc["summary"]["defect"].get<int>() == r1.defect);
    CHECK(doc["summary"]["error"].get<int>() == r1.error);
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("params"));
        CHECK(c.contains("status"));
        CHECK(c.contains("residual"));
        CHECK(c.contains("elapsed_ms"));
        const std::string status = c["status"].get<std::string>();
        CHECK((status == "verified" || status == "defect" || status == "error"));
        CHECK(c["elapsed_ms"].get<double>() == 0.0);  // timing off by default
    }
    // text rendering carries the same totals
    const std::string text = emit_report(r1, false);
    CHECK(text.find("summary: verified=" + std::to_string(r1.verified)) != std::string::npos);
}

TEST_CASE("known-discrepancy manifest matches the shipped document") {
    std::ifstream in(std::string(CYCLAUDIT_SOURCE_DIR) + "/share/known_discrepancies.json");
    REQUIRE(in.good());
    nlohmann::json doc;
    in >> doc;
    const auto& table = known_discrepancies();
    REQUIRE(doc["discrepancies"].size() == table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& entry = doc["discrepancies"][i];
        CHECK(entry["id"].get<std::string>() == table[i].id);
        CHECK(entry["check_prefix"].get<std::string>() == table[i].check_prefix);
        CHECK(entry["params_required"].get<std::string>() == table[i].params_required);
        CHECK(entry["params_forbidden"].get<std::string>() == table[i].params_forbidden);
        CHECK(entry["paper_claim"].get<std::string>() == table[i].paper_claim);
    }
}

TEST_CASE("known matching rules") {
    const auto& table = known_discrepancies();
    const auto* cyc = &table[0];
    CHECK(matches_known(*cyc, "cyclic-defect", "family=euler n=2"));
    CHECK(matches_known(*cyc, "cyclic-defect-sample", "family=euler n=2 point=..."));
    CHECK_FALSE(matches_known(*cyc, "cyclic-defect", "family=bernoulli n=2"));
    CHECK_FALSE(matches_known(*cyc, "q-cyclic-defect", "family=euler"));
}

#include <cmath>
#include <doctest.h>

#include "orthospeed/run_config.hpp"

using namespace orthospeed;
using nlohmann::json;

namespace {

json minimal() {
    return json{{"model", {{"g", 0.1}, {"delta", 1.0}}},
                {"field", {{"kind", "fock"}, {"n", 1}}}};
}

}  // namespace

TEST_CASE("minimal config fills in the documented defaults") {
    const RunConfig cfg = parse_run_config(minimal(), false);
    CHECK(cfg.model.g == 0.1);
    CHECK(cfg.model.delta == 1.0);
    CHECK(cfg.field.kind == FieldKind::fock);
    CHECK(cfg.field.n == 1);
    CHECK(cfg.theta == doctest::Approx(std::atan(1.0)).epsilon(1e-15));
    CHECK(cfg.phi == 0.0);
    CHECK(cfg.window.t0 == 0.0);
    CHECK(cfg.window.t1 == 40.0);
    CHECK(cfg.window.dt == 0.005);
    CHECK(cfg.detector.epsilon_orth == 0.02);
    CHECK(cfg.detector.refine_tol == 1e-7);
    CHECK(cfg.engine == Engine::closed_form);
    CHECK(cfg.output.trace_path == "trace.csv");
    CHECK(cfg.output.events_path == "events.csv");
    CHECK_FALSE(cfg.output.plot_path.has_value());
    CHECK_FALSE(cfg.sweep.has_value());
}

TEST_CASE("unknown keys are rejected at every level") {
    json top = minimal();
    top["surprise"] = 1;
    CHECK_THROWS_WITH_AS(parse_run_config(top, false),
                         doctest::Contains("surprise"), domain_error);

    json nested = minimal();
    nested["model"]["gg"] = 0.5;
    CHECK_THROWS_WITH_AS(parse_run_config(nested, false),
                         doctest::Contains("model.gg"), domain_error);

    json field = minimal();
    field["field"]["eta"] = 0.5;  // eta is not a fock parameter
    CHECK_THROWS_AS(parse_run_config(field, false), domain_error);
}

TEST_CASE("field kind dispatch") {
    json bin = minimal();
    bin["field"] = {{"kind", "binomial"}, {"eta", 0.3}};
    const RunConfig cfg = parse_run_config(bin, false);
    CHECK(cfg.field.kind == FieldKind::binomial);
    CHECK(cfg.field.mu == 10);  // default
    CHECK(cfg.field.eta == 0.3);

    json coh = minimal();
    coh["field"] = {{"kind", "coherent_approx"}, {"nbar", 1.5}};
    CHECK(parse_run_config(coh, false).field.nbar == 1.5);

    json missing = minimal();
    missing["field"] = {{"kind", "fock"}};
    CHECK_THROWS_AS(parse_run_config(missing, false), domain_error);

    json unknown = minimal();
    unknown["field"] = {{"kind", "thermal"}, {"n", 1}};
    CHECK_THROWS_AS(parse_run_config(unknown, false), domain_error);
}

TEST_CASE("value validation") {
    json neg = minimal();
    neg["model"]["g"] = -0.2;
    CHECK_THROWS_AS(parse_run_config(neg, false), domain_error);

    json eps = minimal();
    eps["detector"] = {{"epsilon_orth", 0.2}};
    CHECK_THROWS_AS(parse_run_config(eps, false), domain_error);
    eps["detector"] = {{"epsilon_orth", 0.0}};
    CHECK_THROWS_AS(parse_run_config(eps, false), domain_error);

    json win = minimal();
    win["time"] = {{"t0", 5.0}, {"t1", 5.0}};
    CHECK_THROWS_AS(parse_run_config(win, false), domain_error);

    json type = minimal();
    type["model"]["g"] = "fast";
    CHECK_THROWS_AS(parse_run_config(type, false), domain_error);

    json frac = minimal();
    frac["field"]["n"] = 1.5;
    CHECK_THROWS_AS(parse_run_config(frac, false), domain_error);
}

TEST_CASE("engine names") {
    CHECK(engine_from_string("closed_form") == Engine::closed_form);
    CHECK(engine_from_string("oracle") == Engine::oracle);
    CHECK(engine_from_string("both") == Engine::both);
    CHECK_THROWS_AS(engine_from_string("warp"), domain_error);
    for (Engine e : {Engine::closed_form, Engine::oracle, Engine::both})
        CHECK(engine_from_string(engine_to_string(e)) == e);
}

TEST_CASE("dotted-path overrides") {
    json doc = minimal();
    apply_override(doc, "model.g=0.25");
    CHECK(doc["model"]["g"] == 0.25);
    apply_override(doc, "output.trace_path=alt.csv");
    CHECK(doc["output"]["trace_path"] == "alt.csv");
    apply_override(doc, "field.n=5");
    CHECK(doc["field"]["n"] == 5);

    CHECK_THROWS_AS(apply_override(doc, "no-equals-sign"), domain_error);
    CHECK_THROWS_AS(apply_override(doc, "=5"), domain_error);

    // an override inventing a key is still caught by the schema check
    apply_override(doc, "model.typo=1");
    CHECK_THROWS_AS(parse_run_config(doc, false), domain_error);
}

TEST_CASE("sweep section handling") {
    json doc = minimal();
    doc["sweep"] = {{"axis", "delta"}, {"values", {0.3, 0.5, 1.0}}};

    const RunConfig cfg = parse_run_config(doc, true);
    REQUIRE(cfg.sweep.has_value());
    CHECK(cfg.sweep->axis == Axis::delta);
    CHECK(cfg.sweep->values == std::vector<double>{0.3, 0.5, 1.0});
    CHECK(cfg.output.trace_path == "sweep.csv");

    // the same document is invalid for a single run, and vice versa
    CHECK_THROWS_AS(parse_run_config(doc, false), domain_error);
    CHECK_THROWS_AS(parse_run_config(minimal(), true), domain_error);

    json empty = doc;
    empty["sweep"]["values"] = json::array();
    CHECK_THROWS_AS(parse_run_config(empty, true), domain_error);

    json unsorted = doc;
    unsorted["sweep"]["values"] = {1.0, 0.3};
    CHECK_THROWS_AS(parse_run_config(unsorted, true), domain_error);

    json dup = doc;
    dup["sweep"]["values"] = {0.3, 0.3, 0.5};
    const RunConfig deduped = parse_run_config(dup, true);
    CHECK(deduped.sweep->values == std::vector<double>{0.3, 0.5});

    CHECK(cfg.to_sweep_config().values.size() == 3);
    CHECK_THROWS_AS(parse_run_config(minimal(), false).to_sweep_config(),
                    domain_error);
}

TEST_CASE("config echo is canonical and round-trips") {
    json doc = minimal();
    doc["qubit"] = {{"theta", 0.5}};
    doc["engine"] = "both";
    const RunConfig cfg = parse_run_config(doc, false);

    const json echo = config_echo(cfg);
    CHECK(echo["model"]["g"] == 0.1);
    CHECK(echo["qubit"]["theta"] == 0.5);
    CHECK(echo["qubit"]["phi"] == 0.0);  // defaults are materialized
    CHECK(echo["engine"] == "both");
    CHECK(echo["time"]["t1"] == 40.0);

    const RunConfig again = parse_run_config(echo, false);
    CHECK(config_echo(again).dump() == echo.dump());
}

TEST_CASE("binomial sweep config carries the field through") {
    json doc;
    doc["model"] = {{"g", 0.01}, {"delta", 0.3}};
    doc["field"] = {{"kind", "binomial"}, {"mu", 10}, {"eta", 0.001}};
    doc["time"] = {{"t0", 0.0}, {"t1", 100.0}, {"dt", 0.01}};
    doc["sweep"] = {{"axis", "eta"}, {"values", {0.001, 0.8}}};
    const SweepConfig sc = parse_run_config(doc, true).to_sweep_config();
    CHECK(sc.axis == Axis::eta);
    CHECK(sc.field.kind == FieldKind::binomial);
    CHECK(sc.field.mu == 10);
    CHECK(sc.window.t1 == 100.0);
}

#include "topcoh/job.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "topcoh/parse.hpp"

namespace topcoh {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

long to_long(const json& value, const char* what) {
    if (!value.is_number_integer())
        throw InvalidArgumentError(std::string(what) + " must be an integer");
    return value.get<long>();
}

int to_bounded_int(const json& value, const char* what, int lo, int hi) {
    const long v = to_long(value, what);
    if (v < lo || v > hi)
        throw InvalidArgumentError(std::string(what) + " must lie in [" + std::to_string(lo) +
                                   ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

RingPtr ring_from_json(const json& job) {
    if (!job.contains("ring")) throw InvalidArgumentError("job.ring is required");
    const json& j = job["ring"];
    if (!j.is_object() || !j.contains("variables") || !j["variables"].is_array())
        throw InvalidArgumentError("job.ring must be {variables: [names], characteristic?: int}");
    std::vector<std::string> variables;
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw InvalidArgumentError("ring variable names must be strings");
        variables.push_back(v.get<std::string>());
    }
    long characteristic = 0;
    if (j.contains("characteristic"))
        characteristic = to_long(j["characteristic"], "ring.characteristic");
    return make_ring(std::move(variables), characteristic);
}

std::vector<Polynomial> polys_from_json(const json& value, const RingPtr& ring,
                                        const std::string& what) {
    if (!value.is_array())
        throw InvalidArgumentError(what + " must be an array of polynomial strings");
    std::vector<Polynomial> out;
    for (const auto& entry : value) {
        if (!entry.is_string())
            throw InvalidArgumentError(what + " must be an array of polynomial strings");
        out.push_back(parse_polynomial(entry.get<std::string>(), ring));
    }
    return out;
}

Ideal ideal_from_json(const json& value, const RingPtr& ring, const std::string& what) {
    return Ideal(ring, polys_from_json(value, ring, what));
}

Ideal defining_ideal(const json& job, const RingPtr& ring) {
    if (!job.contains("ideal")) throw InvalidArgumentError("job.ideal is required");
    return ideal_from_json(job["ideal"], ring, "job.ideal");
}

// a defaults to the irrelevant maximal ideal.
Ideal support_ideal(const json& job, const RingPtr& ring) {
    if (!job.contains("a")) return irrelevant_ideal(ring);
    return ideal_from_json(job["a"], ring, "job.a");
}

const json* options_of(const json& job) {
    if (!job.contains("options")) return nullptr;
    if (!job["options"].is_object())
        throw InvalidArgumentError("job.options must be an object");
    return &job["options"];
}

MonomialOrder order_from_options(const json& job) {
    const json* options = options_of(job);
    if (options == nullptr || !options->contains("order")) return MonomialOrder::grevlex();
    const json& o = (*options)["order"];
    if (o.is_string() && o.get<std::string>() == "grevlex") return MonomialOrder::grevlex();
    if (o.is_string() && o.get<std::string>() == "lex") return MonomialOrder::lex();
    throw InvalidArgumentError("options.order must be \"grevlex\" or \"lex\"");
}

// User decomposition when provided, otherwise the built-in monomial one.
PrimaryDecomposition decomposition_for(const json& job, const Ideal& I) {
    if (!job.contains("decomposition")) return primary_decomposition(I);
    const json& j = job["decomposition"];
    if (!j.is_array())
        throw InvalidArgumentError(
            "job.decomposition must be an array of {component, prime} objects");
    std::vector<PrimaryComponent> components;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("component") || !entry.contains("prime"))
            throw InvalidArgumentError(
                "job.decomposition must be an array of {component, prime} objects");
        components.push_back({ideal_from_json(entry["component"], I.ring(), "decomposition"),
                              ideal_from_json(entry["prime"], I.ring(), "decomposition")});
    }
    return validate_decomposition(I, std::move(components));
}

// Exact cd table: the dimension oracle when no table is supplied (valid for
// irrelevant a only), otherwise the user's values matched to the primes.
CdTable exact_table_for(const json& job, const CyclicModule& M, const Ideal& a,
                        const PrimaryDecomposition& dec) {
    if (!job.contains("cd_table")) return cd_table_dim_oracle(M, a, dec);
    const json& j = job["cd_table"];
    if (!j.is_array())
        throw InvalidArgumentError("job.cd_table must be an array of {prime, cd} objects");
    std::vector<int> values(dec.components.size(), -1);
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("prime") || !entry.contains("cd"))
            throw InvalidArgumentError("job.cd_table must be an array of {prime, cd} objects");
        const Ideal prime = ideal_from_json(entry["prime"], M.ring, "cd_table.prime");
        const int cd = to_bounded_int(entry["cd"], "cd_table.cd", 0, M.ring->nvars());
        bool found = false;
        for (std::size_t k = 0; k < dec.components.size(); ++k) {
            if (dec.components[k].prime != prime) continue;
            if (values[k] >= 0)
                throw InvalidArgumentError("cd_table lists a prime twice: (" +
                                           entry["prime"].dump() + ")");
            values[k] = cd;
            found = true;
        }
        if (!found)
            throw InvalidArgumentError("cd_table prime is not an associated prime: " +
                                       entry["prime"].dump());
    }
    for (std::size_t k = 0; k < values.size(); ++k)
        if (values[k] < 0) {
            std::string gens;
            for (const auto& g : generator_strings(dec.components[k].prime)) {
                if (!gens.empty()) gens += ", ";
                gens += g;
            }
            throw InvalidArgumentError("cd_table misses the associated prime (" + gens + ")");
        }
    return cd_table_user(M, a, dec, values);
}

ordered_json ring_to_json(const RingPtr& ring) {
    ordered_json out;
    out["variables"] = ring->variables;
    out["characteristic"] = ring->characteristic;
    return out;
}

ordered_json ideal_to_json(const Ideal& I) { return ordered_json(generator_strings(I)); }

ordered_json ideal_list_to_json(const std::vector<Ideal>& ideals) {
    ordered_json out = ordered_json::array();
    for (const auto& I : ideals) out.push_back(ideal_to_json(I));
    return out;
}

ordered_json run_gb(const json& job) {
    const RingPtr ring = ring_from_json(job);
    const MonomialOrder order = order_from_options(job);
    if (!job.contains("ideal")) throw InvalidArgumentError("job.ideal is required");
    const auto basis = buchberger_reduced(polys_from_json(job["ideal"], ring, "job.ideal"), order);
    ordered_json out;
    out["command"] = "gb";
    out["ring"] = ring_to_json(ring);
    out["order"] = order.kind() == MonomialOrder::Kind::Lex ? "lex" : "grevlex";
    ordered_json strings = ordered_json::array();
    for (const auto& g : basis) strings.push_back(g.to_string(order));
    out["basis"] = std::move(strings);
    return out;
}

ordered_json run_dim(const json& job) {
    const RingPtr ring = ring_from_json(job);
    const Ideal I = defining_ideal(job, ring);
    ordered_json out;
    out["command"] = "dim";
    out["ring"] = ring_to_json(ring);
    out["ideal"] = ideal_to_json(I);
    out["dim"] = krull_dim(I);
    return out;
}

ordered_json run_primdec(const json& job) {
    const RingPtr ring = ring_from_json(job);
    const Ideal I = defining_ideal(job, ring);
    const PrimaryDecomposition dec = primary_decomposition(I);
    ordered_json out;
    out["command"] = "primdec";
    out["ring"] = ring_to_json(ring);
    out["ideal"] = ideal_to_json(I);
    ordered_json components = ordered_json::array();
    for (const auto& comp : dec.components) {
        ordered_json entry;
        entry["component"] = ideal_to_json(comp.component);
        entry["prime"] = ideal_to_json(comp.prime);
        components.push_back(std::move(entry));
    }
    out["components"] = std::move(components);
    return out;
}

ordered_json run_att_top(const json& job) {
    const RingPtr ring = ring_from_json(job);
    const CyclicModule M = make_module(defining_ideal(job, ring));
    const Ideal a = support_ideal(job, ring);
    const PrimaryDecomposition dec = decomposition_for(job, M.defining_ideal);
    const auto attached = attached_top(M, a, dec);
    ordered_json out;
    out["command"] = "att-top";
    out["ring"] = ring_to_json(ring);
    out["ideal"] = ideal_to_json(M.defining_ideal);
    out["a"] = ideal_to_json(a);
    out["d"] = M.dimension;
    out["nonvanishing"] = !attached.empty();
    out["attached"] = ideal_list_to_json(attached);
    return out;
}

ordered_json run_ann_top(const json& job) {
    const RingPtr ring = ring_from_json(job);
    const CyclicModule M = make_module(defining_ideal(job, ring));
    const Ideal a = support_ideal(job, ring);
    const PrimaryDecomposition dec = decomposition_for(job, M.defining_ideal);
    const TopCohomologyReport rep = ann_top(M, a, dec);
    if (!rep.nonvanishing)
        throw HypothesisNotMetError(
            "the top local cohomology module vanishes; it has no annihilator to report");
    ordered_json out;
    out["command"] = "ann-top";
    out["ring"] = ring_to_json(ring);
    out["ideal"] = ideal_to_json(M.defining_ideal);
    out["a"] = ideal_to_json(a);
    out["d"] = rep.d;
    out["nonvanishing"] = true;
    out["attached"] = ideal_list_to_json(rep.attached);
    out["t_ideal"] = ideal_to_json(*rep.t_ideal);
    out["annihilator"] = ideal_to_json(*rep.annihilator);
    out["radical_ann"] = ideal_to_json(*rep.radical_ann);
    out["supp_bound"] = ideal_list_to_json(rep.supp_bound);
    return out;
}

ordered_json run_filtration(const json& job) {
    const RingPtr ring = ring_from_json(job);
    const CyclicModule M = make_module(defining_ideal(job, ring));
    const Ideal a = support_ideal(job, ring);
    const PrimaryDecomposition dec = decomposition_for(job, M.defining_ideal);
    const CdTable table = exact_table_for(job, M, a, dec);
    const CdFiltration F = filtration(M, a, table);
    const std::vector<AssLevelReport> reports = ass_filtration_report(F);

    ordered_json out;
    out["command"] = "filtration";
    out["ring"] = ring_to_json(ring);
    out["ideal"] = ideal_to_json(M.defining_ideal);
    out["a"] = ideal_to_json(a);
    out["d"] = M.dimension;
    out["c"] = F.top_level();
    ordered_json table_json = ordered_json::array();
    for (std::size_t k = 0; k < dec.components.size(); ++k) {
        ordered_json entry;
        entry["prime"] = ideal_to_json(dec.components[k].prime);
        entry["component"] = ideal_to_json(dec.components[k].component);
        entry["cd"] = table.values[k];
        entry["top"] = static_cast<bool>(table.top_flags[k]);
        table_json.push_back(std::move(entry));
    }
    out["table"] = std::move(table_json);
    ordered_json levels = ordered_json::array();
    for (std::size_t i = 0; i < F.levels.size(); ++i) {
        ordered_json entry;
        entry["i"] = static_cast<int>(i);
        entry["a_product"] = ideal_to_json(F.levels[i].a_product);
        entry["saturation"] = ideal_to_json(F.levels[i].saturation_witness);
        entry["intersection"] = ideal_to_json(F.levels[i].intersection_witness);
        entry["ass_sub"] = ideal_list_to_json(reports[i].ass_sub);
        entry["ass_quotient"] = ideal_list_to_json(reports[i].ass_quotient);
        entry["ass_graded"] = ideal_list_to_json(reports[i].ass_graded);
        levels.push_back(std::move(entry));
    }
    out["levels"] = std::move(levels);
    return out;
}

ordered_json run_hochster(const json& job) {
    const RingPtr ring = ring_from_json(job);
    const Ideal I = defining_ideal(job, ring);
    const json* options = options_of(job);
    TopRankReport rep;
    if (options != nullptr && options->contains("degree_box")) {
        const json& box_json = (*options)["degree_box"];
        if (!box_json.is_array())
            throw InvalidArgumentError("options.degree_box must be an array of degree vectors");
        std::vector<std::vector<int>> box;
        for (const auto& degree : box_json) {
            if (!degree.is_array())
                throw InvalidArgumentError("options.degree_box must be an array of degree vectors");
            std::vector<int> e;
            for (const auto& c : degree) e.push_back(to_bounded_int(c, "degree entry", -1024, 0));
            box.push_back(std::move(e));
        }
        rep = top_local_cohomology_ranks(I, box);
    } else {
        rep = top_local_cohomology_ranks(I);
    }
    ordered_json out;
    out["command"] = "hochster";
    out["ring"] = ring_to_json(ring);
    out["ideal"] = ideal_to_json(I);
    out["d"] = rep.d;
    out["nonvanishing"] = rep.nonvanishing;
    ordered_json ranks = ordered_json::array();
    for (const auto& r : rep.ranks) {
        ordered_json entry;
        entry["degree"] = r.degree;
        entry["rank"] = r.rank;
        ranks.push_back(std::move(entry));
    }
    out["ranks"] = std::move(ranks);
    return out;
}

SuiteConfig suite_config_from_json(const json& job, std::optional<std::uint64_t> seed_override) {
    SuiteConfig config;
    if (job.contains("suite")) {
        const json& j = job["suite"];
        if (!j.is_object()) throw InvalidArgumentError("job.suite must be an object");
        const auto read = [&j](const char* key, int& slot, int lo, int hi) {
            if (j.contains(key)) slot = to_bounded_int(j[key], key, lo, hi);
        };
        if (j.contains("seed")) {
            if (!j["seed"].is_number_unsigned())
                throw InvalidArgumentError("suite.seed must be a non-negative integer");
            config.seed = j["seed"].get<std::uint64_t>();
        }
        read("filtration_instances", config.filtration_instances, 0, 100000);
        read("general_a_instances", config.general_a_instances, 0, 100000);
        read("hochster_instances", config.hochster_instances, 0, 100000);
        read("outside_battery", config.outside_battery, 0, 64);
        read("max_vars", config.max_vars, 1, 6);
        read("max_degree", config.max_degree, 1, 64);
        read("max_generators", config.max_generators, 1, 64);
        read("hochster_max_vars", config.hochster_max_vars, 1, 6);
        read("gb_permutation_cases", config.gb_permutation_cases, 0, 100000);
        read("normal_form_cases", config.normal_form_cases, 0, 100000);
        read("colon_identity_cases", config.colon_identity_cases, 0, 100000);
        read("intersect_oracle_cases", config.intersect_oracle_cases, 0, 100000);
    }
    if (seed_override) config.seed = *seed_override;
    return config;
}

ordered_json suite_config_to_json(const SuiteConfig& config) {
    ordered_json out;
    out["seed"] = config.seed;
    out["filtration_instances"] = config.filtration_instances;
    out["general_a_instances"] = config.general_a_instances;
    out["hochster_instances"] = config.hochster_instances;
    out["outside_battery"] = config.outside_battery;
    out["max_vars"] = config.max_vars;
    out["max_degree"] = config.max_degree;
    out["max_generators"] = config.max_generators;
    out["hochster_max_vars"] = config.hochster_max_vars;
    return out;
}

ordered_json run_verify_command(const json& job, std::optional<std::uint64_t> seed_override,
                                bool& all_pass) {
    const SuiteConfig config = suite_config_from_json(job, seed_override);
    const VerifyReport report = run_verify(config);
    all_pass = report.all_pass;
    ordered_json out;
    out["command"] = "verify";
    out["config"] = suite_config_to_json(report.config);
    ordered_json suites = ordered_json::array();
    for (const auto& suite : report.suites) {
        ordered_json entry;
        entry["name"] = suite.name;
        entry["cases"] = suite.cases;
        entry["failures"] = suite.failures;
        entry["counterexamples"] = suite.counterexamples;
        suites.push_back(std::move(entry));
    }
    out["suites"] = std::move(suites);
    out["all_pass"] = report.all_pass;
    return out;
}

RunResult error_result(const std::string& kind, const std::string& message,
                       std::optional<std::size_t> position = std::nullopt) {
    ordered_json error;
    error["kind"] = kind;
    error["message"] = message;
    if (position) error["position"] = *position;
    ordered_json doc;
    doc["error"] = std::move(error);
    return {std::move(doc), exit_code_for(kind)};
}

} // namespace

int exit_code_for(const std::string& kind) {
    if (kind == "parse-error" || kind == "invalid-argument" || kind == "unsupported" ||
        kind == "ring-mismatch")
        return 2;
    if (kind == "hypothesis-not-met") return 3;
    return 4;  // theorem-violation and anything unexpected
}

RunResult run_job(const nlohmann::json& job, const std::string& command,
                  std::optional<std::uint64_t> seed_override) {
    try {
        if (!job.is_object()) throw InvalidArgumentError("job must be a JSON object");
        std::string effective = command;
        if (job.contains("command")) {
            if (!job["command"].is_string())
                throw InvalidArgumentError("job.command must be a string");
            const std::string in_job = job["command"].get<std::string>();
            if (effective.empty()) effective = in_job;
            else if (in_job != effective)
                throw InvalidArgumentError("job.command \"" + in_job +
                                           "\" does not match the requested command \"" +
                                           effective + "\"");
        }
        if (effective.empty()) throw InvalidArgumentError("no command given");

        if (effective == "gb") return {run_gb(job), 0};
        if (effective == "dim") return {run_dim(job), 0};
        if (effective == "primdec") return {run_primdec(job), 0};
        if (effective == "att-top") return {run_att_top(job), 0};
        if (effective == "ann-top") return {run_ann_top(job), 0};
        if (effective == "filtration") return {run_filtration(job), 0};
        if (effective == "hochster") return {run_hochster(job), 0};
        if (effective == "verify") {
            bool all_pass = false;
            ordered_json doc = run_verify_command(job, seed_override, all_pass);
            return {std::move(doc), all_pass ? 0 : 4};
        }
        throw InvalidArgumentError("unknown command \"" + effective + "\"");
    } catch (const ParseError& e) {
        return error_result(e.kind(), e.what(), e.position());
    } catch (const Error& e) {
        return error_result(e.kind(), e.what());
    } catch (const std::exception& e) {
        return error_result("internal-error", e.what());
    }
}

RunResult run_job_text(const std::string& text, const std::string& command,
                       std::optional<std::uint64_t> seed_override) {
    json job;
    try {
        job = json::parse(text);
    } catch (const json::parse_error& e) {
        return error_result("parse-error", e.what(), e.byte);
    }
    return run_job(job, command, seed_override);
}

} // namespace topcoh

#include "posetcode/commands.hpp"

#include <chrono>
#include <sstream>

#include "posetcode/codes.hpp"
#include "posetcode/criteria.hpp"
#include "posetcode/errors.hpp"
#include "posetcode/ideals.hpp"
#include "posetcode/io.hpp"
#include "posetcode/metric.hpp"
#include "posetcode/search.hpp"

namespace posetcode {

namespace {

using nlohmann::json;

json mask_json(Subset s) { return json(to_elements_1based(s)); }

// Word lists in reports are capped so payloads stay reviewable; the full
// code always goes to the code file, never only to the report.
constexpr std::size_t kReportWordCap = 1024;

json code_json(const Code& c) {
    json j;
    j["n"] = c.n();
    j["cardinality"] = c.cardinality();
    if (auto m = c.codimension()) {
        j["codimension"] = *m;
    }
    j["linear"] = c.is_linear();
    if (c.is_linear()) {
        j["check_rows"] = c.check_rows();
        json cols = json::array();
        for (Subset col : c.columns()) {
            cols.push_back(to_binary_string(col, c.check_rows()));
        }
        j["columns"] = cols;
    }
    if (c.cardinality() <= kReportWordCap) {
        json words = json::array();
        for (Subset w : c.words()) {
            words.push_back(to_binary_string(w, c.n()));
        }
        j["words"] = words;
    }
    return j;
}

json verification_json(const VerificationResult& vr, int n) {
    json j;
    j["packing_ok"] = vr.packing_ok;
    if (vr.covering_ok) {
        j["covering_ok"] = *vr.covering_ok;
    } else {
        j["covering_ok"] = nullptr;
    }
    j["perfect"] = vr.perfect;
    if (vr.packing_witness) {
        const PackingViolation& w = *vr.packing_witness;
        j["packing_witness"] = {
            {"word1", to_binary_string(w.word1, n)},
            {"word2", to_binary_string(w.word2, n)},
            {"ideal1", mask_json(w.ideal1)},
            {"ideal2", mask_json(w.ideal2)},
        };
    }
    if (vr.uncovered) {
        j["uncovered"] = to_binary_string(*vr.uncovered, n);
    }
    return j;
}

json battery_json(const CriterionReport& rep) {
    json j;
    j["context"] = {
        {"n", rep.context.n},       {"m", rep.context.m},
        {"r", rep.context.r},       {"lambda", rep.context.lambda},
        {"u", rep.context.u},       {"k", rep.context.k},
    };
    json entries = json::array();
    for (const CriterionEntry& e : rep.entries) {
        entries.push_back({{"id", e.id},
                           {"verdict", to_string(e.result.verdict)},
                           {"witness", e.result.witness}});
    }
    j["entries"] = entries;
    j["overall"] = to_string(rep.overall);
    if (rep.constructed) {
        j["constructed"] = code_json(*rep.constructed);
    }
    return j;
}

const char* status_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    default: return "budget_exceeded";
    }
}

struct ReportBuilder {
    json report;
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();

    explicit ReportBuilder(const char* command) {
        report["tool"] = "posetcode";
        report["version"] = kToolVersion;
        report["command"] = command;
        report["args"] = json::object();
        report["inputs"] = json::object();
    }

    void arg(const char* key, const json& value) {
        report["args"][key] = value;
    }

    // Registers the file under `inputs` and returns its bytes.
    std::string input(const char* key, const std::string& path) {
        std::string bytes = read_file(path);
        report["inputs"][key] = {{"path", path},
                                 {"fnv1a64", fnv1a_hex(bytes)}};
        return bytes;
    }

    CommandResult finish(int exit_code, json payload, std::string text) {
        report["payload"] = std::move(payload);
        auto elapsed = std::chrono::steady_clock::now() - start;
        report["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                .count();
        return CommandResult{exit_code, std::move(report), std::move(text)};
    }
};

} // namespace

CommandResult cmd_analyze(const std::string& poset_file, int r) {
    ReportBuilder rb("analyze");
    rb.arg("r", r);
    Poset p = parse_poset_text(rb.input("poset", poset_file));
    IdealFamily fam = enumerate_ideals(p, r);
    BallProfile b = ball(p, r);
    int essential_height = p.height_of(fam.essential_mask);

    json payload;
    payload["n"] = p.n();
    payload["r"] = r;
    payload["ideal_count"] = fam.ideals.size();
    if (fam.ideals.size() <= kReportWordCap) {
        json ideals = json::array();
        for (Subset i : fam.ideals) {
            ideals.push_back(mask_json(i));
        }
        payload["ideals"] = ideals;
    }
    payload["union"] = mask_json(fam.union_mask);
    payload["core"] = mask_json(fam.core_mask);
    payload["essential"] = mask_json(fam.essential_mask);
    payload["u"] = fam.u;
    payload["lambda"] = fam.lambda;
    payload["k"] = fam.k;
    payload["essential_height"] = essential_height;
    payload["ball_size"] = b.size;

    std::ostringstream out;
    out << "n: " << p.n() << "\n"
        << "r: " << r << "\n"
        << "ideals of cardinality r: " << fam.ideals.size() << "\n"
        << "union P^r: " << to_set_string(fam.union_mask) << "\n"
        << "core: " << to_set_string(fam.core_mask) << " (u = " << fam.u
        << ")\n"
        << "essential part ~P^r: " << to_set_string(fam.essential_mask)
        << "\n"
        << "lambda: " << fam.lambda << "\n"
        << "k (maximal elements of essential part): " << fam.k << "\n"
        << "essential height: " << essential_height << "\n"
        << "ball size |B_P^r|: " << b.size << "\n";
    return rb.finish(0, std::move(payload), out.str());
}

CommandResult cmd_verify(const std::string& poset_file,
                         const std::string& code_file, int r, bool oracle) {
    ReportBuilder rb("verify");
    rb.arg("r", r);
    rb.arg("oracle", oracle);
    Poset p = parse_poset_text(rb.input("poset", poset_file));
    Code c = parse_code_text(rb.input("code", code_file));
    VerificationResult vr = is_perfect(p, c, r, oracle);

    json payload = verification_json(vr, p.n());
    payload["code"] = code_json(c);
    payload["ball_size"] = ball(p, r).size;

    std::ostringstream out;
    out << "packing: " << (vr.packing_ok ? "ok" : "violated") << "\n";
    if (vr.packing_witness) {
        const PackingViolation& w = *vr.packing_witness;
        out << "  witness words " << to_binary_string(w.word1, p.n()) << ", "
            << to_binary_string(w.word2, p.n()) << " inside "
            << to_set_string(w.ideal1) << " u " << to_set_string(w.ideal2)
            << "\n";
    }
    if (vr.covering_ok) {
        out << "covering: " << (*vr.covering_ok ? "ok" : "violated") << "\n";
    }
    if (vr.uncovered) {
        out << "  uncovered vector " << to_binary_string(*vr.uncovered, p.n())
            << "\n";
    }
    out << "perfect: " << (vr.perfect ? "yes" : "no") << "\n";
    return rb.finish(vr.perfect ? 0 : 1, std::move(payload), out.str());
}

CommandResult cmd_criteria(const std::string& poset_file, int m, int r) {
    ReportBuilder rb("criteria");
    rb.arg("m", m);
    rb.arg("r", r);
    Poset p = parse_poset_text(rb.input("poset", poset_file));
    CriterionReport rep = run_battery(p, m, r);

    std::ostringstream out;
    out << "n=" << rep.context.n << " m=" << m << " r=" << r
        << " lambda=" << rep.context.lambda << " u=" << rep.context.u
        << " k=" << rep.context.k << "\n";
    for (const CriterionEntry& e : rep.entries) {
        out << "  " << e.id << ": " << to_string(e.result.verdict);
        if (!e.result.witness.is_null() && !e.result.witness.empty()) {
            out << "  " << e.result.witness.dump();
        }
        out << "\n";
    }
    out << "overall: " << to_string(rep.overall) << "\n";

    int exit_code = 3;
    if (rep.overall == Verdict::existence_constructed) {
        exit_code = 0;
    } else if (rep.overall == Verdict::nonexistence_proven) {
        exit_code = 2;
    }
    return rb.finish(exit_code, battery_json(rep), out.str());
}

CommandResult cmd_search(const std::string& poset_file, int r,
                         const CommonOptions& opt,
                         const std::string& out_file) {
    ReportBuilder rb("search");
    rb.arg("r", r);
    rb.arg("jobs", opt.jobs);
    rb.arg("node_limit", opt.node_limit);
    Poset p = parse_poset_text(rb.input("poset", poset_file));
    SearchConfig cfg;
    cfg.node_limit = opt.node_limit;
    cfg.parallel_width = opt.jobs;
    SearchResult sr = find_perfect_code(p, r, cfg);

    json payload;
    payload["status"] = status_name(sr.status);
    payload["nodes"] = sr.nodes;
    payload["ball_size"] = sr.ball_size;
    std::ostringstream out;
    out << "status: " << status_name(sr.status) << "\n"
        << "ball size: " << sr.ball_size << "\n"
        << "nodes: " << sr.nodes << "\n";
    if (sr.code) {
        payload["code"] = code_json(*sr.code);
        out << "code cardinality: " << sr.code->cardinality() << "\n";
        if (!out_file.empty()) {
            std::string bytes = code_to_text(*sr.code);
            write_file(out_file, bytes);
            payload["out"] = {{"path", out_file},
                              {"fnv1a64", fnv1a_hex(bytes)}};
            out << "wrote " << out_file << "\n";
        }
    }
    int exit_code = 0;
    if (sr.status == SearchStatus::none) {
        exit_code = 2;
    } else if (sr.status == SearchStatus::budget_exceeded) {
        exit_code = 3;
    }
    return rb.finish(exit_code, std::move(payload), out.str());
}

CommandResult cmd_construct(const std::string& poset_file, int m,
                            const std::string& variant,
                            const std::string& out_file) {
    ReportBuilder rb("construct");
    rb.arg("m", m);
    rb.arg("variant", variant);
    Poset p = parse_poset_text(rb.input("poset", poset_file));

    std::optional<Code> code;
    std::string refutation;
    int r = m;
    if (variant == "th0") {
        try {
            code = construct_m_perfect(p, m);
        } catch (const NotUnique& e) {
            refutation = e.what();
        }
    } else if (variant == "m1") {
        r = m - 1;
        ThreeIdealShape shape = theorem_th1_check(p, m);
        if (shape.holds) {
            code = construct_m1_perfect(p, m);
        } else {
            refutation = shape.refutation;
        }
    } else {
        throw RangeError("variant must be th0 or m1");
    }

    json payload;
    payload["variant"] = variant;
    payload["m"] = m;
    payload["r"] = r;
    std::ostringstream out;
    if (!code) {
        payload["refutation"] = refutation;
        out << "no " << r << "-perfect code of codimension " << m << ": "
            << refutation << "\n";
        return rb.finish(2, std::move(payload), out.str());
    }
    std::string bytes = code_to_text(*code);
    write_file(out_file, bytes);
    payload["code"] = code_json(*code);
    payload["out"] = {{"path", out_file}, {"fnv1a64", fnv1a_hex(bytes)}};
    out << "constructed " << r << "-perfect code, cardinality "
        << code->cardinality() << "\n"
        << "wrote " << out_file << "\n";
    return rb.finish(0, std::move(payload), out.str());
}

CommandResult cmd_gen(const std::string& kind, const std::vector<int>& params,
                      const std::string& out_file) {
    ReportBuilder rb("gen");
    rb.arg("kind", kind);
    rb.arg("params", params);

    Poset p;
    if (kind == "chain" && params.size() == 1) {
        p = chain(params[0]);
    } else if (kind == "antichain" && params.size() == 1) {
        p = antichain(params[0]);
    } else if (kind == "crown" && params.size() == 1) {
        p = crown(params[0]);
    } else if (kind == "disjoint_chains" && !params.empty()) {
        p = disjoint_chains(params);
    } else {
        throw RangeError(
            "kind must be chain n | antichain n | crown t | disjoint_chains "
            "l1 l2 ...");
    }
    std::string bytes = poset_to_text(p);
    write_file(out_file, bytes);

    json payload;
    payload["n"] = p.n();
    payload["out"] = {{"path", out_file}, {"fnv1a64", fnv1a_hex(bytes)}};
    std::ostringstream out;
    out << "wrote " << p.n() << "-element poset to " << out_file << "\n";
    return rb.finish(0, std::move(payload), out.str());
}

CommandResult cmd_catalog(int n_max, int offset, const CommonOptions& opt) {
    ReportBuilder rb("catalog");
    rb.arg("n_max", n_max);
    rb.arg("offset", offset);
    SearchConfig cfg;
    cfg.node_limit = opt.node_limit;
    cfg.parallel_width = opt.jobs;
    std::vector<CatalogRecord> records = exhaust_small_posets(n_max, offset,
                                                              cfg);

    json rows = json::array();
    std::ostringstream out;
    int disagreements = 0;
    for (const CatalogRecord& rec : records) {
        json covers = json::array();
        for (auto [a, b] : rec.poset.cover_pairs_1based()) {
            covers.push_back({a, b});
        }
        json row = {{"n", rec.poset.n()},
                    {"covers", covers},
                    {"m", rec.m},
                    {"r", rec.r},
                    {"battery", to_string(rec.battery)},
                    {"oracle", status_name(rec.oracle)},
                    {"ball_size", rec.ball_size},
                    {"perfect_exists", rec.perfect_exists},
                    {"agreement", rec.agreement}};
        out << row.dump() << "\n";
        rows.push_back(std::move(row));
        if (!rec.agreement) {
            ++disagreements;
        }
    }
    json payload;
    payload["records"] = std::move(rows);
    payload["total"] = records.size();
    payload["disagreements"] = disagreements;
    return rb.finish(disagreements == 0 ? 0 : 1, std::move(payload),
                     out.str());
}

} // namespace posetcode

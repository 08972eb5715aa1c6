#include "moykr/cli.hpp"

#include "moykr/adm.hpp"
#include "moykr/closure.hpp"
#include "moykr/homfly.hpp"
#include "moykr/kr.hpp"
#include "moykr/moy_eval.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <regex>

namespace moykr::cli {

using json = nlohmann::ordered_json;

namespace {

std::pair<int, int> parse_range(const std::string& text)
{
    static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("range must look like A..B, got '" + text + "'");
    int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (a > b) throw UsageError("empty range '" + text + "'");
    return {a, b};
}

json params_json(const RunConfig& cfg)
{
    json p;
    p["n"] = cfg.n;
    if (cfg.braid) p["braid"] = *cfg.braid;
    else p["k"] = *cfg.k;
    return p;
}

void emit(const RunConfig& cfg, std::ostream& out, const json& params, const json& result, const std::string& text)
{
    if (cfg.format == "json") {
        json j;
        j["command"] = cfg.command;
        j["params"] = params;
        j["result"] = result;
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

int cmd_jones(const RunConfig& cfg, std::ostream& out)
{
    LaurentPoly p = cfg.braid ? jones(parse_braid(*cfg.braid), cfg.n) : jones_torus2(*cfg.k, cfg.n);
    emit(cfg, out, params_json(cfg), p.to_string(), p.to_string() + "\n");
    return Ok;
}

int cmd_homfly(const RunConfig& cfg, std::ostream& out)
{
    LocalizedScalar h = cfg.braid ? homfly(parse_braid(*cfg.braid), cfg.n) : homfly_torus2(*cfg.k, cfg.n);
    if (!cfg.spec_jones) {
        emit(cfg, out, params_json(cfg), h.to_string(), h.to_string() + "\n");
        return Ok;
    }
    LaurentPoly j = cfg.braid ? jones(parse_braid(*cfg.braid), cfg.n) : jones_torus2(*cfg.k, cfg.n);
    bool ok = specializes_to(h, cfg.n, j);
    json r;
    r["homfly"] = h.to_string();
    r["jones"] = j.to_string();
    r["matches"] = ok;
    r["specialization"] = specialize_to_jones(h, cfg.n).to_string();
    std::string text = "homfly: " + h.to_string() + "\nspecialization: " + specialize_to_jones(h, cfg.n).to_string() +
                       "\njones: " + j.to_string() + "\nmatches: " + (ok ? "yes" : "no") + "\n";
    emit(cfg, out, params_json(cfg), r, text);
    return ok ? Ok : VerificationFailed;
}

int kr_crossings(const RunConfig& cfg)
{
    if (!cfg.braid) return *cfg.k;
    BraidWord b = parse_braid(*cfg.braid);
    if (b.width != 2) throw UsageError("kr supports 2-strand braids only");
    for (int l : b.letters)
        if (l < 0) throw UsageError("kr supports positive crossings only");
    return static_cast<int>(b.letters.size());
}

int cmd_kr(const RunConfig& cfg, std::ostream& out)
{
    int k = kr_crossings(cfg);
    KRComplex c = torus2_complex(k, cfg.n);
    Bigraded h = homology(close_complex(c, cfg.n));
    LaurentPoly p = poincare(h);
    LaurentPoly e = euler(p);

    json hom = json::array();
    std::string text = "complex:\n" + c.render() + "homology:\n";
    for (const auto& [jq, dim] : h) {
        hom.push_back({{"hdeg", jq.first}, {"qdeg", jq.second}, {"dim", dim}});
        text += "  hdeg " + std::to_string(jq.first) + " qdeg " + std::to_string(jq.second) + " dim " +
                std::to_string(dim) + "\n";
    }
    text += "poincare: " + p.to_string() + "\neuler: " + e.to_string() + "\n";
    json r;
    r["complex"] = c.render();
    r["euler"] = e.to_string();
    r["homology"] = hom;
    r["poincare"] = p.to_string();
    emit(cfg, out, params_json(cfg), r, text);
    return Ok;
}

int cmd_table(const RunConfig& cfg, std::ostream& out)
{
    json rows = json::array();
    std::string text;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
            std::string p = kr_poincare_engine(k, n).to_string();
            rows.push_back({{"n", n}, {"k", k}, {"poincare", p}});
            text += "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + p + "\n";
        }
    }
    json params;
    params["n_range"] = std::to_string(cfg.n_min) + ".." + std::to_string(cfg.n_max);
    params["k_range"] = std::to_string(cfg.k_min) + ".." + std::to_string(cfg.k_max);
    emit(cfg, out, params, rows, text);
    return Ok;
}

struct Group {
    std::string name;
    std::function<bool(std::string&)> check;
};

LaurentPoly at_q_one(const LaurentPoly& p)
{
    return substitute(p, {{"q", LaurentPoly::constant(q_vars(), 1)}}, q_vars());
}

std::vector<Group> verify_groups()
{
    std::vector<Group> g;
    g.push_back({"ring", [](std::string&) {
                     for (int m = 1; m <= 12; ++m) {
                         LaurentPoly qm = q_integer(m);
                         if (at_q_one(qm) != LaurentPoly::constant(q_vars(), m)) return false;
                         if (qm.mirrored(0) != qm) return false;
                     }
                     for (int n = 2; n <= 12; ++n) {
                         if (q_integer(n) != q_pow(1 - n) + q_pow(1) * q_integer(n - 1)) return false;
                         if (!(q_integer(n) - (q_pow(1) + q_pow(-1)) * q_integer(n - 1) + q_integer(n - 2)).is_zero())
                             return false;
                     }
                     return q_binomial(4, 2).mirrored(0) == q_binomial(4, 2);
                 }});
    g.push_back({"moy", [](std::string&) {
                     for (int n = 2; n <= 6; ++n) {
                         LadderElement sp = braiding(+1, n), sm = braiding(-1, n);
                         if (ladder_mul(sp, sm) != ladder_identity()) return false;
                         LadderElement skein = ladder_add(ladder_scale(q_pow(-n), sp), ladder_scale(-q_pow(n), sm));
                         if (skein != ladder_scale(q_pow(-1) - q_pow(1), ladder_identity())) return false;
                         if (partial_close_ladder(sp, n) != LaurentPoly::constant(q_vars(), 1)) return false;
                         if (partial_close_ladder(sm, n) != LaurentPoly::constant(q_vars(), 1)) return false;
                         for (int k = 1; k <= 10; ++k) {
                             if (sigma_power(k, n) != sigma_power_closed_form(k, n)) return false;
                             BraidWord b{2, std::vector<int>(static_cast<std::size_t>(k), 1)};
                             LaurentPoly j = jones_torus2(k, n);
                             if (jones(b, n) != j || evaluate(close(b), n) != j) return false;
                         }
                     }
                     return true;
                 }});
    g.push_back({"homfly", [](std::string&) {
                     for (int n = 2; n <= 8; ++n) {
                         LocalizedScalar bn = homfly_bracket(n, n), b1 = homfly_bracket(n - 1, n),
                                         b2 = homfly_bracket(n - 2, n);
                         if (az_monomial(0, -1) * bn + b1 != az_monomial(1, 0)) return false;
                         if (az_monomial(0, 1) * bn + b1 != az_monomial(-1, 0)) return false;
                         if (!(bn + (az_monomial(0, 1) + az_monomial(0, -1)) * b1 + b2).is_zero()) return false;
                     }
                     for (int n = 2; n <= 6; ++n)
                         for (int k = 1; k <= 8; ++k) {
                             LocalizedScalar h = homfly_torus2(k, n);
                             if (zeta_flip(h) != h) return false;
                             if (h != homfly_torus2_closed_form(k, n)) return false;
                             if (!specializes_to(h, n, jones_torus2(k, n))) return false;
                         }
                     return true;
                 }});
    g.push_back({"reidemeister", [](std::string&) {
                     Bigraded id1{{{0, 0}, 1}};
                     for (int n = 2; n <= 6; ++n) {
                         KRComplex r2 = gaussian_eliminate(compose(sigma_complex(+1, n), sigma_complex(-1, n)));
                         if (r2 != identity_complex()) return false;
                         for (int s : {+1, -1})
                             if (homology(partial_close_one_strand(sigma_complex(s, n), n)) != id1) return false;
                     }
                     return true;
                 }});
    g.push_back({"zigzag", [](std::string&) {
                     for (int n = 2; n <= 6; ++n)
                         for (int k = 1; k <= 12; ++k)
                             if (torus2_complex(k, n) != zigzag_complex(k, n)) return false;
                     return true;
                 }});
    g.push_back({"kr_poincare", [](std::string&) {
                     for (int n = 2; n <= 6; ++n)
                         for (int k = 1; k <= 9; ++k)
                             if (kr_poincare_engine(k, n) != kr_poincare_torus2(k, n)) return false;
                     return true;
                 }});
    g.push_back({"euler", [](std::string&) {
                     for (int n = 2; n <= 6; ++n)
                         for (int k = 1; k <= 9; ++k) {
                             LaurentPoly j = jones_torus2(k, n);
                             if (euler(kr_poincare_engine(k, n)) != j) return false;
                             if (eval_closed_ladder(sigma_power(k, n), n) != j) return false;
                         }
                     return true;
                 }});
    g.push_back({"adm", [](std::string& note) {
                     bool hopf_ok = true;
                     std::string mism;
                     for (const auto& c : adm_check(8, 5)) {
                         if (c.k == 2 && !c.match) hopf_ok = false;
                         if (!c.match) mism += " (k=" + std::to_string(c.k) + ",n=" + std::to_string(c.n) + ")";
                     }
                     note = mism.empty() ? "all representatives match" : "mismatches reported:" + mism;
                     return hopf_ok;
                 }});
    return g;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    json r;
    std::string text;
    bool all = true;
    for (const auto& g : verify_groups()) {
        std::string note;
        bool ok = false;
        try {
            ok = g.check(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        all = all && ok;
        r[g.name] = ok ? "pass" : "fail";
        text += g.name + ": " + (ok ? "pass" : "fail") + (note.empty() ? "" : "  [" + note + "]") + "\n";
    }
    emit(cfg, out, json::object(), r, text);
    return all ? Ok : VerificationFailed;
}

}  // namespace

int run(const RunConfig& cfg_in, std::ostream& out, std::ostream& err)
{
    RunConfig cfg = cfg_in;
    try {
        if (cfg.format != "text" && cfg.format != "json") throw UsageError("format must be text or json");
        if (cfg.n < 2) throw UsageError("--n must be at least 2");
        bool computes = cfg.command == "jones" || cfg.command == "homfly" || cfg.command == "kr";
        if (computes) {
            if (cfg.k && cfg.braid) throw UsageError("give either --k or --braid, not both");
            if (!cfg.k && !cfg.braid) cfg.k = 2;
            if (cfg.k && *cfg.k < 1) throw UsageError("--k must be at least 1");
        }
        if (cfg.command == "jones") return cmd_jones(cfg, out);
        if (cfg.command == "homfly") return cmd_homfly(cfg, out);
        if (cfg.command == "kr") return cmd_kr(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "table") {
            if (cfg.n_min < 2 || cfg.k_min < 1) throw UsageError("table ranges need n >= 2 and k >= 1");
            return cmd_table(cfg, out);
        }
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return UsageFailure;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageFailure;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Level-n Jones, HOMFLY-PT and Khovanov-Rozansky invariants of 2-strand braid closures"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string n_range, k_range;
    int k_value = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "level n (>= 2)")->capture_default_str();
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto computing = [&](CLI::App* sub) {
        common(sub);
        auto* ko = sub->add_option("--k", k_value, "number of positive crossings");
        auto* bo = sub->add_option("--braid", "braid word, e.g. \"w=2: 1 1 1\"");
        ko->excludes(bo);
        bo->excludes(ko);
    };
    CLI::App* jones_cmd = app.add_subcommand("jones", "level-n Jones polynomial");
    computing(jones_cmd);
    CLI::App* homfly_cmd = app.add_subcommand("homfly", "HOMFLY-PT polynomial in alpha, zeta");
    computing(homfly_cmd);
    homfly_cmd->add_flag("--spec-jones", cfg.spec_jones, "also check the Jones specialization");
    CLI::App* kr_cmd = app.add_subcommand("kr", "KR complex, homology and Poincaré polynomial");
    computing(kr_cmd);
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification groups");
    verify_cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    CLI::App* table_cmd = app.add_subcommand("table", "grid of Poincaré polynomials");
    table_cmd->add_option("--n-range", n_range, "A..B");
    table_cmd->add_option("--k-range", k_range, "A..B");
    table_cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageFailure;
    }

    for (CLI::App* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
        if (auto* o = sub->get_option_no_throw("--k"); o && o->count()) cfg.k = k_value;
        if (auto* o = sub->get_option_no_throw("--braid"); o && o->count()) cfg.braid = o->as<std::string>();
    }
    try {
        if (!n_range.empty()) std::tie(cfg.n_min, cfg.n_max) = parse_range(n_range);
        if (!k_range.empty()) std::tie(cfg.k_min, cfg.k_max) = parse_range(k_range);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return UsageFailure;
    }
    return run(cfg, out, err);
}

}  // namespace moykr::cli

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "scissors/bloch.hpp"
#include "scissors/characters.hpp"
#include "scissors/errors.hpp"
#include "scissors/harness.hpp"
#include "scissors/rewrite.hpp"
#include "scissors/serialize.hpp"

#ifndef SCISSORS_GOLDEN_FILE
#define SCISSORS_GOLDEN_FILE "data/golden.json"
#endif

using namespace scissors;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
    bool json = false;
    bool timing = false;
};

using Clock = std::chrono::steady_clock;

void emit(const Globals& g, Json report, const std::string& text, Clock::time_point t0) {
    if (g.timing)
        report["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    if (g.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text;
        if (g.timing) std::cout << "time: " << report["seconds"].get<double>() << " s\n";
    }
}

std::string expr(const Vec& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Int c = v[i];
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        Int a = abs(c);
        if (a != 1) out += to_string(a) + "*";
        out += labels[i];
    }
    return out.empty() ? "0" : out;
}

std::optional<Json> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    return Json::parse(in);
}

// ---------------------------------------------------------------- compute-bloch

struct BlochArgs {
    std::int64_t q = 0;
    std::string group = "P";
    bool odd = false;
    std::int64_t bound = kDefaultBlochBound;
    std::string golden = SCISSORS_GOLDEN_FILE;
};

int cmd_compute_bloch(const Globals& g, const BlochArgs& a) {
    auto t0 = Clock::now();
    BlochGroup which = parse_bloch_group(a.group);
    if (a.q > a.bound) throw DomainError("q exceeds --bound");
    BlochSuite s = derived_groups(a.q, a.bound);
    const FPModule& m = s.module(which);
    Structure st = structure(m);
    if (a.odd) st = odd_part(st);

    Json gens = Json::array();
    const Submodule* sub = nullptr;
    if (which == BlochGroup::B) sub = &s.b;
    if (which == BlochGroup::RP1) sub = &s.rp1;
    if (which == BlochGroup::RB) sub = &s.rb;
    for (std::size_t i = 0; i < m.num_gens(); ++i) {
        if (sub) {
            const auto& amb = which == BlochGroup::B ? s.p : s.rp;
            gens.push_back({{"label", m.gen_labels[i]}, {"value", expr(sub->embedding.row(i), amb.gen_labels)}});
        } else {
            gens.push_back({{"label", m.gen_labels[i]}, {"value", m.gen_labels[i]}});
        }
    }

    std::string key = std::string(to_string(which)) + (a.odd ? "_odd" : "");
    std::string verdict = "absent";
    if (auto golden = load_golden(a.golden)) {
        const Json& b = (*golden)["bloch"];
        std::string qk = std::to_string(a.q);
        if (b.contains(qk) && b[qk].contains(key))
            verdict = structure_from_json(b[qk][key]) == st ? "match" : "mismatch";
    }

    Json r{{"command", "compute-bloch"}, {"q", a.q},        {"group", std::string(to_string(which))},
           {"odd", a.odd},               {"structure", to_json(st)},
           {"generators", gens},         {"golden", verdict}};
    r["order"] = st.rank == 0 ? Json(to_string(st.order())) : Json(nullptr);
    std::string text = std::string(to_string(which)) + "(F_" + std::to_string(a.q) + ")" +
                       (a.odd ? "[1/2]" : "") + " = " + st.to_string() + "\n";
    if (st.rank == 0) text += "order: " + to_string(st.order()) + "\n";
    for (const auto& e : gens)
        text += "  " + e["label"].get<std::string>() + " = " + e["value"].get<std::string>() + "\n";
    text += "golden: " + verdict + "\n";
    emit(g, r, text, t0);
    return verdict == "mismatch" ? kExitFail : kExitPass;
}

// ---------------------------------------------------------------- suites

Json suite_json(const SuiteResult& s, bool timing) {
    Json j{{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}};
    if (!s.first_failure.empty()) j["first_failure"] = s.first_failure;
    if (timing) j["seconds"] = s.seconds;
    return j;
}

std::string suite_line(const SuiteResult& s) {
    std::string line = (s.ok() ? "PASS " : "FAIL ") + s.name + " " + std::to_string(s.passed) + "/" +
                       std::to_string(s.passed + s.failed);
    if (!s.ok()) line += "  (" + s.first_failure + ")";
    return line + "\n";
}

int cmd_verify_lemmas(const Globals& g, int m, std::size_t samples, std::uint64_t seed) {
    auto t0 = Clock::now();
    auto suites = verify_lemmas(m, samples, seed);
    Json arr = Json::array();
    std::string text;
    bool ok = true;
    for (const auto& s : suites) {
        arr.push_back(suite_json(s, g.timing));
        text += suite_line(s);
        ok = ok && s.ok();
    }
    Json r{{"command", "verify-lemmas"}, {"m", m}, {"samples", samples}, {"seed", seed},
           {"suites", arr}, {"passed", ok}};
    emit(g, r, text, t0);
    return ok ? kExitPass : kExitFail;
}

int cmd_local_global(const Globals& g, std::size_t k, std::size_t trials, std::uint64_t seed) {
    auto t0 = Clock::now();
    if (k > 4) throw DomainError("k must be at most 4");
    SuiteResult s = local_global_trials(k, trials, seed);
    Json r{{"command", "local-global"}, {"k", k}, {"trials", trials}, {"seed", seed},
           {"suite", suite_json(s, g.timing)}, {"passed", s.ok()}};
    emit(g, r, suite_line(s), t0);
    return s.ok() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- rewriting

int cmd_reduce(const Globals& g, int m, const std::string& x, const std::string& chi_text, int unit,
               const std::string& emit_path) {
    auto t0 = Clock::now();
    RingDesc ring = RingDesc::make(m);
    Character chi = Character::parse(ring, chi_text, unit);
    P1Point pt = P1Point::parse(ring, x);
    Certificate c = reduce_to_zero(pt, chi);
    CheckResult chk = check_certificate(c);
    Json cert = to_json(c);
    if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        if (!out) throw std::invalid_argument("cannot write " + emit_path);
        out << cert.dump(2) << "\n";
    }
    Json r{{"command", "reduce"}, {"m", m}, {"x", pt.to_string()}, {"chi", to_json(chi)},
           {"moves", c.moves.size()}, {"valid", chk.ok}, {"uses_unit_ell", c.uses_unit_ell}};
    if (emit_path.empty()) r["certificate"] = cert;
    std::string text = "[" + pt.to_string() + "]_chi = 0 with " + std::to_string(c.moves.size()) +
                       " moves; checker: " + (chk.ok ? "valid" : "INVALID " + chk.reason) + "\n";
    if (c.uses_unit_ell) text += "note: uses a unit l\n";
    emit(g, r, text, t0);
    return chk.ok ? kExitPass : kExitFail;
}

int cmd_check_cert(const Globals& g, const std::string& path) {
    auto t0 = Clock::now();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    Json j = Json::parse(in);
    Certificate c = certificate_from_json(j);
    CheckResult chk = check_certificate(c);
    Json r{{"command", "check-cert"}, {"file", path}, {"valid", chk.ok}, {"moves", c.moves.size()}};
    std::string text = chk.ok ? "valid\n" : "invalid";
    if (!chk.ok) {
        r["failed_at"] = *chk.failed_at;
        r["reason"] = chk.reason;
        text += " at move " + std::to_string(*chk.failed_at) + ": " + chk.reason + "\n";
    }
    emit(g, r, text, t0);
    return chk.ok ? kExitPass : kExitFail;
}

int cmd_specialize(const Globals& g, int m, const std::string& x, const std::string& prime) {
    auto t0 = Clock::now();
    RingDesc ring = RingDesc::make(m);
    P1Point pt = P1Point::parse(ring, x);
    Valuation v = Valuation::at(QuadInt::parse(ring, prime));
    ResidueTarget t(v);
    Vec img = specialize(pt, t);
    std::string e = expr(img, t.prebloch().gen_labels);
    Json r{{"command", "specialize"}, {"m", m}, {"x", pt.to_string()}, {"prime", v.prime.to_string()},
           {"residue_order", to_string(v.residue_order())}, {"image", e}};
    if (!pt.is_infinity() && !pt.value().is_zero()) r["valuation"] = valuation_of(pt.value(), v);
    std::string text = "S_v([" + pt.to_string() + "]) = " + e + " in P(F_" + to_string(v.residue_order()) + ")\n";
    emit(g, r, text, t0);
    return kExitPass;
}

int cmd_acceptance(const Globals& g, int only, std::uint64_t seed) {
    auto t0 = Clock::now();
    Json arr = Json::array();
    std::string text;
    bool ok = true;
    for (int i = 1; i <= kCriteria; ++i) {
        if (only != 0 && i != only) continue;
        CriterionResult c = run_criterion(i, seed);
        Json j{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}};
        if (g.timing) j["seconds"] = c.seconds;
        arr.push_back(j);
        text += std::string(c.passed ? "PASS" : "FAIL") + " [" + std::to_string(c.id) + "] " + c.title +
                ": " + c.detail + "\n";
        ok = ok && c.passed;
    }
    emit(g, Json{{"command", "acceptance"}, {"criteria", arr}, {"passed", ok}}, text, t0);
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scissors congruence groups, character quotients and rewriting certificates"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "structured output");
    app.add_flag("--timing", g.timing, "report wall time");

    BlochArgs ba;
    auto* cb = app.add_subcommand("compute-bloch", "structure of P, B, RP, RP1, RB, RPplus, RPtilde or Eplus over F_q");
    cb->add_option("--q", ba.q, "field order (p or p^2)")->required();
    cb->add_option("--group", ba.group, "group name");
    cb->add_flag("--odd", ba.odd, "structure after inverting 2");
    cb->add_option("--bound", ba.bound, "largest allowed q");
    cb->add_option("--golden", ba.golden, "golden value file");

    int m = 1;
    std::size_t samples = 100, trials = 200, k = 2;
    std::uint64_t seed = 1;
    auto* vl = app.add_subcommand("verify-lemmas", "property suites over Z[w_m]");
    vl->add_option("--m", m)->required()->check(CLI::IsMember({1, 2, 3, 7, 11}));
    vl->add_option("--samples", samples);
    vl->add_option("--seed", seed);

    auto* lg = app.add_subcommand("local-global", "direct vs character-wise verdicts on random maps");
    lg->add_option("--k", k, "number of involutions");
    lg->add_option("--trials", trials);
    lg->add_option("--seed", seed);

    std::string x, chi, emit_path, prime;
    int unit = 1;
    auto* rd = app.add_subcommand("reduce", "certificate that [x]_chi = 0");
    rd->add_option("--m", m)->required()->check(CLI::IsMember({1, 2, 3, 7, 11}));
    rd->add_option("--x", x, "field element, 'a+b*w' or 'num/den', or inf")->required();
    rd->add_option("--chi", chi, "support primes, comma separated")->required();
    rd->add_option("--chi-unit", unit, "sign on the non-square unit")->check(CLI::IsMember({1, -1}));
    rd->add_option("--emit", emit_path, "write the certificate JSON here");

    std::string cert_path;
    auto* cc = app.add_subcommand("check-cert", "replay a certificate");
    cc->add_option("file", cert_path)->required();

    auto* sp = app.add_subcommand("specialize", "image of [x] in P(k(v))");
    sp->add_option("--m", m)->required()->check(CLI::IsMember({1, 2, 3, 7, 11}));
    sp->add_option("--x", x)->required();
    sp->add_option("--prime", prime)->required();

    int only = 0;
    auto* ac = app.add_subcommand("acceptance", "run the acceptance criteria");
    ac->add_option("--criterion", only)->check(CLI::Range(0, kCriteria));
    ac->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*cb) return cmd_compute_bloch(g, ba);
        if (*vl) return cmd_verify_lemmas(g, m, samples, seed);
        if (*lg) return cmd_local_global(g, k, trials, seed);
        if (*rd) return cmd_reduce(g, m, x, chi, unit, emit_path);
        if (*cc) return cmd_check_cert(g, cert_path);
        if (*sp) return cmd_specialize(g, m, x, prime);
        if (*ac) return cmd_acceptance(g, only, seed);
    } catch (const UnsupportedCharacter& e) {
        std::cerr << "unsupported character: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitFail;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

// Command-line surface: counting, classification, closed-form evaluation,
// shift-register counts, verification sweeps and table emission.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubicount/cubicount.hpp"

namespace cc = cubicount;
using njson = nlohmann::ordered_json;

namespace {

struct CommonArgs {
    long long p = 0;
    int k = 1;
    std::string g, h = "1";
    long n = 2;
    std::string format = "table";
    std::string out;
    std::uint64_t limit = cc::kDefaultEnumLimit;
    long long budget = cc::kDefaultSearchBudget;
};

njson bigint_json(const cc::BigInt& v) {
    if (v.fits_longlong()) return njson(v.to_longlong());
    return njson(v.to_string());
}

njson breakdown_json(const cc::Breakdown& bd) {
    njson j;
    j["A"] = bd.A;
    j["B"] = bd.B;
    j["C"] = bd.C;
    j["D"] = bd.D;
    j["N"] = bd.N;
    j["ubar"] = bd.ubar;
    return j;
}

njson mobius_json(const cc::Mobius& m, const cc::FieldPtr& F) {
    return njson::array({F->index_of(m.a), F->index_of(m.b), F->index_of(m.c), F->index_of(m.d)});
}

njson params_json(const cc::Classification& cls, const cc::FieldPtr& F) {
    njson p = njson::object();
    if (cls.param) p["param"] = F->index_of(*cls.param);
    if (cls.theta_power >= 0) p["theta_power"] = cls.theta_power;
    if (cls.witness) {
        p["A"] = mobius_json(cls.witness->first, F);
        p["B"] = mobius_json(cls.witness->second, F);
    }
    p["ramification_points"] = cls.ram.total;
    if (cls.ram.inseparable) p["inseparable"] = true;
    return p;
}

void flatten(const njson& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            flatten(*it, key, out);
        } else {
            out.emplace_back(key, it->is_string() ? it->get<std::string>() : it->dump());
        }
    }
}

void emit(const njson& report, const std::string& format, const std::string& outfile) {
    std::ostringstream buf;
    if (format == "json") {
        buf << report.dump(2) << "\n";
    } else if (format == "csv") {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(report, "", kv);
        for (std::size_t i = 0; i < kv.size(); ++i) buf << (i ? "," : "") << kv[i].first;
        buf << "\n";
        for (std::size_t i = 0; i < kv.size(); ++i) buf << (i ? "," : "") << kv[i].second;
        buf << "\n";
    } else {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(report, "", kv);
        std::size_t w = 0;
        for (const auto& [k, v] : kv) w = std::max(w, k.size());
        for (const auto& [k, v] : kv)
            buf << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    }
    if (!outfile.empty()) {
        std::ofstream f(outfile);
        if (!f) throw cc::ValidationError("cannot open output file: " + outfile);
        f << buf.str();
    } else {
        std::cout << buf.str();
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

njson base_report(const CommonArgs& a, const cc::FieldPtr& F) {
    njson j;
    j["p"] = a.p;
    j["k"] = a.k;
    j["q"] = bigint_json(F->order());
    if (!a.g.empty()) j["g"] = a.g;
    if (!a.g.empty()) j["h"] = a.h;
    return j;
}

cc::RatExpr parse_pair(const CommonArgs& a, const cc::FieldPtr& F) {
    return cc::ratexpr_new(cc::parse_poly(a.g, F), cc::parse_poly(a.h, F));
}

int run_count(const CommonArgs& a, const std::string& method) {
    Timer t;
    auto F = cc::Field::make(a.p, a.k);
    cc::RatExpr R = parse_pair(a, F);
    cc::CountResult res;
    if (method == "brute") res = cc::count_brute(R, a.n, a.limit);
    else if (method == "capelli") res = cc::count_capelli(R, a.n, a.limit);
    else if (method == "inversion") res = cc::count_inversion(R, a.n, a.limit);
    else throw cc::ValidationError("unknown method: " + method);
    njson j = base_report(a, F);
    j["n"] = a.n;
    j["method"] = method;
    j["value"] = res.value;
    if (!res.detail.empty()) j["breakdown"] = breakdown_json(res.detail.front());
    j["elapsed_ms"] = t.ms();
    emit(j, a.format, a.out);
    return 0;
}

int run_formula(const CommonArgs& a) {
    Timer t;
    auto F = cc::Field::make(a.p, a.k);
    cc::RatExpr R = parse_pair(a, F);
    cc::FormulaResult res = cc::dispatch(R, a.n, a.budget);
    njson j = base_report(a, F);
    j["n"] = a.n;
    j["method"] = "formula";
    j["kind"] = cc::to_string(res.kind);
    if (res.kind == cc::FormulaKind::Bound) {
        j["center"] = static_cast<double>(res.center.to_long_double());
        j["radius"] = static_cast<double>(res.radius);
        j["kappa"] = res.kappa;
    } else {
        j["value"] = bigint_json(res.value);
    }
    j["rule"] = res.rule;
    if (!res.reason.empty()) j["reason"] = res.reason;
    j["class"] = cc::to_string(res.cls.cls);
    j["params"] = params_json(res.cls, F);
    j["elapsed_ms"] = t.ms();
    emit(j, a.format, a.out);
    return 0;
}

int run_classify(const CommonArgs& a) {
    Timer t;
    auto F = cc::Field::make(a.p, a.k);
    cc::RatExpr R = parse_pair(a, F);
    cc::Classification cls = cc::classify(R, a.budget);
    njson j = base_report(a, F);
    j["class"] = cc::to_string(cls.cls);
    j["params"] = params_json(cls, F);
    j["elapsed_ms"] = t.ms();
    emit(j, a.format, a.out);
    return 0;
}

int run_tsr(const CommonArgs& a, long m, const std::string& method) {
    Timer t;
    auto F = cc::Field::make(a.p, a.k);
    njson j;
    j["p"] = a.p;
    j["k"] = a.k;
    j["q"] = bigint_json(F->order());
    j["m"] = m;
    j["method"] = method;
    if (method == "formula") {
        j["value"] = bigint_json(cc::tsr_count_formula(F, m).value);
    } else if (method == "sum") {
        j["value"] = bigint_json(cc::tsr_count_sum(F, m, a.limit).value);
    } else if (method == "both") {
        cc::BigInt f = cc::tsr_count_formula(F, m).value;
        cc::BigInt s = cc::tsr_count_sum(F, m, a.limit).value;
        j["value"] = bigint_json(f);
        j["sum_value"] = bigint_json(s);
        j["agree"] = f == s;
    } else {
        throw cc::ValidationError("unknown method: " + method);
    }
    j["elapsed_ms"] = t.ms();
    emit(j, a.format, a.out);
    return 0;
}

// ---- verification suites ----------------------------------------------------

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
};

void check(SuiteResult& s, bool ok) {
    ++s.checks;
    if (!ok) ++s.failures;
}

SuiteResult suite_identities(std::uint64_t seed, std::uint64_t limit) {
    SuiteResult s{"identities"};
    for (auto [p, k] : std::vector<std::pair<long long, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto F = cc::Field::make(p, k);
        std::vector<cc::RatExpr> rs;
        for (auto& nf : cc::canonical_forms(F)) rs.push_back(nf.expr);
        for (auto& r : cc::random_cubics(F, 2, seed ^ (p * 131 + k))) rs.push_back(r);
        for (const auto& R : rs) {
            cc::RatExpr norm = cc::normalize_cubic(R).expr;
            for (long n : {1L, 2L, 3L}) {
                // breakdown() itself throws if either closed form for ubar or the
                // N-identity fails; reaching the return is the pass.
                cc::Breakdown bd = cc::breakdown(norm, n, limit);
                check(s, true);
                if (p != 2) {
                    long long nd = cc::count_points(norm, n, cc::CurveKind::Discriminant, limit).N;
                    check(s, nd == bd.N);
                }
            }
        }
    }
    return s;
}

SuiteResult suite_oracle(std::uint64_t seed, std::uint64_t limit) {
    SuiteResult s{"oracle"};
    for (auto [p, k] : std::vector<std::pair<long long, int>>{{2, 1}, {3, 1}, {5, 1}}) {
        auto F = cc::Field::make(p, k);
        std::vector<cc::RatExpr> rs;
        for (auto& nf : cc::canonical_forms(F)) rs.push_back(nf.expr);
        for (auto& r : cc::random_cubics(F, 2, seed ^ (p * 977 + k))) rs.push_back(r);
        for (const auto& R : rs) {
            for (long n : {2L, 3L}) {
                long long b = cc::count_brute(R, n, limit).value;
                long long c = cc::count_capelli(R, n, limit).value;
                long long i = cc::count_inversion(R, n, limit).value;
                check(s, b == c && c == i);
            }
        }
    }
    return s;
}

SuiteResult suite_bounds(std::uint64_t seed, std::uint64_t limit) {
    SuiteResult s{"bounds"};
    auto envelope_holds = [&](const cc::RatExpr& R, long n) {
        cc::FormulaResult fr = cc::dispatch(R, n);
        long long exact = cc::count_inversion(R, n, limit).value;
        long double dev = std::fabs(static_cast<long double>(exact) - fr.center.to_long_double());
        return fr.kind == cc::FormulaKind::Bound && dev <= fr.radius;
    };
    auto F2 = cc::Field::make(2, 1);
    auto F4 = cc::Field::make(2, 2);
    std::vector<cc::RatExpr> char2;
    char2.push_back(cc::canonical::char2_iv(F2, F2->one()));
    char2.push_back(cc::canonical::char2_iv(F4, cc::find_noncube(F4)));
    char2.push_back(cc::canonical::char2_v(F4, F4->element(2)));
    char2.push_back(cc::canonical::char2_vi(F4, F4->element(3), cc::find_trace_one(F4)));
    for (const auto& R : char2) {
        for (long n : {1L, 2L}) check(s, cc::hasse_weil_check(R, n, limit).pass);
        check(s, envelope_holds(R, 2));
    }
    auto F5 = cc::Field::make(5, 1);
    for (const auto& R : cc::random_four_ram(F5, 5, seed ^ 0x4faULL)) {
        for (long n : {1L, 2L}) check(s, cc::hasse_weil_check(R, n, limit).pass);
        check(s, envelope_holds(R, 2));
    }
    return s;
}

SuiteResult suite_tsr(std::uint64_t limit) {
    SuiteResult s{"tsr"};
    for (auto [p, k] : std::vector<std::pair<long long, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto F = cc::Field::make(p, k);
        check(s, cc::tsr_count_formula(F, 2).value == cc::tsr_count_sum(F, 2, limit).value);
    }
    return s;
}

int run_verify(const std::string& suite, std::uint64_t seed, std::uint64_t limit,
               const std::string& format, const std::string& out) {
    std::vector<SuiteResult> results;
    if (suite == "identities" || suite == "all") results.push_back(suite_identities(seed, limit));
    if (suite == "oracle" || suite == "all") results.push_back(suite_oracle(seed, limit));
    if (suite == "bounds" || suite == "all") results.push_back(suite_bounds(seed, limit));
    if (suite == "tsr" || suite == "all") results.push_back(suite_tsr(limit));
    if (results.empty()) throw cc::ValidationError("unknown suite: " + suite);

    bool ok = true;
    njson j;
    j["seed"] = seed;
    j["limit"] = limit;
    njson arr = njson::array();
    for (const auto& r : results) {
        njson e;
        e["name"] = r.name;
        e["checks"] = r.checks;
        e["failures"] = r.failures;
        arr.push_back(e);
        if (r.failures) ok = false;
        std::cerr << "suite " << r.name << ": " << (r.checks - r.failures) << "/" << r.checks
                  << " checks passed\n";
    }
    j["suites"] = arr;
    j["ok"] = ok;
    emit(j, format, out);
    return ok ? 0 : 1;
}

int run_sweep(const CommonArgs& a, const std::string& range, const std::string& forms) {
    auto F = cc::Field::make(a.p, a.k);
    if (forms != "all-canonical") throw cc::ValidationError("unknown forms selector: " + forms);
    std::size_t dots = range.find("..");
    if (dots == std::string::npos) throw cc::ValidationError("n-range must look like 2..4");
    long lo = std::stol(range.substr(0, dots));
    long hi = std::stol(range.substr(dots + 2));
    if (lo < 2 || hi < lo) throw cc::ValidationError("n-range must satisfy 2 <= lo <= hi");

    std::ostringstream buf;
    buf << "form,g,h,n,class,kind,value,radius,oracle,agree\n";
    for (const auto& nf : cc::canonical_forms(F)) {
        cc::Classification cls = cc::classify(nf.expr, a.budget);
        for (long n = lo; n <= hi; ++n) {
            cc::FormulaResult fr = cc::dispatch(nf.expr, n, a.budget);
            buf << nf.label << "," << cc::to_string(nf.expr.g) << "," << cc::to_string(nf.expr.h)
                << "," << n << "," << cc::to_string(cls.cls) << "," << cc::to_string(fr.kind);
            std::string oracle = "-", agree = "-";
            bool within = true;
            {
                std::uint64_t qn = 1;
                bool fits = F->order_fits_u64();
                if (fits) {
                    for (long i = 0; i < n && fits; ++i) {
                        if (qn > a.limit / F->order_u64()) fits = false;
                        else qn *= F->order_u64();
                    }
                }
                within = fits && qn <= a.limit;
            }
            long long brute = 0;
            if (within) {
                brute = cc::count_brute(nf.expr, n, a.limit).value;
                oracle = std::to_string(brute);
            }
            if (fr.kind == cc::FormulaKind::Bound) {
                buf << "," << static_cast<double>(fr.center.to_long_double()) << ","
                    << static_cast<double>(fr.radius);
                if (within)
                    agree = std::fabs(static_cast<long double>(brute) -
                                      fr.center.to_long_double()) <= fr.radius
                                ? "true"
                                : "false";
            } else {
                buf << "," << fr.value.to_string() << ",";
                if (within) agree = (cc::BigInt{brute} == fr.value) ? "true" : "false";
            }
            buf << "," << oracle << "," << agree << "\n";
        }
    }
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw cc::ValidationError("cannot open output file: " + a.out);
        f << buf.str();
    } else {
        std::cout << buf.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irreducible-polynomial counts under cubic transformations over finite fields"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help and exit");  // frees -h / --h for the denominator

    CommonArgs a;
    std::string method = "brute", tsr_method = "both", suite = "all";
    std::string range = "2..4", forms = "all-canonical";
    long m = 2;
    std::uint64_t seed = 1;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help and exit");
        cmd->add_option("--p", a.p, "prime characteristic")->required();
        cmd->add_option("--k", a.k, "extension degree of the base field");
        cmd->add_option("--format", a.format, "json | csv | table");
        cmd->add_option("--out", a.out, "write the report to a file instead of stdout");
        cmd->add_option("--limit", a.limit, "enumeration limit");
        cmd->add_option("--budget", a.budget, "equivalence search budget (max q)");
    };

    CLI::App* c_count = app.add_subcommand("count", "count irreducible transforms of degree-n inputs");
    add_field_opts(c_count);
    c_count->add_option("--g", a.g, "numerator polynomial")->required();
    c_count->add_option("--h", a.h, "denominator polynomial");
    c_count->add_option("--n", a.n, "input degree (n > 1)")->required();
    c_count->add_option("--method", method, "brute | capelli | inversion");

    CLI::App* c_formula = app.add_subcommand("formula", "evaluate the closed form or bound");
    add_field_opts(c_formula);
    c_formula->add_option("--g", a.g)->required();
    c_formula->add_option("--h", a.h);
    c_formula->add_option("--n", a.n)->required();

    CLI::App* c_classify = app.add_subcommand("classify", "canonical equivalence class of g/h");
    add_field_opts(c_classify);
    c_classify->add_option("--g", a.g)->required();
    c_classify->add_option("--h", a.h);

    CLI::App* c_tsr = app.add_subcommand("tsr", "count irreducible transformation shift registers of order 3");
    add_field_opts(c_tsr);
    c_tsr->add_option("--m", m, "register length (m > 1)")->required();
    c_tsr->add_option("--method", tsr_method, "formula | sum | both");

    CLI::App* c_verify = app.add_subcommand("verify", "run the property suites at desk scale");
    c_verify->set_help_flag("--help", "print help and exit");
    c_verify->add_option("--suite", suite, "identities | oracle | bounds | tsr | all");
    c_verify->add_option("--seed", seed, "corpus seed");
    c_verify->add_option("--limit", a.limit, "enumeration limit");
    c_verify->add_option("--format", a.format, "json | csv | table");
    c_verify->add_option("--out", a.out, "write the report to a file");

    CLI::App* c_sweep = app.add_subcommand("sweep", "tabulate canonical forms against the oracle");
    add_field_opts(c_sweep);
    c_sweep->add_option("--n-range", range, "degree range, e.g. 2..4");
    c_sweep->add_option("--forms", forms, "all-canonical");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_count->parsed()) {
            if (method != "brute" && method != "capelli" && method != "inversion")
                throw cc::ValidationError("unknown method: " + method);
            return run_count(a, method);
        }
        if (c_formula->parsed()) return run_formula(a);
        if (c_classify->parsed()) return run_classify(a);
        if (c_tsr->parsed()) {
            if (tsr_method != "both" && tsr_method != "formula" && tsr_method != "sum")
                throw cc::ValidationError("unknown method: " + tsr_method);
            return run_tsr(a, m, tsr_method);
        }
        if (c_verify->parsed()) return run_verify(suite, seed, a.limit, a.format, a.out);
        if (c_sweep->parsed()) return run_sweep(a, range, forms);
    } catch (const cc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cc::LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

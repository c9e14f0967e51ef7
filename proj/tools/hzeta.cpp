#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hzeta/cache.hpp"
#include "hzeta/error.hpp"
#include "hzeta/identities.hpp"
#include "hzeta/keys.hpp"

using namespace hzeta;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitBadKey = 2;
constexpr int kExitLoose = 3;

struct CommonOpts {
    int digits = 30;
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    int threads = 0;
};

std::unique_ptr<ConstantCache> open_cache(const CommonOpts& o) {
    if (o.no_cache) return nullptr;
    std::filesystem::path dir;
    if (!o.cache_dir.empty()) {
        dir = o.cache_dir;
    } else if (const char* env = std::getenv("HZETA_CACHE_DIR"); env && *env) {
        dir = env;
    } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        dir = std::filesystem::path(xdg) / "hzeta";
    } else if (const char* home = std::getenv("HOME"); home && *home) {
        dir = std::filesystem::path(home) / ".cache" / "hzeta";
    } else {
        return nullptr;
    }
    return std::make_unique<ConstantCache>(dir);
}

// "3", "0..5" or "1,2,7"; values may be fractions or decimals.
std::vector<std::string> expand_range(const std::string& text) {
    std::vector<std::string> out;
    size_t dots = text.find("..");
    if (dots != std::string::npos) {
        long lo = std::stol(text.substr(0, dots));
        long hi = std::stol(text.substr(dots + 2));
        if (hi < lo) throw DomainError("empty range '" + text + "'");
        for (long v = lo; v <= hi; ++v) out.push_back(std::to_string(v));
        return out;
    }
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        out.push_back(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

struct Row {
    ConstantKey key;
    std::string value;
    std::string error_bound;
};

json row_json(const Row& r) {
    const FamilyInfo& info = family_info(r.key.family);
    json params = json::object();
    for (size_t i = 0; i < r.key.params.size(); ++i) {
        const Rational& q = r.key.params[i];
        if (q.is_integer())
            params[info.params[i]] = q.num().get_si();
        else
            params[info.params[i]] = q.str();
    }
    return {{"family", info.name}, {"params", params}, {"digits", r.key.digits}, {"value", r.value},
            {"error_bound", r.error_bound}};
}

void print_rows(const std::vector<Row>& rows, const std::string& format, bool bare) {
    if (bare && format == "text") {
        for (const auto& r : rows) std::cout << r.value << "\n";
    } else if (format == "json") {
        if (rows.size() == 1) {
            std::cout << row_json(rows[0]).dump() << "\n";
            return;
        }
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(row_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "family,params,digits,value,error_bound\n";
        for (const auto& r : rows) {
            std::string id = r.key.id();
            std::string params = id.substr(id.find('(') + 1);
            params.pop_back();
            for (char& c : params)
                if (c == ',') c = ';';
            std::cout << family_info(r.key.family).name << "," << params << "," << r.key.digits << "," << r.value
                      << "," << r.error_bound << "\n";
        }
    } else {
        size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.key.id().size());
        for (const auto& r : rows) {
            std::string id = r.key.id();
            std::cout << id << std::string(width - id.size() + 2, ' ') << r.value << "\n";
        }
    }
}

struct EvalFailure {
    int code;
    std::string message;
};

// Evaluates all keys (cache first, then in parallel), stores fresh results
// from this thread only, and renders them.
std::vector<Row> compute(const std::vector<ConstantKey>& keys, const CommonOpts& o, bool exact) {
    auto cache = open_cache(o);
    std::vector<std::optional<ConstantResult>> results(keys.size());
    std::vector<bool> fresh(keys.size(), false);
    for (size_t i = 0; i < keys.size(); ++i)
        if (cache) results[i] = cache->lookup(keys[i]);

    std::vector<std::string> errors(keys.size());
    std::vector<int> codes(keys.size(), 0);
    const long n = static_cast<long>(keys.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const size_t u = static_cast<size_t>(i);
        if (results[u]) continue;
        try {
            results[u] = evaluate(keys[u]);
            fresh[u] = true;
        } catch (const NonConvergence& e) {
            errors[u] = e.what();
            codes[u] = kExitBadKey;
        } catch (const std::exception& e) {
            errors[u] = e.what();
            codes[u] = kExitBadKey;
        }
    }
    for (size_t i = 0; i < keys.size(); ++i)
        if (codes[i]) throw EvalFailure{codes[i], keys[i].id() + ": " + errors[i]};

    std::vector<Row> rows;
    for (size_t i = 0; i < keys.size(); ++i) {
        const ConstantResult& r = *results[i];
        if (exact) {
            if (!r.exact) throw EvalFailure{kExitBadKey, keys[i].id() + ": no closed form"};
            rows.push_back({keys[i], r.exact->str(), "0"});
            continue;
        }
        auto text = render_value(r.value, r.error_bound, keys[i].digits);
        if (!text)
            throw EvalFailure{kExitLoose, keys[i].id() + ": error bound " + r.error_bound.to_sci(3) +
                                              " too large for " + std::to_string(keys[i].digits) + " digits"};
        rows.push_back({keys[i], *text, r.error_bound.to_sci(3)});
        if (cache && fresh[i]) cache->store(r);
    }
    return rows;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--digits", o.digits, "significant decimal digits")->check(CLI::Range(10, 2000));
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--cache-dir", o.cache_dir, "cache directory (default $HZETA_CACHE_DIR)");
    cmd->add_flag("--no-cache", o.no_cache, "neither read nor write the cache");
    cmd->add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
}

json report_json(const std::vector<IdentityReport>& reports, int digits) {
    json out = json::object();
    out["digits"] = digits;
    json arr = json::array();
    for (const auto& r : reports) {
        json pts = json::array();
        for (const auto& p : r.points)
            pts.push_back({{"s", p.s.to_decimal(8)},
                           {"lhs", p.lhs.to_sci(digits)},
                           {"rhs", p.rhs.to_sci(digits)},
                           {"digits_agreement", p.digits_agreement}});
        arr.push_back({{"identity_id", r.identity_id}, {"threshold", r.threshold}, {"pass", r.pass}, {"points", pts}});
    }
    out["reports"] = arr;
    return out;
}

int min_digits(const IdentityReport& r) {
    int d = 1 << 20;
    for (const auto& p : r.points) d = std::min(d, p.digits_agreement);
    return r.points.empty() ? 0 : d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic zeta constants: values, tables and verification suites"};
    app.require_subcommand(1);

    CommonOpts copts;
    std::string family;
    std::map<std::string, std::string> ranges;
    auto* constants = app.add_subcommand("constants", "table of one family over parameter ranges");
    add_common(constants, copts);
    constants->add_option("--family", family, "family name")->required();
    for (const char* p : {"k", "m", "a", "s", "r", "j"})
        constants->add_option(std::string("--") + p, ranges[p], std::string("values of ") + p + " (v, a..b or v1,v2)");
    bool constants_exact = false;
    constants->add_flag("--exact", constants_exact, "print closed forms");

    CommonOpts vopts;
    std::string key_text;
    bool exact = false;
    auto* value = app.add_subcommand("value", "one constant");
    add_common(value, vopts);
    value->add_option("--key", key_text, "e.g. gammaA(k=2,m=3)")->required();
    value->add_flag("--exact", exact, "print the closed form");

    std::string suite = "all";
    int vdigits = 40;
    int vthreads = 0;
    std::string report_path = "hzeta_verify_report.json";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "identities, oracles or all")
        ->check(CLI::IsMember({"identities", "oracles", "all"}));
    verify->add_option("--digits", vdigits, "working digits")->check(CLI::Range(20, 200));
    verify->add_option("--report", report_path, "report file (JSON)");
    verify->add_option("--threads", vthreads, "OpenMP threads")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*constants || *value) {
            CommonOpts& o = *constants ? copts : vopts;
            if (o.threads > 0) omp_set_num_threads(o.threads);
            std::vector<ConstantKey> keys;
            if (*value) {
                keys.push_back(ConstantKey::parse(key_text, o.digits));
            } else {
                auto fam = family_from_name(family);
                if (!fam) throw EvalFailure{kExitBadKey, "unknown family '" + family + "'"};
                const FamilyInfo& info = family_info(*fam);
                std::vector<std::string> texts = {std::string(info.name) + "("};
                for (size_t i = 0; i < info.params.size(); ++i) {
                    const std::string& spec = ranges[info.params[i]];
                    if (spec.empty()) throw EvalFailure{kExitBadKey, std::string("--") + info.params[i] + " is required"};
                    std::vector<std::string> next;
                    for (const auto& t : texts)
                        for (const auto& v : expand_range(spec))
                            next.push_back(t + (i ? "," : "") + info.params[i] + "=" + v);
                    texts = std::move(next);
                }
                for (const auto& t : texts) keys.push_back(ConstantKey::parse(t + ")", o.digits));
                std::sort(keys.begin(), keys.end());
                keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            }
            print_rows(compute(keys, o, *value ? exact : constants_exact), o.format, value->parsed());
            return 0;
        }

        if (vthreads > 0) omp_set_num_threads(vthreads);
        PrecisionCtx ctx(vdigits);
        std::vector<IdentityReport> reports;
        if (suite == "identities" || suite == "all") {
            auto r = identity_suite(ctx);
            reports.insert(reports.end(), r.begin(), r.end());
        }
        if (suite == "oracles" || suite == "all") {
            auto r = oracle_suite(ctx);
            reports.insert(reports.end(), r.begin(), r.end());
        }
        std::ofstream(report_path) << report_json(reports, vdigits).dump(2) << "\n";
        std::vector<std::string> failed;
        for (const auto& r : reports) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity_id << " digits=" << min_digits(r)
                      << " threshold=" << r.threshold << "\n";
            if (!r.pass) failed.push_back(r.identity_id);
        }
        if (!failed.empty()) {
            std::cerr << "failing identities:";
            for (const auto& f : failed) std::cerr << " " << f;
            std::cerr << "\n";
            return kExitFail;
        }
        return 0;
    } catch (const EvalFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadKey;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadKey;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

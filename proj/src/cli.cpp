#include "mengoli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mengoli/digamma.hpp"
#include "mengoli/error.hpp"
#include "mengoli/limits.hpp"
#include "mengoli/multifactor.hpp"
#include "mengoli/oracle.hpp"
#include "mengoli/pairsum.hpp"
#include "mengoli/sampling.hpp"
#include "mengoli/series_spec.hpp"

namespace mengoli::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kDefaultVerifyTerms = 1'000'000;
constexpr std::int64_t kBenchTermCap = 100'000'000;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string err_str(long double e) { return Real::from_long_double(e, 64).str(6); }

json shifts_json(std::span<const Rational> shifts) {
    json arr = json::array();
    for (const auto& q : shifts) arr.push_back(q.str());
    return arr;
}

json oracle_json(const TruncationReport& r) {
    return json{{"low", r.low().str(40)}, {"high", r.high().str(40)}, {"N", r.terms_used}};
}

EvalResult evaluate(const ProductSeriesSpec& spec) {
    const auto s = spec.shifts();
    return spec.size() == 2 ? pair_sum(s[0], s[1], spec.precision_bits()) : multi_sum(spec);
}

json result_json(const ProductSeriesSpec& spec, const EvalResult& r) {
    json j;
    j["shifts"] = shifts_json(spec.shifts());
    j["value"] = r.value.str();
    j["error_bound"] = err_str(r.error_bound);
    j["method"] = std::string(method_name(r.method));
    j["precision"] = r.value.precision_bits();
    if (r.exact) j["exact"] = r.exact->str();
    return j;
}

void emit(const json& report, Format format, std::ostream& out) {
    if (format == Format::Json) {
        out << report.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : report.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

int run_eval(const CliRequest& req, std::ostream& out) {
    const ProductSeriesSpec spec(req.shifts, req.precision_bits);
    const EvalResult r = evaluate(spec);
    json j = result_json(spec, r);
    if (req.terms > 0) {
        const auto verdict = verify(spec, r, req.terms);
        j["oracle"] = oracle_json(verdict.oracle);
        j["verified"] = verdict.pass;
    }
    emit(j, req.format, out);
    return kExitOk;
}

int run_digamma(const CliRequest& req, std::ostream& out) {
    const auto parts = split(req.arg, '/');
    if (parts.size() != 2) throw InvalidInput("digamma --arg must be p/q");
    const Rational p = Rational::parse(parts[0]);
    const Rational q = Rational::parse(parts[1]);
    const std::int64_t pi = to_int64(p.num(), "p");
    const std::int64_t qi = to_int64(q.num(), "q");
    const Bounded g = gauss_sum(pi, qi, req.precision_bits);
    const Bounded gs = gauss_sum_shifted(pi, qi, req.precision_bits);

    json j;
    j["p"] = pi;
    j["q"] = qi;
    j["gauss_sum"] = g.value.str();
    j["gauss_sum_shifted"] = gs.value.str();
    j["error_bound"] = err_str(g.error);
    j["precision"] = req.precision_bits;
    int code = kExitOk;
    if (req.terms > 0) {
        const TruncationReport r = series_oracle(pi, qi, req.terms, req.precision_bits);
        const bool inside = r.contains(g.value);
        j["oracle"] = oracle_json(r);
        j["verified"] = inside;
        if (!inside) code = kExitVerificationFailed;
    }
    emit(j, req.format, out);
    return code;
}

int run_zeta(const CliRequest& req, std::ostream& out) {
    const ZetaKind kind = zeta_kind_from_s(req.s);
    if (req.w_grid.empty()) throw InvalidInput("zeta needs a non-empty --w grid");
    const int order = req.order < 0 ? static_cast<int>(req.w_grid.size()) - 1 : req.order;
    const LimitEstimate est = estimate_zeta_limit(kind, req.w_grid, order, req.precision_bits);

    json terms = json::array();
    for (const auto& [w, v] : est.raw_terms) terms.push_back(json{{"w", w}, {"value", v.str()}});
    json j;
    j["s"] = req.s;
    j["target"] = std::string(zeta_target_name(kind));
    j["target_value"] = est.target_hint->str();
    j["order"] = order;
    j["terms"] = std::move(terms);
    j["extrapolated"] = est.extrapolated.str();
    j["abs_error"] = abs(est.extrapolated - *est.target_hint).str(6);
    if (est.saturated) {
        j["order_estimate"] = "saturated";
    } else {
        std::ostringstream os;
        os.precision(6);
        os << est.order_estimate;
        j["order_estimate"] = os.str();
    }
    j["precision"] = req.precision_bits;
    emit(j, req.format, out);
    return kExitOk;
}

EvalResult perturbed(EvalResult r, double delta) {
    if (delta != 0.0) r.value += Real::from_long_double(delta, r.value.precision_bits());
    return r;
}

int run_verify_single(const CliRequest& req, std::ostream& out) {
    const ProductSeriesSpec spec(req.shifts, req.precision_bits);
    const std::int64_t terms = req.terms > 0 ? req.terms : kDefaultVerifyTerms;
    const EvalResult r = perturbed(evaluate(spec), req.perturb);
    const VerificationVerdict v = verify(spec, r, terms);
    json j = result_json(spec, r);
    j["perturb"] = req.perturb;
    j["oracle"] = oracle_json(v.oracle);
    j["separation"] = v.separation.str(6);
    j["pass"] = v.pass;
    emit(j, req.format, out);
    return v.pass ? kExitOk : kExitVerificationFailed;
}

int run_verify_trials(const CliRequest& req, std::ostream& out) {
    if (req.trials < 1) throw InvalidInput("verify --trials must be positive");
    const std::int64_t terms = req.terms > 0 ? req.terms : kDefaultVerifyTerms;
    std::mt19937_64 rng(req.seed);
    int passed = 0;
    json failures = json::array();
    for (int t = 0; t < req.trials; ++t) {
        const auto [q1, q2] = random_shift_pair(rng, req.max_den);
        const ProductSeriesSpec spec({q1, q2}, req.precision_bits);
        const EvalResult prop = perturbed(pair_sum(q1, q2, req.precision_bits), req.perturb);
        const EvalResult dig = pair_sum_digamma(q1, q2, req.precision_bits);
        const TruncationReport oracle = truncated_sum(spec, terms);

        std::string reason;
        const Real gap = abs(prop.value - dig.value);
        if (gap > Real::from_long_double(prop.error_bound + dig.error_bound, 64)) reason = "closed forms disagree";
        if (!compare(prop, oracle).pass) reason = "closed form outside oracle interval";
        if (!compare(dig, oracle).pass) reason = "digamma value outside oracle interval";
        if (reason.empty()) {
            ++passed;
        } else {
            failures.push_back(json{{"trial", t},
                                    {"shifts", shifts_json(spec.shifts())},
                                    {"method", std::string(method_name(prop.method))},
                                    {"reason", reason}});
        }
    }
    json j;
    j["trials"] = req.trials;
    j["seed"] = req.seed;
    j["max_den"] = req.max_den;
    j["N"] = terms;
    j["passed"] = passed;
    j["failed"] = req.trials - passed;
    j["failures"] = std::move(failures);
    emit(j, req.format, out);
    return passed == req.trials ? kExitOk : kExitVerificationFailed;
}

template <typename Fn>
double seconds_per_call(Fn&& fn) {
    using clock = std::chrono::steady_clock;
    int reps = 0;
    const auto start = clock::now();
    auto elapsed = clock::duration::zero();
    do {
        fn();
        ++reps;
        elapsed = clock::now() - start;
    } while (elapsed < std::chrono::milliseconds(50));
    return std::chrono::duration<double>(elapsed).count() / reps;
}

int run_bench(const CliRequest& req, std::ostream& out) {
    if (!(req.eps > 0.0)) throw InvalidInput("bench --eps must be positive");
    const ProductSeriesSpec spec(req.shifts, req.precision_bits);
    EvalResult closed;
    const double closed_s = seconds_per_call([&] { closed = evaluate(spec); });

    // Smallest power-of-two N whose tail bracket is narrower than 2 eps; the
    // midpoint estimate is then within eps.
    const Real target = Real::from_long_double(2.0L * req.eps, 128);
    const auto k1 = static_cast<std::int64_t>(spec.size() - 1);
    auto integral_bound = [&](const Rational& base) {
        Rational p(1);
        for (std::int64_t i = 0; i < k1; ++i) p *= base;
        return Real::from_rational(Rational(1) / (p * Rational(k1)), 128);
    };
    std::int64_t terms = 2;
    while (terms < kBenchTermCap) {
        const Real width = integral_bound(Rational(terms) + spec.min_shift()) -
                           integral_bound(Rational(terms + 1) + spec.max_shift());
        if (width <= target) break;
        terms *= 2;
    }
    const auto start = std::chrono::steady_clock::now();
    const TruncationReport oracle = truncated_sum(spec, terms);
    const double oracle_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Real mid = (oracle.low() + oracle.high()) / 2;

    json j;
    j["shifts"] = shifts_json(spec.shifts());
    j["eps"] = req.eps;
    j["closed"] = json{{"value", closed.value.str()},
                       {"error_bound", err_str(closed.error_bound)},
                       {"method", std::string(method_name(closed.method))},
                       {"seconds", closed_s}};
    j["oracle"] = json{{"value", mid.str(30)},
                       {"N", terms},
                       {"capped", terms >= kBenchTermCap},
                       {"seconds", oracle_s}};
    j["speedup"] = closed_s > 0 ? oracle_s / closed_s : 0.0;
    emit(j, req.format, out);
    return kExitOk;
}

}  // namespace

std::vector<Rational> parse_shift_list(std::string_view text) {
    std::vector<Rational> out;
    for (const auto part : split(text, ',')) out.push_back(Rational::parse(part));
    return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    for (const auto part : split(text, ',')) {
        const Rational r = Rational::parse(part);
        if (!r.is_integer()) throw InvalidInput("expected an integer, got '" + std::string(part) + "'");
        out.push_back(to_int64(r.num(), "integer"));
    }
    return out;
}

unsigned default_precision_from_env() {
    const char* env = std::getenv(kPrecisionEnv);
    if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
    const Rational r = Rational::parse(env);
    if (!r.is_integer() || r.sign() <= 0) throw InvalidInput(std::string(kPrecisionEnv) + " must be a positive integer");
    const auto bits = static_cast<unsigned>(to_int64(r.num(), kPrecisionEnv));
    require_precision(bits);
    return bits;
}

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
    try {
        require_precision(request.precision_bits);
        switch (request.command) {
            case Command::Eval: return run_eval(request, out);
            case Command::Digamma: return run_digamma(request, out);
            case Command::Zeta: return run_zeta(request, out);
            case Command::Verify:
                return request.shifts.empty() ? run_verify_trials(request, out) : run_verify_single(request, out);
            case Command::Bench: return run_bench(request, out);
        }
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace mengoli::cli

#include "rcm/law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rcm/errors.hpp"
#include "rcm/regression.hpp"

namespace rcm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError("law: " + msg);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

LawSpec LawSpec::constant(double v) {
    require(v >= 0.0 && v <= 1.0, "constant value must lie in [0,1]");
    LawSpec l;
    l.kind_ = LawKind::kConstant;
    l.p_ = {v};
    return l;
}

LawSpec LawSpec::bernoulli(double p, double v) {
    require(p >= 0.0 && p <= 1.0, "bernoulli p must lie in [0,1]");
    require(v > 0.0 && v <= 1.0, "bernoulli v must lie in (0,1]");
    LawSpec l;
    l.kind_ = LawKind::kBernoulli;
    l.p_ = {p, v};
    return l;
}

LawSpec LawSpec::polynomial_tail(double gamma) {
    require(std::isfinite(gamma) && gamma > 0.0, "tail exponent gamma must be > 0");
    LawSpec l;
    l.kind_ = LawKind::kPolynomialTail;
    l.p_ = {gamma};
    return l;
}

LawSpec LawSpec::uniform(double a, double b) {
    require(a >= 0.0 && b <= 1.0 && a < b, "uniform needs 0 <= a < b <= 1");
    LawSpec l;
    l.kind_ = LawKind::kUniform;
    l.p_ = {a, b};
    return l;
}

LawSpec LawSpec::histogram(std::vector<double> breakpoints,
                           std::vector<double> masses) {
    require(breakpoints.size() >= 2, "histogram needs at least two breakpoints");
    require(masses.size() + 1 == breakpoints.size(),
            "histogram needs one mass per bin");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        require(breakpoints[i] >= 0.0 && breakpoints[i] <= 1.0,
                "histogram breakpoints must lie in [0,1]");
        if (i > 0)
            require(breakpoints[i] > breakpoints[i - 1],
                    "histogram breakpoints must increase strictly");
    }
    double total = 0.0;
    for (double m : masses) {
        require(m >= 0.0, "histogram masses must be nonnegative");
        total += m;
    }
    require(total > 0.0, "histogram needs positive total mass");
    for (double& m : masses) m /= total;
    LawSpec l;
    l.kind_ = LawKind::kHistogram;
    l.breakpoints_ = std::move(breakpoints);
    l.masses_ = std::move(masses);
    return l;
}

double LawSpec::sample(CounterStream& rng) const {
    switch (kind_) {
    case LawKind::kConstant:
        return p_[0];
    case LawKind::kBernoulli:
        return rng.next_unit() < p_[0] ? p_[1] : 0.0;
    case LawKind::kPolynomialTail:
        // Inverse CDF of F(u) = u^gamma.
        return std::pow(rng.next_unit(), 1.0 / p_[0]);
    case LawKind::kUniform:
        return p_[0] + (p_[1] - p_[0]) * rng.next_unit();
    case LawKind::kHistogram: {
        double u = rng.next_unit();
        double cum = 0.0;
        for (std::size_t i = 0; i < masses_.size(); ++i) {
            if (u < cum + masses_[i] || i + 1 == masses_.size()) {
                double frac = masses_[i] > 0.0 ? (u - cum) / masses_[i] : 0.0;
                frac = std::clamp(frac, 0.0, 1.0);
                return breakpoints_[i] +
                       (breakpoints_[i + 1] - breakpoints_[i]) * frac;
            }
            cum += masses_[i];
        }
        return breakpoints_.back();
    }
    }
    return 0.0;
}

double LawSpec::cdf(double u) const {
    switch (kind_) {
    case LawKind::kConstant:
        return u >= p_[0] ? 1.0 : 0.0;
    case LawKind::kBernoulli: {
        double c = u >= 0.0 ? 1.0 - p_[0] : 0.0;
        if (u >= p_[1]) c += p_[0];
        return c;
    }
    case LawKind::kPolynomialTail:
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        return std::pow(u, p_[0]);
    case LawKind::kUniform:
        return std::clamp((u - p_[0]) / (p_[1] - p_[0]), 0.0, 1.0);
    case LawKind::kHistogram: {
        if (u <= breakpoints_.front()) return 0.0;
        if (u >= breakpoints_.back()) return 1.0;
        double c = 0.0;
        for (std::size_t i = 0; i < masses_.size(); ++i) {
            if (u >= breakpoints_[i + 1]) {
                c += masses_[i];
            } else {
                c += masses_[i] * (u - breakpoints_[i]) /
                     (breakpoints_[i + 1] - breakpoints_[i]);
                break;
            }
        }
        return c;
    }
    }
    return 0.0;
}

double LawSpec::prob_in(double lo, double hi) const {
    if (hi < lo) return 0.0;
    switch (kind_) {
    case LawKind::kConstant:
        return (p_[0] >= lo && p_[0] <= hi) ? 1.0 : 0.0;
    case LawKind::kBernoulli: {
        double pr = 0.0;
        if (p_[1] >= lo && p_[1] <= hi) pr += p_[0];
        if (lo <= 0.0 && hi >= 0.0) pr += 1.0 - p_[0];
        return pr;
    }
    default:
        return std::max(0.0, cdf(hi) - cdf(lo));
    }
}

double LawSpec::prob_ge(double xi) const {
    switch (kind_) {
    case LawKind::kConstant:
        return p_[0] >= xi ? 1.0 : 0.0;
    case LawKind::kBernoulli: {
        double pr = p_[1] >= xi ? p_[0] : 0.0;
        if (xi <= 0.0) pr += 1.0 - p_[0];
        return pr;
    }
    default:
        return 1.0 - cdf(xi);
    }
}

double LawSpec::mean() const {
    switch (kind_) {
    case LawKind::kConstant:
        return p_[0];
    case LawKind::kBernoulli:
        return p_[0] * p_[1];
    case LawKind::kPolynomialTail:
        return p_[0] / (p_[0] + 1.0);
    case LawKind::kUniform:
        return 0.5 * (p_[0] + p_[1]);
    case LawKind::kHistogram: {
        double m = 0.0;
        for (std::size_t i = 0; i < masses_.size(); ++i)
            m += masses_[i] * 0.5 * (breakpoints_[i] + breakpoints_[i + 1]);
        return m;
    }
    }
    return 0.0;
}

std::vector<double> LawSpec::flat_params() const {
    if (kind_ == LawKind::kHistogram) {
        std::vector<double> out = breakpoints_;
        out.insert(out.end(), masses_.begin(), masses_.end());
        return out;
    }
    return p_;
}

LawSpec LawSpec::from_tag_params(std::uint32_t tag, std::span<const double> p) {
    switch (static_cast<LawKind>(tag)) {
    case LawKind::kConstant:
        require(p.size() == 1, "constant law takes 1 parameter");
        return constant(p[0]);
    case LawKind::kBernoulli:
        require(p.size() == 2, "bernoulli law takes 2 parameters");
        return bernoulli(p[0], p[1]);
    case LawKind::kPolynomialTail:
        require(p.size() == 1, "polynomial-tail law takes 1 parameter");
        return polynomial_tail(p[0]);
    case LawKind::kUniform:
        require(p.size() == 2, "uniform law takes 2 parameters");
        return uniform(p[0], p[1]);
    case LawKind::kHistogram: {
        require(p.size() >= 3 && p.size() % 2 == 1,
                "histogram law takes 2m+1 parameters");
        std::size_t m = (p.size() - 1) / 2;
        std::vector<double> breaks(p.begin(), p.begin() + m + 1);
        std::vector<double> masses(p.begin() + m + 1, p.end());
        return histogram(std::move(breaks), std::move(masses));
    }
    }
    throw ConfigError("law: unknown tag " + std::to_string(tag));
}

namespace {

std::vector<std::pair<std::string, std::string>>
parse_kv(const std::string& body, char item_sep) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, item_sep)) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("law: expected key=value, got '" + item + "'");
        kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return kv;
}

double to_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw ConfigError("law: trailing junk in '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ConfigError("law: not a number: '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("law: number out of range: '" + s + "'");
    }
}

std::vector<double> to_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '|')) out.push_back(to_double(item));
    return out;
}

} // namespace

LawSpec LawSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto kv = parse_kv(body, ',');
    auto get = [&](const std::string& key) -> const std::string& {
        for (auto& [k, v] : kv)
            if (k == key) return v;
        throw ConfigError("law: missing parameter '" + key + "' in '" + text + "'");
    };
    auto expect_keys = [&](std::initializer_list<const char*> keys) {
        for (auto& [k, v] : kv) {
            bool known = false;
            for (const char* key : keys)
                if (k == key) known = true;
            if (!known)
                throw ConfigError("law: unknown parameter '" + k + "' in '" + text + "'");
        }
    };
    if (kind == "constant") {
        expect_keys({"v"});
        return constant(to_double(get("v")));
    }
    if (kind == "bernoulli") {
        expect_keys({"p", "v"});
        return bernoulli(to_double(get("p")), to_double(get("v")));
    }
    if (kind == "lp") {
        expect_keys({"gamma"});
        return polynomial_tail(to_double(get("gamma")));
    }
    if (kind == "uniform") {
        expect_keys({"a", "b"});
        return uniform(to_double(get("a")), to_double(get("b")));
    }
    if (kind == "histogram") {
        expect_keys({"breaks", "masses"});
        return histogram(to_double_list(get("breaks")),
                         to_double_list(get("masses")));
    }
    throw ConfigError("law: unknown kind '" + kind + "'");
}

std::string LawSpec::to_string() const {
    switch (kind_) {
    case LawKind::kConstant:
        return "constant:v=" + fmt(p_[0]);
    case LawKind::kBernoulli:
        return "bernoulli:p=" + fmt(p_[0]) + ",v=" + fmt(p_[1]);
    case LawKind::kPolynomialTail:
        return "lp:gamma=" + fmt(p_[0]);
    case LawKind::kUniform:
        return "uniform:a=" + fmt(p_[0]) + ",b=" + fmt(p_[1]);
    case LawKind::kHistogram: {
        std::string b, m;
        for (std::size_t i = 0; i < breakpoints_.size(); ++i)
            b += (i ? "|" : "") + fmt(breakpoints_[i]);
        for (std::size_t i = 0; i < masses_.size(); ++i)
            m += (i ? "|" : "") + fmt(masses_[i]);
        return "histogram:breaks=" + b + ",masses=" + m;
    }
    }
    return "?";
}

TailExponent tail_exponent(const LawSpec& law) {
    switch (law.kind()) {
    case LawKind::kPolynomialTail:
        return {law.flat_params()[0], true};
    case LawKind::kUniform:
        // Density constant near 0 behaves like gamma = 1; no mass near 0
        // otherwise.
        return law.flat_params()[0] == 0.0 ? TailExponent{1.0, true}
                                           : TailExponent{kInf, false};
    case LawKind::kConstant:
    case LawKind::kBernoulli:
        // Atoms sit at 0 or at fixed positive values; the window [u, 2u]
        // eventually misses them.
        return {kInf, false};
    case LawKind::kHistogram: {
        // Numeric slope of log P(omega in [u,2u]) vs log u over u = 2^-j.
        std::vector<double> xs, ys;
        for (int j = 10; j <= 20; ++j) {
            double u = std::ldexp(1.0, -j);
            double pr = law.prob_in(u, 2 * u);
            if (pr <= 0.0) return {kInf, false};
            xs.push_back(std::log(u));
            ys.push_back(std::log(pr));
        }
        return {fit_line(xs, ys).slope, true};
    }
    }
    return {kInf, false};
}

ConditionReport check_condition_c(const LawSpec& law, int d, double alpha) {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::invalid_argument("check_condition_c: alpha must lie in (0, 1/2)");
    if (d < 1) throw std::invalid_argument("check_condition_c: d must be >= 1");
    TailExponent ex = tail_exponent(law);
    ConditionReport rep;
    rep.exponent = ex;
    if (!ex.finite) {
        rep.satisfied = false;
        rep.beta = -kInf;
        return rep;
    }
    double weighted = (4.0 * d - 2.0) * ex.value;
    rep.satisfied = weighted < alpha;
    rep.beta = alpha - weighted;
    return rep;
}

std::optional<double> bond_percolation_pc(int d) {
    switch (d) {
    case 1: return 1.0;
    case 2: return 0.5; // exact
    case 3: return 0.2488126;
    case 4: return 0.1601314;
    case 5: return 0.1181718;
    case 6: return 0.0942019;
    default: return std::nullopt;
    }
}

} // namespace rcm

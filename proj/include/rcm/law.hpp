#ifndef RCM_LAW_HPP
#define RCM_LAW_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcm/rng.hpp"

namespace rcm {

enum class LawKind : std::uint32_t {
    kConstant = 0,
    kBernoulli = 1,
    kPolynomialTail = 2,
    kUniform = 3,
    kHistogram = 4,
};

/// Distribution of a single edge conductance. All variants put full mass on
/// [0, 1]; parameters are validated at construction.
class LawSpec {
  public:
    static LawSpec constant(double v);
    /// Mass p at v in (0,1], mass 1-p at 0.
    static LawSpec bernoulli(double p, double v);
    /// CDF F(u) = u^gamma on [0,1], gamma > 0.
    static LawSpec polynomial_tail(double gamma);
    static LawSpec uniform(double a, double b);
    /// Piecewise-uniform density: breakpoints b_0 < ... < b_m in [0,1],
    /// masses[i] on [b_i, b_i+1] (normalized internally).
    static LawSpec histogram(std::vector<double> breakpoints,
                             std::vector<double> masses);

    /// CLI syntax: constant:v=1 | bernoulli:p=0.8,v=1 | lp:gamma=0.05 |
    /// uniform:a=0,b=1
    static LawSpec parse(const std::string& text);
    std::string to_string() const;

    LawKind kind() const { return kind_; }
    double sample(CounterStream& rng) const;

    /// P(omega <= u).
    double cdf(double u) const;
    /// P(omega in [lo, hi]), closed interval, atoms included.
    double prob_in(double lo, double hi) const;
    /// P(omega >= xi).
    double prob_ge(double xi) const;
    double mean() const;

    // Flat serialization for environment file headers.
    std::uint32_t tag() const { return static_cast<std::uint32_t>(kind_); }
    std::vector<double> flat_params() const;
    static LawSpec from_tag_params(std::uint32_t tag, std::span<const double> p);

    bool operator==(const LawSpec& other) const = default;

  private:
    LawSpec() = default;
    LawKind kind_ = LawKind::kConstant;
    // constant: {v}; bernoulli: {p, v}; polynomial_tail: {gamma};
    // uniform: {a, b}; histogram: breakpoints_/masses_ below.
    std::vector<double> p_;
    std::vector<double> breakpoints_;
    std::vector<double> masses_; // normalized
};

/// lim_{u->0} log P(omega in [u, 2u]) / log u. `finite == false` means the
/// law has no mass near 0 and the exponent is the +infinity sentinel.
struct TailExponent {
    double value;
    bool finite;
};

TailExponent tail_exponent(const LawSpec& law);

/// The heavy-tail condition (4d-2) * tail_exponent < alpha, with the margin
/// beta = alpha - (4d-2) * tail_exponent that drives the trap-encounter rate.
struct ConditionReport {
    bool satisfied;
    double beta;
    TailExponent exponent;
};

ConditionReport check_condition_c(const LawSpec& law, int d, double alpha);

/// Published critical probability for Bernoulli bond percolation on Z^d
/// (d = 2 exact, 3..6 numerical). Advisory only.
std::optional<double> bond_percolation_pc(int d);

} // namespace rcm

#endif

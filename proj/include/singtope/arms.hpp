#pragma once

// Negative continued fractions of star arms and the multiplicity identities
// they impose on cycles:
//
//   [a_1; a_2; ...; a_l] = a_1 - 1/(a_2 - 1/(... - 1/a_l))
//
// For an arm with e_j = -weight (center outward), p_j/q_j is the value of
// the suffix starting at j. A cycle has Z.E = 0 along the whole arm iff
// m_center = m_end * p_1 and m_j = m_end * p_{j+1} (with p_{k+1} = 1).

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singtope/error.hpp"
#include "singtope/graph.hpp"
#include "singtope/laufer.hpp"

namespace singtope {

/// num/den in lowest terms, den >= 1.
class Fraction {
public:
    Fraction(std::int64_t num = 0, std::int64_t den = 1)
    {
        if (den == 0)
            throw Error("fraction with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Fraction&, const Fraction&) = default;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Exact value of [a_1; ...; a_l], folded right to left.
inline Fraction cont_frac(const std::vector<std::int64_t>& coeffs)
{
    if (coeffs.empty())
        throw Error("continued fraction needs at least one coefficient");
    Fraction value(coeffs.back());
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        if (value.num() == 0)
            throw Error("continued fraction divides by zero at position " + std::to_string(i + 2));
        // a - 1/(p/q) = (a p - q) / p
        value = Fraction(coeffs[i] * value.num() - value.den(), value.num());
    }
    return value;
}

/// Suffix fractions p_j/q_j for an arm given by its (negative) weights,
/// via p_j = e_j p_{j+1} - p_{j+2} and q_j = p_{j+1}.
inline std::vector<Fraction> arm_fractions(const std::vector<int>& weights)
{
    for (int w : weights)
        if (-w < 2)
            throw Error("arm is not minimal: weight " + std::to_string(w) + " > -2");
    const std::size_t k = weights.size();
    std::vector<std::int64_t> p(k + 2, 0);
    p[k] = 1;     // p_{k+1}
    p[k + 1] = 0; // p_{k+2}
    for (std::size_t j = k; j-- > 0;)
        p[j] = static_cast<std::int64_t>(-weights[j]) * p[j + 1] - p[j + 2];
    std::vector<Fraction> out;
    out.reserve(k);
    for (std::size_t j = 0; j < k; ++j)
        out.emplace_back(p[j], p[j + 1]);
    return out;
}

struct ArmReport {
    std::size_t arm = 0;
    std::vector<std::int64_t> e;       ///< -weight, center outward
    std::vector<Fraction> fractions;   ///< fractions[j] is the suffix from j
    std::int64_t end_mult = 0;
    bool identity_holds = false;       ///< multiplicity identities
    bool dots_zero = false;            ///< Z.E_v = 0 along the arm
};

struct MulteqReport {
    std::vector<ArmReport> arms;
    bool identities = true; ///< all arms satisfy the identities
    bool dots_zero = true;  ///< all arm vertices have Z.E_v = 0
    bool holds = true;      ///< the biconditional, arm by arm
};

inline MulteqReport check_multeq(const WeightedGraph& g, const StarDecomposition& star, const Cycle& z)
{
    check_length(g, z);
    MulteqReport report;
    const std::int64_t m = z[star.center];
    for (std::size_t i = 0; i < star.arms.size(); ++i) {
        const auto& arm = star.arms[i];
        ArmReport ar;
        ar.arm = i;
        for (VertexId v : arm)
            ar.e.push_back(-static_cast<std::int64_t>(g.weight(v)));
        ar.fractions = arm_fractions(arm_weights(g, arm));
        ar.end_mult = z[arm.back()];
        ar.identity_holds = (m == ar.end_mult * ar.fractions[0].num());
        for (std::size_t j = 0; j < arm.size(); ++j) {
            const std::int64_t p_next = j + 1 < arm.size() ? ar.fractions[j + 1].num() : 1;
            if (z[arm[j]] != ar.end_mult * p_next)
                ar.identity_holds = false;
        }
        ar.dots_zero = true;
        for (VertexId v : arm)
            if (dot(g, z, v) != 0)
                ar.dots_zero = false;
        report.identities = report.identities && ar.identity_holds;
        report.dots_zero = report.dots_zero && ar.dots_zero;
        report.holds = report.holds && (ar.identity_holds == ar.dots_zero);
        report.arms.push_back(std::move(ar));
    }
    return report;
}

struct LcmReport {
    std::int64_t center_mult = 0;
    std::int64_t lcm = 1;
    std::vector<std::int64_t> p;
    bool holds = false;
};

inline LcmReport lcm_report(const WeightedGraph& g, const StarDecomposition& star, const Cycle& zmin)
{
    check_length(g, zmin);
    LcmReport r;
    r.center_mult = zmin[star.center];
    for (const auto& arm : star.arms) {
        const std::int64_t p = arm_fractions(arm_weights(g, arm)).front().num();
        r.p.push_back(p);
        r.lcm = std::lcm(r.lcm, p);
    }
    r.holds = r.center_mult == r.lcm;
    return r;
}

/// Central multiplicity of Z_min against lcm of the arm numerators p_i.
inline LcmReport check_lcm_property(const WeightedGraph& g, const StarDecomposition& star,
                                    const LauferOptions& opt = {})
{
    return lcm_report(g, star, laufer_zmin(g, opt).final_cycle);
}

inline nlohmann::json arm_report_to_json(const ArmReport& a)
{
    nlohmann::json p = nlohmann::json::array(), q = nlohmann::json::array();
    for (const auto& f : a.fractions) {
        p.push_back(f.num());
        q.push_back(f.den());
    }
    return {{"arm", a.arm},
            {"p", p},
            {"q", q},
            {"end_mult", a.end_mult},
            {"identity", a.identity_holds},
            {"dots_zero", a.dots_zero}};
}

} // namespace singtope

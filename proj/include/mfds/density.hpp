#ifndef MFDS_DENSITY_HPP
#define MFDS_DENSITY_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mfds/graph.hpp"

namespace mfds {

enum class HereditaryClass { hereditary, not_hereditary, unknown };

class InvalidDensityError : public std::runtime_error {
public:
    explicit InvalidDensityError(const std::string& what) : std::runtime_error(what) {}
};

inline long long pairs_of(long long i) { return i * (i - 1) / 2; }

/// Density function f(i) bounding the minimum edge count of an i-vertex
/// f-dense graph, with complement slack g_f(i) = C(i,2) - f(i).
///
/// The built-in families compare against integer edge counts with exact
/// rational arithmetic (gamma is stored as a ratio of integers), so
/// feasibility never flips on float rounding. Custom oracles are compared
/// in floating point with no tolerance.
class DensityFunction {
public:
    enum class Family { quasi, defective, custom };

    static DensityFunction quasi(long long num, long long den) {
        if (den <= 0 || num <= 0 || num > den)
            throw InvalidDensityError("quasi: gamma must be in (0, 1]");
        long long g = std::gcd(num, den);
        DensityFunction d;
        d.family_ = Family::quasi;
        d.num_ = num / g;
        d.den_ = den / g;
        return d;
    }

    /// Parses a terminating decimal like "0.85" into an exact ratio.
    static DensityFunction quasi(const std::string& gamma) {
        long long num = 0, den = 1;
        size_t i = 0;
        bool any = false, dot = false;
        for (; i < gamma.size(); ++i) {
            char c = gamma[i];
            if (c == '.') {
                if (dot) throw InvalidDensityError("quasi: bad gamma '" + gamma + "'");
                dot = true;
            } else if (c >= '0' && c <= '9') {
                num = num * 10 + (c - '0');
                if (dot) den *= 10;
                any = true;
            } else {
                throw InvalidDensityError("quasi: bad gamma '" + gamma + "'");
            }
            if (den > 1000000000000LL) throw InvalidDensityError("quasi: gamma has too many digits");
        }
        if (!any) throw InvalidDensityError("quasi: bad gamma '" + gamma + "'");
        return quasi(num, den);
    }

    static DensityFunction defective(long long s) {
        if (s < 0) throw InvalidDensityError("defective: s must be non-negative");
        DensityFunction d;
        d.family_ = Family::defective;
        d.s_ = s;
        return d;
    }

    static DensityFunction custom(std::function<double(long long)> oracle,
                                  HereditaryClass declared = HereditaryClass::unknown) {
        DensityFunction d;
        d.family_ = Family::custom;
        d.oracle_ = std::move(oracle);
        d.declared_ = declared;
        return d;
    }

    Family family() const { return family_; }
    long long gamma_num() const { return num_; }
    long long gamma_den() const { return den_; }
    long long defect() const { return s_; }

    double f_value(long long i) const {
        switch (family_) {
            case Family::quasi:
                return static_cast<double>(num_) * static_cast<double>(i) * static_cast<double>(i - 1) /
                       (2.0 * static_cast<double>(den_));
            case Family::defective:
                return static_cast<double>(pairs_of(i) - s_);
            case Family::custom: {
                double f = oracle_(i);
                if (f > static_cast<double>(pairs_of(i)))
                    throw InvalidDensityError("custom oracle returned f(" + std::to_string(i) +
                                              ") > C(i,2)");
                return f;
            }
        }
        return 0.0;
    }

    double g_value(long long i) const { return static_cast<double>(pairs_of(i)) - f_value(i); }

    /// edges >= f(i), exact for the built-in families.
    bool edges_suffice(long long edges, long long i) const {
        switch (family_) {
            case Family::quasi:
                return 2 * edges * den_ >= num_ * i * (i - 1);
            case Family::defective:
                return edges >= pairs_of(i) - s_;
            case Family::custom:
                return static_cast<double>(edges) >= f_value(i);
        }
        return false;
    }

    /// slack <= g_f(i), exact for the built-in families. This is the
    /// comparison the bounding algorithms run on prefix sums of missing-edge
    /// weights.
    bool slack_within(long long slack, long long i) const {
        switch (family_) {
            case Family::quasi:
                return 2 * slack * den_ <= (den_ - num_) * i * (i - 1);
            case Family::defective:
                return slack <= s_;
            case Family::custom:
                return static_cast<double>(slack) <= g_value(i);
        }
        return false;
    }

    HereditaryClass classify_hereditary() const {
        switch (family_) {
            case Family::quasi:
                // g_f(i) = (1-gamma) C(i,2): constant zero at gamma=1,
                // strictly increasing otherwise.
                return num_ == den_ ? HereditaryClass::hereditary : HereditaryClass::not_hereditary;
            case Family::defective:
                return HereditaryClass::hereditary;  // g_f constant s
            case Family::custom:
                return declared_;
        }
        return HereditaryClass::unknown;
    }

    /// Whether the hereditary pruning rules may be applied. Unknown custom
    /// classifications are treated as not hereditary, which disables the
    /// pruning but preserves correctness.
    bool hereditary_rules() const { return classify_hereditary() == HereditaryClass::hereditary; }

    /// Probes f(i) <= C(i,2) for i in [0, max_i]; throws on violation.
    void validate(long long max_i) const {
        if (family_ != Family::custom) return;  // built-ins hold by construction
        for (long long i = 0; i <= max_i; ++i) f_value(i);
    }

    std::string describe() const {
        switch (family_) {
            case Family::quasi:
                return "quasi:" + std::to_string(static_cast<double>(num_) / static_cast<double>(den_));
            case Family::defective:
                return "defective:" + std::to_string(s_);
            case Family::custom:
                return "custom";
        }
        return "?";
    }

private:
    Family family_ = Family::defective;
    long long num_ = 0, den_ = 1;  // quasi gamma = num/den
    long long s_ = 0;              // defective
    std::function<double(long long)> oracle_;
    HereditaryClass declared_ = HereditaryClass::unknown;
};

/// |E(S)| >= f(|S|). The empty set and singletons are always f-dense since
/// f(i) <= C(i,2) = 0 for i <= 1.
inline bool is_fdense(const Graph& g, const VertexSet& s, const DensityFunction& df) {
    return df.edges_suffice(edge_count(g, s), s.size());
}

/// Parses the CLI density syntax: "quasi:0.9" or "defective:3".
inline DensityFunction parse_density(const std::string& spec) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw InvalidDensityError("density spec '" + spec + "' (expected family:parameter)");
    std::string family = spec.substr(0, colon);
    std::string param = spec.substr(colon + 1);
    if (family == "quasi") return DensityFunction::quasi(param);
    if (family == "defective") {
        try {
            size_t used = 0;
            long long s = std::stoll(param, &used);
            if (used != param.size()) throw std::invalid_argument(param);
            return DensityFunction::defective(s);
        } catch (const std::logic_error&) {
            throw InvalidDensityError("defective: bad parameter '" + param + "'");
        }
    }
    throw InvalidDensityError("unknown density family '" + family + "'");
}

}  // namespace mfds

#endif  // MFDS_DENSITY_HPP

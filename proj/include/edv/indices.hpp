#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edv/edge_division.hpp"
#include "edv/families.hpp"
#include "edv/tree.hpp"

namespace edv {

/// Exact rational over 64-bit integers, kept normalized with den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw Error("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integral() const noexcept { return den == 1; }

    long long to_integer() const {
        if (!is_integral()) throw Error("rational " + to_string() + " is not integral");
        return num;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        return is_integral() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.num * b.den <=> b.num * a.den;
    }
};

/// Exact binomial coefficient; throws if the value exceeds 64-bit range.
inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 value = 1;
    for (int i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
        if (value > static_cast<__int128>(std::numeric_limits<long long>::max()))
            throw Error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
    return static_cast<long long>(value);
}

enum class IndexKind {
    Wiener,
    ModifiedWiener,   // parameter lambda
    VariableWiener,   // parameter lambda
    SteinerKWiener,   // parameter k
    HyperWienerEdge,  // edge-additive form; hyper_wiener_pairwise is the distance form
    WienerHosoya,
    DegreeDistance,
    Gutman,
    Abc2,
};

enum class ValueKind { ExactInteger, ExactRational, Floating };

/// A named edge-additive index together with its parameter.
struct IndexSpec {
    IndexKind kind = IndexKind::Wiener;
    double lambda = 0.0;
    int k = 0;

    static IndexSpec wiener() { return {IndexKind::Wiener, 0.0, 0}; }
    static IndexSpec modified_wiener(double lambda) { return {IndexKind::ModifiedWiener, lambda, 0}; }
    static IndexSpec variable_wiener(double lambda) { return {IndexKind::VariableWiener, lambda, 0}; }
    static IndexSpec steiner(int k) { return {IndexKind::SteinerKWiener, 0.0, k}; }
    static IndexSpec hyper_wiener_edge() { return {IndexKind::HyperWienerEdge, 0.0, 0}; }
    static IndexSpec wiener_hosoya() { return {IndexKind::WienerHosoya, 0.0, 0}; }
    static IndexSpec degree_distance() { return {IndexKind::DegreeDistance, 0.0, 0}; }
    static IndexSpec gutman() { return {IndexKind::Gutman, 0.0, 0}; }
    static IndexSpec abc2() { return {IndexKind::Abc2, 0.0, 0}; }

    ValueKind value_kind() const {
        switch (kind) {
            case IndexKind::Wiener:
            case IndexKind::SteinerKWiener:
            case IndexKind::WienerHosoya:
            case IndexKind::DegreeDistance:
            case IndexKind::Gutman:
                return ValueKind::ExactInteger;
            case IndexKind::HyperWienerEdge:
                return ValueKind::ExactRational;
            case IndexKind::ModifiedWiener:
            case IndexKind::VariableWiener:
            case IndexKind::Abc2:
                return ValueKind::Floating;
        }
        return ValueKind::Floating;
    }

    /// CLI spelling: wiener, mwiener:L, vwiener:L, steiner:K, hyperwiener-edge,
    /// wiener-hosoya, degree-distance, gutman, abc2.
    std::string name() const {
        switch (kind) {
            case IndexKind::Wiener: return "wiener";
            case IndexKind::ModifiedWiener: return "mwiener:" + format_number(lambda);
            case IndexKind::VariableWiener: return "vwiener:" + format_number(lambda);
            case IndexKind::SteinerKWiener: return "steiner:" + std::to_string(k);
            case IndexKind::HyperWienerEdge: return "hyperwiener-edge";
            case IndexKind::WienerHosoya: return "wiener-hosoya";
            case IndexKind::DegreeDistance: return "degree-distance";
            case IndexKind::Gutman: return "gutman";
            case IndexKind::Abc2: return "abc2";
        }
        return "?";
    }

    static IndexSpec parse(std::string_view text) {
        const auto colon = text.find(':');
        const std::string_view head = text.substr(0, colon);
        const std::string_view param =
            colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
        auto need_number = [&]() -> double {
            if (param.empty()) throw Error("index '" + std::string(head) + "' needs a parameter");
            try {
                std::size_t used = 0;
                const double v = std::stod(std::string(param), &used);
                if (used != param.size() || !std::isfinite(v)) throw Error("");
                return v;
            } catch (const Error&) {
                throw Error("invalid index parameter '" + std::string(param) + "'");
            } catch (const std::exception&) {
                throw Error("invalid index parameter '" + std::string(param) + "'");
            }
        };
        if (head == "wiener") return wiener();
        if (head == "mwiener") return modified_wiener(need_number());
        if (head == "vwiener") return variable_wiener(need_number());
        if (head == "steiner") {
            const double v = need_number();
            const int k = static_cast<int>(v);
            if (v != k || k < 2) throw Error("steiner index needs an integer k >= 2");
            return steiner(k);
        }
        if (head == "hyperwiener-edge") return hyper_wiener_edge();
        if (head == "wiener-hosoya") return wiener_hosoya();
        if (head == "degree-distance") return degree_distance();
        if (head == "gutman") return gutman();
        if (head == "abc2") return abc2();
        throw Error("unknown index '" + std::string(head) + "'");
    }

private:
    static std::string format_number(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%g", v);
        return buf;
    }
};

/// Index value in its natural arithmetic: exact integer, exact rational or
/// floating point.
class IndexValue {
public:
    static IndexValue integer(long long v) { return IndexValue(v); }
    static IndexValue rational(Rational v) { return IndexValue(v); }
    static IndexValue floating(double v) { return IndexValue(v); }

    ValueKind kind() const {
        if (std::holds_alternative<long long>(v_)) return ValueKind::ExactInteger;
        if (std::holds_alternative<Rational>(v_)) return ValueKind::ExactRational;
        return ValueKind::Floating;
    }

    bool is_exact() const { return kind() != ValueKind::Floating; }

    long long as_integer() const {
        if (const auto* i = std::get_if<long long>(&v_)) return *i;
        if (const auto* r = std::get_if<Rational>(&v_)) return r->to_integer();
        throw Error("floating index value is not exact");
    }

    Rational as_rational() const {
        if (const auto* i = std::get_if<long long>(&v_)) return Rational(*i);
        if (const auto* r = std::get_if<Rational>(&v_)) return *r;
        throw Error("floating index value is not exact");
    }

    double as_double() const {
        if (const auto* i = std::get_if<long long>(&v_)) return static_cast<double>(*i);
        if (const auto* r = std::get_if<Rational>(&v_)) return r->to_double();
        return std::get<double>(v_);
    }

    std::string to_string() const {
        if (const auto* i = std::get_if<long long>(&v_)) return std::to_string(*i);
        if (const auto* r = std::get_if<Rational>(&v_)) return r->to_string();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15g", std::get<double>(v_));
        return buf;
    }

private:
    explicit IndexValue(long long v) : v_(v) {}
    explicit IndexValue(Rational v) : v_(v) {}
    explicit IndexValue(double v) : v_(v) {}
    std::variant<long long, Rational, double> v_;
};

/// Edge contribution f(x) of the index on trees of order n, for x = mu(e).
inline IndexValue contribution(const IndexSpec& spec, int x, int n) {
    const long long lx = x;
    const long long product = lx * (n - lx);  // x (n - x)
    switch (spec.kind) {
        case IndexKind::Wiener:
            return IndexValue::integer(product);
        case IndexKind::ModifiedWiener:
            if (!std::isfinite(spec.lambda)) throw Error("modified wiener: lambda must be finite");
            return IndexValue::floating(std::pow(static_cast<double>(product), spec.lambda));
        case IndexKind::VariableWiener:
            if (!std::isfinite(spec.lambda)) throw Error("variable wiener: lambda must be finite");
            return IndexValue::floating(std::pow(static_cast<double>(n), spec.lambda) -
                                        std::pow(static_cast<double>(x), spec.lambda) -
                                        std::pow(static_cast<double>(n - x), spec.lambda));
        case IndexKind::SteinerKWiener:
            if (spec.k < 2 || spec.k > n)
                throw Error("steiner k must satisfy 2 <= k <= n (k=" + std::to_string(spec.k) +
                            ", n=" + std::to_string(n) + ")");
            return IndexValue::integer(binomial(n, spec.k) - binomial(x, spec.k) -
                                       binomial(n - x, spec.k));
        case IndexKind::HyperWienerEdge:
            return IndexValue::rational(Rational(product, 2) + Rational(product * product, 2));
        case IndexKind::WienerHosoya:
            return IndexValue::integer(product + (lx - 1) * (n - lx - 1));
        case IndexKind::DegreeDistance:
            return IndexValue::integer(4 * product - n);
        case IndexKind::Gutman:
            return IndexValue::integer(4 * product - (2LL * n - 1));
        case IndexKind::Abc2:
            // sqrt of (n_u + n_v - 2) / (n_u n_v); the numerator is 0 at n = 2.
            return IndexValue::floating(
                std::sqrt(static_cast<double>(n - 2) / static_cast<double>(product)));
    }
    throw Error("unknown index kind");
}

/// F(T) = sum_i r_i f(i) over the edge division vector.
inline IndexValue index_value(const Tree& t, const IndexSpec& spec) {
    const int n = t.order();
    if (spec.kind == IndexKind::SteinerKWiener && (spec.k < 2 || spec.k > n))
        throw Error("steiner k must satisfy 2 <= k <= n (k=" + std::to_string(spec.k) +
                    ", n=" + std::to_string(n) + ")");
    const EdgeDivisionVector r = edge_division_vector(t);
    switch (spec.value_kind()) {
        case ValueKind::ExactInteger: {
            long long total = 0;
            for (int i = 1; i <= r.length(); ++i)
                if (r.at(i)) total += r.at(i) * contribution(spec, i, n).as_integer();
            return IndexValue::integer(total);
        }
        case ValueKind::ExactRational: {
            Rational total(0);
            for (int i = 1; i <= r.length(); ++i)
                if (r.at(i)) total = total + Rational(r.at(i)) * contribution(spec, i, n).as_rational();
            return IndexValue::rational(total);
        }
        case ValueKind::Floating: {
            double total = 0;
            for (int i = 1; i <= r.length(); ++i)
                if (r.at(i)) total += r.at(i) * contribution(spec, i, n).as_double();
            return IndexValue::floating(total);
        }
    }
    throw Error("unknown value kind");
}

/// Exact Wiener index as a sum of breadth-first distances over all unordered
/// vertex pairs; intentionally independent of the edge division machinery.
inline long long wiener_bruteforce(const Tree& t) {
    long long total = 0;
    for (int v = 0; v < t.order(); ++v) {
        const std::vector<int> dist = t.distances_from(v);
        for (int w = v + 1; w < t.order(); ++w) total += dist[w];
    }
    return total;
}

enum class PairwiseKind { HyperWienerPairwise, DegreeDistancePairwise, GutmanPairwise };

/// Direct pairwise-distance evaluation of the distance-based definitions;
/// these are the oracles the edge-additive forms are checked against.
inline long long pairwise_index_oracle(const Tree& t, PairwiseKind kind) {
    const int n = t.order();
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        const std::vector<int> dist = t.distances_from(v);
        for (int w = v + 1; w < n; ++w) {
            const long long d = dist[w];
            switch (kind) {
                case PairwiseKind::HyperWienerPairwise:
                    total += d * (d + 1) / 2;
                    break;
                case PairwiseKind::DegreeDistancePairwise:
                    total += (t.degree(v) + t.degree(w)) * d;
                    break;
                case PairwiseKind::GutmanPairwise:
                    total += static_cast<long long>(t.degree(v)) * t.degree(w) * d;
                    break;
            }
        }
    }
    return total;
}

inline long long hyper_wiener_pairwise(const Tree& t) {
    return pairwise_index_oracle(t, PairwiseKind::HyperWienerPairwise);
}

/// Steiner k-Wiener by direct enumeration of all k-subsets. The Steiner
/// distance of S is the edge count of the smallest subtree spanning S: an
/// edge lies in that subtree iff S has vertices on both of its sides.
inline long long steiner_k_wiener_bruteforce(const Tree& t, int k) {
    const int n = t.order();
    if (k < 2 || k > n) throw Error("steiner k must satisfy 2 <= k <= n");
    std::vector<int> order;
    const std::vector<int> parent = t.parents_from(0, &order);

    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    std::vector<int> below(n, 0);
    long long total = 0;
    while (true) {
        std::fill(below.begin(), below.end(), 0);
        for (int v : subset) below[v] = 1;
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (parent[*it] >= 0) below[parent[*it]] += below[*it];
        for (int v = 0; v < n; ++v)
            if (parent[v] >= 0 && below[v] > 0 && below[v] < k) ++total;

        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return total;
}

enum class Monotonicity { Increasing, Decreasing, Neither };

inline const char* to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "Increasing";
        case Monotonicity::Decreasing: return "Decreasing";
        case Monotonicity::Neither: return "Neither";
    }
    return "?";
}

/// Numeric classification of f on 1..floor(n/2): strictly increasing,
/// strictly decreasing, or neither. Nothing is assumed from the index name.
inline Monotonicity monotone_class(const IndexSpec& spec, int n) {
    if (n < 4) throw Error("monotone classification needs n >= 4");
    const int m = n / 2;
    bool up = true, down = true;
    for (int x = 1; x + 1 <= m; ++x) {
        const IndexValue a = contribution(spec, x, n);
        const IndexValue b = contribution(spec, x + 1, n);
        if (a.is_exact() && b.is_exact()) {
            const Rational av = a.as_rational();
            const Rational bv = b.as_rational();
            up = up && av < bv;
            down = down && av > bv;
        } else {
            up = up && a.as_double() < b.as_double();
            down = down && a.as_double() > b.as_double();
        }
    }
    if (up) return Monotonicity::Increasing;
    if (down) return Monotonicity::Decreasing;
    return Monotonicity::Neither;
}

/// Closed-form Wiener values for the extremal families, in exact rational
/// arithmetic. Every formula evaluates to an integer on its stated domain.

/// W of the caterpillar with spine P_k and all n-k pendants at the middle
/// position ceil(k/2); defined for 2 <= k <= n-1.
inline Rational wiener_single_cluster_min(int n, int k) {
    if (k < 2 || k > n - 1) throw Error("single-cluster closed form needs 2 <= k <= n-1");
    const Rational N(n), K(k);
    const Rational common = Rational(-1, 12) * K * K * K + Rational(1, 4) * N * K * K - K * N;
    if (k % 2 == 1)
        return common + Rational(13, 12) * K + N * N - Rational(5, 4) * N;
    return common + Rational(5, 6) * K + N * N - N;
}

/// W of the balanced double star path with spine P_k (pendants split as
/// floor/ceil of (n-k)/2); defined for 2 <= k <= n-1.
inline Rational wiener_balanced_double_star_by_spine(int n, int k) {
    if (k < 2 || k > n - 1) throw Error("double-star closed form needs 2 <= k <= n-1");
    const Rational N(n), K(k);
    const Rational common = Rational(-1, 12) * K * K * K + Rational(1, 4) * K * K +
                            Rational(1, 4) * K * N * N - K * N + Rational(3, 4) * N * N - N;
    if ((n - k) % 2 == 0) return common + Rational(5, 6) * K;
    return common + Rational(7, 12) * K + Rational(1, 4);
}

/// W of the balanced starlike tree with q legs; defined for 3 <= q <= n-1.
inline Rational wiener_balanced_starlike(int n, int q) {
    if (q < 3 || q > n - 1) throw Error("balanced-starlike closed form needs 3 <= q <= n-1");
    const long long s = (n - 1) / q;
    const long long r = (n - 1) % q;
    const Rational S(s), R(r), Q(q);
    return Rational(3 * q - 2, 6) * Q * S * S * S +
           (Rational(1, 2) * Q * Q + Rational(3, 2) * Q * R - R) * S * S +
           (R * R + Rational(3, 2) * Q * R + Rational(1, 3) * Q - R) * S + R * R;
}

/// W of the balanced double star path with q pendants total (spine P_{n-q});
/// defined for 2 <= q <= n-1.
inline Rational wiener_balanced_double_star_by_pendants(int n, int q) {
    if (q < 2 || q > n - 1) throw Error("double-star closed form needs 2 <= q <= n-1");
    const Rational N(n), Q(q);
    const Rational common = Rational(1, 6) * N * N * N - Rational(1, 4) * N * Q * Q +
                            Rational(1, 2) * N * Q + Rational(1, 12) * Q * Q * Q +
                            Rational(1, 4) * Q * Q;
    if (q % 2 == 0) return common - Rational(1, 6) * N - Rational(5, 6) * Q;
    return common - Rational(5, 12) * N - Rational(7, 12) * Q + Rational(1, 4);
}

/// W of the broom (spine P_{n-d}, d-1 pendants at one end, one at the other).
/// The two split cases around d = n/2 have their own cubics; every other d
/// uses the general cubic, which the verification harness cross-checks
/// against brute force.
inline Rational wiener_broom(int n, int d) {
    if (d < 3 || d > n - 1) throw Error("broom closed form needs 3 <= d <= n-1");
    const Rational N(n), D(d);
    if (n % 2 == 0 && d == n / 2)
        return Rational(1, 12) * N * N * N + Rational(5, 8) * N * N - Rational(19, 12) * N + 1;
    if (n % 2 == 1 && d == n / 2)
        return Rational(1, 12) * N * N * N + Rational(3, 4) * N * N - Rational(25, 12) * N +
               Rational(5, 4);
    if (n % 2 == 1 && d == n / 2 + 1)
        return Rational(1, 12) * N * N * N + Rational(1, 2) * N * N - Rational(13, 12) * N +
               Rational(1, 2);
    return Rational(1, 3) * D * D * D - Rational(1, 2) * (N + 1) * D * D +
           Rational(1, 6) * (Rational(9) * N - 5) * D + Rational(1, 6) * N * N * N -
           Rational(7, 6) * N + 1;
}

/// Dispatch to the closed form matching the family; the result is asserted to
/// be integral.
inline Rational closed_form_wiener(const FamilyParams& p) {
    p.validate();
    Rational w;
    switch (p.kind) {
        case FamilyKind::SingleClusterCaterpillar:
            if (p.s != (p.k + 1) / 2)
                throw Error("closed form covers the middle-cluster caterpillar only (s = ceil(k/2))");
            w = wiener_single_cluster_min(p.n, p.k);
            break;
        case FamilyKind::DoubleStarPath:
            if ((p.a > p.b ? p.a - p.b : p.b - p.a) > 1)
                throw Error("closed form covers balanced double star paths only (|a-b| <= 1)");
            w = wiener_balanced_double_star_by_spine(p.n, p.k);
            break;
        case FamilyKind::BalancedStarlike:
            w = wiener_balanced_starlike(p.n, p.q);
            break;
        case FamilyKind::Broom:
            w = wiener_broom(p.n, p.max_degree);
            break;
        default:
            throw Error("no closed form for family " + p.to_string());
    }
    if (!w.is_integral())
        throw Error("closed form produced a non-integer for " + p.to_string() + ": " + w.to_string());
    return w;
}

}  // namespace edv

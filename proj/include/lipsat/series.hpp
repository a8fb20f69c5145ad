#pragma once

#include <map>
#include <string>
#include <vector>

#include "lipsat/polynomial.hpp"
#include "lipsat/variety.hpp"

namespace lipsat {

inline constexpr int kDefaultTruncation = 32;

/// Truncated univariate power series over Q in a parameter t. A series built
/// purely from polynomial data stays `exact` (all omitted coefficients are
/// known to vanish); truncation only enters once terms get dropped.
struct Series {
    std::map<int, Rat> coeffs;  // exponent -> nonzero coefficient
    int truncation = kDefaultTruncation;
    bool exact = true;

    static Series zero(int trunc = kDefaultTruncation);
    static Series parameter(int trunc = kDefaultTruncation);  // t
    static Series constant(const Rat& c, int trunc = kDefaultTruncation);
    /// c * t^e
    static Series term(const Rat& c, int e, int trunc = kDefaultTruncation);
    /// Series of a univariate polynomial in t (exact).
    static Series of_polynomial(const Polynomial& p, int trunc = kDefaultTruncation);

    bool is_zero() const { return coeffs.empty(); }
    void add_term(int e, const Rat& c);
    void truncate(int order);

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;

    /// this(u(t)); u must have zero constant term.
    Series compose_with(const Series& u) const;

    std::string to_string() const;
};

/// Order valuation of a series: a finite order, a proven infinite order, or
/// "at least the truncation horizon" when truncation blinds us.
struct ExtOrder {
    enum class Kind { Finite, AtLeastTruncation, Infinite };
    Kind kind = Kind::Infinite;
    int value = 0;  // order, or the truncation horizon

    static ExtOrder finite(int v) { return {Kind::Finite, v}; }
    static ExtOrder at_least(int v) { return {Kind::AtLeastTruncation, v}; }
    static ExtOrder infinite() { return {Kind::Infinite, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    std::string to_string() const;
    friend bool operator==(const ExtOrder&, const ExtOrder&) = default;
};

ExtOrder order(const Series& s);

/// Multivariate polynomial composed with one series per variable.
Series series_compose(const Polynomial& f, const std::vector<Series>& values);

/// A parametrized curve germ on a presented ring: one series per ambient
/// variable; every defining generator must compose to zero (up to truncation).
struct Branch {
    std::string name;
    PresentedRing ring;
    std::vector<Series> components;
};

Branch make_branch(std::string name, const PresentedRing& ring,
                   std::vector<Series> components);

/// A pair of branch germs written on a tensor-square ambient.
struct Arc {
    std::vector<Series> components;  // one per tensor-ring variable
    std::string label;
    bool diagonal = false;
};

/// First copy b1(sub1(t)), second copy b2(sub2(t)). Substitutions must have
/// zero constant term.
Arc pair_arc(const TensorSquare& ts, const Branch& b1, const Branch& b2,
             const Series& sub1, const Series& sub2);

/// The finite falsifier family: over all branch pairs, substitutions
/// (t, 0), (t, t) and (t, c*t^m) for c in coeffs and 2 <= m <= max_exp.
/// Same-branch (t, t) arcs are diagonal and excluded (they pull the kernel
/// ideal back to zero, so they can never refute).
std::vector<Arc> standard_arc_family(const TensorSquare& ts,
                                     const std::vector<Branch>& branches,
                                     int max_exp = 3,
                                     const std::vector<Rat>& coeffs = {Rat(1), Rat(-1), Rat(2)},
                                     int trunc = kDefaultTruncation);

}  // namespace lipsat

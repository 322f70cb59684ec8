#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qid/rational.hpp"
#include "qid/symbol.hpp"

namespace qid {

// A power product of symbols. Exponents are stored sorted by symbol id with
// zeros dropped; negative exponents are only ever present on Laurent symbols.
class Monomial {
public:
    using Factor = std::pair<std::uint16_t, int>;

    Monomial() = default;
    static Monomial of(Symbol s, int exponent = 1);

    std::span<const Factor> factors() const noexcept { return factors_; }
    int exponent(Symbol s) const noexcept;
    int total_degree() const noexcept;
    bool is_one() const noexcept { return factors_.empty(); }

    // Same monomial with `s` removed.
    Monomial without(Symbol s) const;

    // True when every symbol present may carry negative exponents.
    bool invertible() const;
    Monomial inverse() const;

    friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

// Graded lexicographic order: total degree first, then the exponent of the
// lowest-id symbol where the two differ.
struct GradedLex {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const noexcept;
};

// Sparse multivariate Laurent polynomial over the rationals in canonical form:
// no zero coefficients are stored, so equal polynomials have equal term maps.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLex>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static MultiPoly var(Symbol s, int exponent = 1);
    static MultiPoly term(const Rational& c, const Monomial& m);

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_term() const;
    bool contains(Symbol s) const;

    // Smallest and largest exponent of `s` over all terms (0 for terms free
    // of s); nullopt for the zero polynomial.
    std::optional<std::pair<int, int>> degree_range(Symbol s) const;

    // Coefficient of s^e, as a polynomial free of s.
    MultiPoly coefficient(Symbol s, int e) const;
    // Decomposition p = sum_e coeff_e * s^e.
    std::map<int, MultiPoly> collect(Symbol s) const;

    // Single term whose monomial is invertible.
    bool is_unit() const;
    MultiPoly unit_inverse() const;

    MultiPoly pow(int exponent) const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator-(const MultiPoly& p);

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

// Replaces s by v. A negative power of s needs v to be a unit.
MultiPoly substitute(const MultiPoly& p, Symbol s, const MultiPoly& v);

Rational eval(const MultiPoly& p, const std::map<Symbol, Rational>& assignment);

// Quotient of p by a divisor that is a polynomial in `var` whose other
// coefficients are free of var and whose leading coefficient is a unit.
// Throws NonZeroRemainder if the division is not exact.
MultiPoly divide_exact(const MultiPoly& p, Symbol var, const MultiPoly& divisor);

// divide_exact restricted to divisors of degree at most one in `mainvar`.
MultiPoly divide_exact_linear(const MultiPoly& p, Symbol mainvar, const MultiPoly& divisor);

// Sum of the terms of total degree `degree`. Exponents of `ignore`, if
// given, do not count towards the degree.
MultiPoly homogeneous_component(const MultiPoly& p, int degree, std::optional<Symbol> ignore = std::nullopt);
// Lowest total degree present; nullopt for zero.
std::optional<int> lowest_total_degree(const MultiPoly& p, std::optional<Symbol> ignore = std::nullopt);

}  // namespace qid

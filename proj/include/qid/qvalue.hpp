#pragma once

#include <optional>

#include "qid/poly.hpp"

namespace qid {

// The base q: either the symbol q (exact Laurent-q algebra) or a fixed
// rational value (numeric path, used inside every truncated series).
class QValue {
public:
    static QValue symbolic() { return QValue(); }
    static QValue numeric(const Rational& value);

    bool is_symbolic() const noexcept { return !value_.has_value(); }
    const Rational& value() const { return value_.value(); }

    MultiPoly poly() const { return pow(1); }
    MultiPoly pow(int exponent) const;

    // (q;q)_n as a polynomial (a rational on the numeric path).
    MultiPoly qfactorial(int n) const;

    // Replaces the symbol q in p by this value (identity when symbolic).
    MultiPoly apply(const MultiPoly& p) const;

private:
    QValue() = default;
    std::optional<Rational> value_;
};

}  // namespace qid

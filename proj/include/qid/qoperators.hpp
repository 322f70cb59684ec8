#pragma once

#include <functional>
#include <vector>

#include "qid/poly.hpp"
#include "qid/qvalue.hpp"

namespace qid {

enum class OperatorTag { Dq, ThetaXY, ThetaSingle };

// Which q-difference operator, and the symbols it acts on.
class OperatorKind {
public:
    static OperatorKind dq(Symbol var) { return OperatorKind(OperatorTag::Dq, {var}); }
    static OperatorKind theta_single(Symbol var) { return OperatorKind(OperatorTag::ThetaSingle, {var}); }
    static OperatorKind theta_xy(Symbol xvar, Symbol yvar);

    OperatorTag tag() const noexcept { return tag_; }
    const std::vector<Symbol>& acting_vars() const noexcept { return vars_; }

    MultiPoly apply(const MultiPoly& p, const QValue& q) const;

private:
    OperatorKind(OperatorTag tag, std::vector<Symbol> vars) : tag_(tag), vars_(std::move(vars)) {}

    OperatorTag tag_;
    std::vector<Symbol> vars_;
};

// D_q f(x) = (f(x) - f(qx)) / x.
MultiPoly d_q(const MultiPoly& p, Symbol var, const QValue& q = QValue::symbolic());

// theta_xy f(x, y) = (f(q^-1 x, y) - f(x, qy)) / (q^-1 x - y).
// Throws OutsideDomain when the quotient is not a polynomial.
MultiPoly theta_xy(const MultiPoly& p, Symbol xvar, Symbol yvar, const QValue& q = QValue::symbolic());

// theta_x f(x) = (f(q^-1 x) - f(x)) / (q^-1 x): theta_xy on a y-free f, then y = 0.
MultiPoly theta_single(const MultiPoly& p, Symbol var, const QValue& q = QValue::symbolic());

// sum_k weight(k) (b T)^k {p} / (q;q)_k for T = op. The power series stops
// once T^k{p} vanishes. On the symbolic path T^k{p} is divided exactly by
// (q;q)_k; on the numeric path the division is by a rational.
MultiPoly apply_operator_series(const OperatorKind& op, const MultiPoly& b, const MultiPoly& p,
                                const std::function<MultiPoly(int)>& weight, const QValue& q);

// R(bD_q) = sum_k (-1)^k q^{k(k-1)/2} (b D_q)^k / (q;q)_k.
MultiPoly apply_R(const MultiPoly& b, const MultiPoly& p, Symbol var, const QValue& q = QValue::symbolic());

// E(b theta) = sum_k q^{k(k-1)/2} (b theta)^k / (q;q)_k, theta = theta_single.
MultiPoly apply_E_frak(const MultiPoly& b, const MultiPoly& p, Symbol var, const QValue& q = QValue::symbolic());

// E~(a, b; D_q) = sum_k (-1)^k q^{k(k-1)/2} (a;q)_k (b D_q)^k / (q;q)_k.
MultiPoly apply_E_tilde(const MultiPoly& a, const MultiPoly& b, const MultiPoly& p, Symbol var,
                        const QValue& q = QValue::symbolic());

// L~(a, b; theta_xy) = sum_k q^{k(k-1)/2} (a;q)_k (b theta_xy)^k / (q;q)_k.
MultiPoly apply_L_tilde(const MultiPoly& a, const MultiPoly& b, const MultiPoly& p, Symbol xvar, Symbol yvar,
                        const QValue& q = QValue::symbolic());

}  // namespace qid

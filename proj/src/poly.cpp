#include "qid/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qid/errors.hpp"

namespace qid {

namespace {

void require_laurent(Symbol s, int exponent)
{
    if (exponent < 0 && !s.laurent_allowed())
        throw NegativeExponentSubstitution("negative exponent on non-Laurent symbol '" + s.name() + "'");
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Symbol s, int exponent)
{
    require_laurent(s, exponent);
    Monomial m;
    if (exponent != 0)
        m.factors_.emplace_back(s.id(), exponent);
    return m;
}

int Monomial::exponent(Symbol s) const noexcept
{
    for (const auto& [id, e] : factors_)
        if (id == s.id())
            return e;
    return 0;
}

int Monomial::total_degree() const noexcept
{
    int d = 0;
    for (const auto& f : factors_)
        d += f.second;
    return d;
}

Monomial Monomial::without(Symbol s) const
{
    Monomial m;
    for (const auto& f : factors_)
        if (f.first != s.id())
            m.factors_.push_back(f);
    return m;
}

bool Monomial::invertible() const
{
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return Symbol(f.first).laurent_allowed(); });
}

Monomial Monomial::inverse() const
{
    if (!invertible())
        throw NegativeExponentSubstitution("monomial is not invertible");
    Monomial m = *this;
    for (auto& f : m.factors_)
        f.second = -f.second;
    return m;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs)
{
    Monomial out;
    out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
    auto i = lhs.factors_.begin();
    auto j = rhs.factors_.begin();
    while (i != lhs.factors_.end() || j != rhs.factors_.end()) {
        if (j == rhs.factors_.end() || (i != lhs.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == lhs.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            const int e = i->second + j->second;
            if (e != 0)
                out.factors_.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

bool GradedLex::operator()(const Monomial& lhs, const Monomial& rhs) const noexcept
{
    const int dl = lhs.total_degree();
    const int dr = rhs.total_degree();
    if (dl != dr)
        return dl < dr;
    auto l = lhs.factors();
    auto r = rhs.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < l.size() || j < r.size()) {
        const auto lid = i < l.size() ? l[i].first : UINT16_MAX;
        const auto rid = j < r.size() ? r[j].first : UINT16_MAX;
        const auto id = std::min(lid, rid);
        const int el = lid == id ? l[i].second : 0;
        const int er = rid == id ? r[j].second : 0;
        if (el != er)
            return el < er;
        if (lid == id)
            ++i;
        if (rid == id)
            ++j;
    }
    return false;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c)
{
    if (!c.is_zero())
        terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(Symbol s, int exponent)
{
    return term(Rational(1), Monomial::of(s, exponent));
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m)
{
    MultiPoly p;
    if (!c.is_zero())
        p.terms_.emplace(m, c);
    return p;
}

bool MultiPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::contains(Symbol s) const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [s](const auto& t) { return t.first.exponent(s) != 0; });
}

std::optional<std::pair<int, int>> MultiPoly::degree_range(Symbol s) const
{
    if (terms_.empty())
        return std::nullopt;
    int lo = 0;
    int hi = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(s);
        lo = first ? e : std::min(lo, e);
        hi = first ? e : std::max(hi, e);
        first = false;
    }
    return std::pair{lo, hi};
}

MultiPoly MultiPoly::coefficient(Symbol s, int e) const
{
    MultiPoly out;
    for (const auto& [m, c] : terms_)
        if (m.exponent(s) == e)
            out.terms_.emplace(m.without(s), c);
    return out;
}

std::map<int, MultiPoly> MultiPoly::collect(Symbol s) const
{
    std::map<int, MultiPoly> out;
    for (const auto& [m, c] : terms_)
        out[m.exponent(s)].terms_.emplace(m.without(s), c);
    return out;
}

bool MultiPoly::is_unit() const
{
    return terms_.size() == 1 && terms_.begin()->first.invertible();
}

MultiPoly MultiPoly::unit_inverse() const
{
    if (!is_unit())
        throw NonZeroRemainder("polynomial '" + to_string() + "' is not a unit");
    const auto& [m, c] = *terms_.begin();
    return term(c.inverse(), m.inverse());
}

MultiPoly MultiPoly::pow(int exponent) const
{
    if (exponent < 0)
        return unit_inverse().pow(-exponent);
    MultiPoly result(1);
    MultiPoly base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return result;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs)
{
    MultiPoly out;
    for (const auto& [ml, cl] : lhs.terms_)
        for (const auto& [mr, cr] : rhs.terms_)
            out.add_term(ml * mr, cl * cr);
    return out;
}

MultiPoly operator-(const MultiPoly& p)
{
    MultiPoly out = p;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c.sign() < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const Rational mag = c.abs();
        if (m.is_one()) {
            os << mag;
            continue;
        }
        bool need_star = false;
        if (!mag.is_one()) {
            os << mag;
            need_star = true;
        }
        for (const auto& [id, e] : m.factors()) {
            if (need_star)
                os << '*';
            os << Symbol(id).name();
            if (e != 1)
                os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- free functions

namespace {

// p * var^k, keeping the Laurent restriction on the result only.
MultiPoly shift_exponent(const MultiPoly& p, Symbol var, int k)
{
    if (k == 0)
        return p;
    MultiPoly out;
    for (const auto& [m, c] : p.terms())
        out += MultiPoly::term(c, m.without(var) * Monomial::of(var, m.exponent(var) + k));
    return out;
}

}  // namespace

MultiPoly substitute(const MultiPoly& p, Symbol s, const MultiPoly& v)
{
    std::map<int, MultiPoly> powers;
    auto power = [&](int e) -> const MultiPoly& {
        auto it = powers.find(e);
        if (it != powers.end())
            return it->second;
        if (e < 0 && !v.is_unit())
            throw NegativeExponentSubstitution("cannot substitute '" + v.to_string() + "' for " + s.name() +
                                               "^" + std::to_string(e));
        return powers.emplace(e, v.pow(e)).first->second;
    };
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(s);
        if (e == 0) {
            out += MultiPoly::term(c, m);
            continue;
        }
        out += MultiPoly::term(c, m.without(s)) * power(e);
    }
    return out;
}

Rational eval(const MultiPoly& p, const std::map<Symbol, Rational>& assignment)
{
    Rational total;
    for (const auto& [m, c] : p.terms()) {
        Rational value = c;
        for (const auto& [id, e] : m.factors()) {
            auto it = assignment.find(Symbol(id));
            if (it == assignment.end())
                throw MissingAssignment("no value assigned to '" + Symbol(id).name() + "'");
            if (e < 0 && it->second.is_zero())
                throw ZeroToNegativePower("'" + Symbol(id).name() + "' is zero but appears with exponent " +
                                          std::to_string(e));
            value *= it->second.pow(e);
        }
        total += value;
    }
    return total;
}

MultiPoly divide_exact(const MultiPoly& p, Symbol var, const MultiPoly& divisor)
{
    if (divisor.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (p.is_zero())
        return p;

    // Normalize the divisor so that its lowest power of var is var^0.
    const auto [dlo, dhi] = *divisor.degree_range(var);
    if (!var.laurent_allowed() && p.degree_range(var)->first < dlo)
        throw NonZeroRemainder("'" + p.to_string() + "' is not divisible by " + var.name() + "^" +
                               std::to_string(dlo));
    const MultiPoly num = shift_exponent(p, var, -dlo);
    const MultiPoly den = shift_exponent(divisor, var, -dlo);

    const int degree = dhi - dlo;
    const MultiPoly lead = den.coefficient(var, degree);
    if (!lead.is_unit())
        throw InvariantViolation("divisor leading coefficient '" + lead.to_string() + "' is not a unit");
    const MultiPoly lead_inv = lead.unit_inverse();
    if (degree == 0)
        return num * lead_inv;

    const int lo = num.degree_range(var)->first;
    MultiPoly quotient;
    MultiPoly rem = num;
    while (!rem.is_zero()) {
        const int hi = rem.degree_range(var)->second;
        if (hi - degree < lo)
            break;
        const MultiPoly step = rem.coefficient(var, hi) * lead_inv * MultiPoly::var(var, hi - degree);
        quotient += step;
        rem -= step * den;
    }
    if (!rem.is_zero())
        throw NonZeroRemainder("'" + p.to_string() + "' is not divisible by '" + divisor.to_string() + "'");
    return quotient;
}

MultiPoly divide_exact_linear(const MultiPoly& p, Symbol mainvar, const MultiPoly& divisor)
{
    if (const auto range = divisor.degree_range(mainvar); range && (range->first < 0 || range->second > 1))
        throw InvariantViolation("divisor '" + divisor.to_string() + "' is not linear in " + mainvar.name());
    return divide_exact(p, mainvar, divisor);
}

namespace {

int degree_without(const Monomial& m, std::optional<Symbol> ignore)
{
    return m.total_degree() - (ignore ? m.exponent(*ignore) : 0);
}

}  // namespace

MultiPoly homogeneous_component(const MultiPoly& p, int degree, std::optional<Symbol> ignore)
{
    MultiPoly out;
    for (const auto& [m, c] : p.terms())
        if (degree_without(m, ignore) == degree)
            out += MultiPoly::term(c, m);
    return out;
}

std::optional<int> lowest_total_degree(const MultiPoly& p, std::optional<Symbol> ignore)
{
    std::optional<int> low;
    for (const auto& [m, c] : p.terms()) {
        const int d = degree_without(m, ignore);
        if (!low || d < *low)
            low = d;
    }
    return low;
}

}  // namespace qid

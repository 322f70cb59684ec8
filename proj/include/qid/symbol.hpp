#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qid {

// Handle to an interned symbol. Ids are process-global and stable: the
// standard letters below are registered first, in this order, so their ids
// (and therefore the canonical term order) never depend on parse order.
class Symbol {
public:
    constexpr Symbol() = default;
    constexpr explicit Symbol(std::uint16_t id) : id_(id) {}

    // Interns `name`; new names are not Laurent-capable.
    static Symbol intern(std::string_view name);
    // Looks up without interning; throws std::out_of_range if unknown.
    static Symbol find(std::string_view name);

    constexpr std::uint16_t id() const noexcept { return id_; }
    const std::string& name() const;
    bool laurent_allowed() const;

    friend constexpr auto operator<=>(Symbol, Symbol) = default;

private:
    std::uint16_t id_ = 0;
};

namespace sym {

// Predefined symbols. Only q and x carry negative exponents.
Symbol q();
Symbol x();
Symbol y();
Symbol z();
Symbol t();
Symbol a();
Symbol b();
Symbol s();
Symbol r();
Symbol lambda();
Symbol mu();
Symbol alpha();
Symbol rho();
Symbol sigma();

}  // namespace sym

}  // namespace qid

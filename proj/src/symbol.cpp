#include "qid/symbol.hpp"

#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "qid/errors.hpp"

namespace qid {

namespace {

struct Entry {
    std::string name;
    bool laurent;
};

class SymbolTable {
public:
    SymbolTable()
    {
        for (const char* name : {"q", "x", "y", "z", "t", "a", "b", "s", "r", "lambda", "mu", "alpha",
                                 "rho", "sigma"}) {
            const std::string n(name);
            add(n, n == "q" || n == "x");
        }
    }

    Symbol intern(std::string_view name)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = index_.find(std::string(name)); it != index_.end())
                return Symbol(it->second);
        }
        std::unique_lock lock(mutex_);
        if (auto it = index_.find(std::string(name)); it != index_.end())
            return Symbol(it->second);
        return Symbol(add(std::string(name), false));
    }

    Symbol find(std::string_view name) const
    {
        std::shared_lock lock(mutex_);
        return Symbol(index_.at(std::string(name)));
    }

    const Entry& entry(std::uint16_t id) const
    {
        std::shared_lock lock(mutex_);
        return entries_.at(id);
    }

private:
    std::uint16_t add(std::string name, bool laurent)
    {
        if (entries_.size() >= std::numeric_limits<std::uint16_t>::max())
            throw std::length_error("symbol table full");
        const auto id = static_cast<std::uint16_t>(entries_.size());
        index_.emplace(name, id);
        entries_.push_back({std::move(name), laurent});
        return id;
    }

    mutable std::shared_mutex mutex_;
    std::deque<Entry> entries_;  // deque: references stay valid across growth
    std::unordered_map<std::string, std::uint16_t> index_;
};

SymbolTable& table()
{
    static SymbolTable instance;
    return instance;
}

}  // namespace

Symbol Symbol::intern(std::string_view name)
{
    if (name.empty())
        throw InvariantViolation("empty symbol name");
    return table().intern(name);
}

Symbol Symbol::find(std::string_view name)
{
    return table().find(name);
}

const std::string& Symbol::name() const
{
    return table().entry(id_).name;
}

bool Symbol::laurent_allowed() const
{
    return table().entry(id_).laurent;
}

namespace sym {

Symbol q() { return Symbol::find("q"); }
Symbol x() { return Symbol::find("x"); }
Symbol y() { return Symbol::find("y"); }
Symbol z() { return Symbol::find("z"); }
Symbol t() { return Symbol::find("t"); }
Symbol a() { return Symbol::find("a"); }
Symbol b() { return Symbol::find("b"); }
Symbol s() { return Symbol::find("s"); }
Symbol r() { return Symbol::find("r"); }
Symbol lambda() { return Symbol::find("lambda"); }
Symbol mu() { return Symbol::find("mu"); }
Symbol alpha() { return Symbol::find("alpha"); }
Symbol rho() { return Symbol::find("rho"); }
Symbol sigma() { return Symbol::find("sigma"); }

}  // namespace sym

}  // namespace qid

#include "solitonlab/symbolic/symbol.hpp"

#include <array>

#include "solitonlab/errors.hpp"

namespace solitonlab::sym {

namespace {

constexpr std::array<std::string_view, kBaseCount> kNames = {
    "a", "b", "r", "f", "g", "u", "v", "w", "kappa", "sigma", "t3", "n3", "b3",
    "alpha", "beta", "gamma", "c", "a1",
};

constexpr unsigned kMaxOrder = 1000;

}  // namespace

std::string_view base_name(Base base) { return kNames[static_cast<std::size_t>(base)]; }

bool is_parameter(Base base) { return base >= Base::alpha; }

Symbol::Symbol(Base base, unsigned order) : base_(base), order_(static_cast<std::uint16_t>(order)) {
    if (static_cast<int>(base) >= kBaseCount) {
        throw InvalidInput("symbol base outside the registry");
    }
    if (sym::is_parameter(base) && order != 0) {
        throw InvalidInput("parameter '" + std::string(base_name(base)) + "' cannot be differentiated");
    }
    if (order > kMaxOrder) {
        throw InvalidInput("derivative order too large");
    }
}

Symbol Symbol::from_name(std::string_view text) {
    std::size_t primes = 0;
    while (primes < text.size() && text[text.size() - 1 - primes] == '\'') {
        ++primes;
    }
    const std::string_view stem = text.substr(0, text.size() - primes);
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == stem) {
            return Symbol(static_cast<Base>(i), static_cast<unsigned>(primes));
        }
    }
    throw InvalidInput("unknown symbol '" + std::string(stem) + "'");
}

Symbol Symbol::differentiated(unsigned by) const { return Symbol(base_, order_ + by); }

std::string Symbol::name() const {
    std::string out(base_name(base_));
    out.append(order_, '\'');
    return out;
}

std::uint32_t Symbol::sort_key() const noexcept {
    const std::uint32_t cls = is_parameter() ? 0U : 1U;
    return (cls << 24) | (static_cast<std::uint32_t>(order_) << 8) | static_cast<std::uint32_t>(base_);
}

}  // namespace solitonlab::sym

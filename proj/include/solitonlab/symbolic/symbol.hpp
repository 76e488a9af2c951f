#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace solitonlab::sym {

/// Fixed registry of base names. Functions of s come first, constant parameters last.
enum class Base : std::uint8_t {
    a, b, r, f, g, u, v, w, kappa, sigma, t3, n3, b3,
    alpha, beta, gamma, c, a1,
};

inline constexpr int kBaseCount = 18;

std::string_view base_name(Base base);
bool is_parameter(Base base);

/// A differential indeterminate: a registered base name together with its s-derivative order.
///
/// Parameters never carry a derivative order. Symbols are totally ordered by
/// (parameter-before-function, derivative order, registry position); this order
/// fixes factor order inside printed monomials and the lex tie-break of the
/// graded monomial order.
class Symbol {
public:
    explicit Symbol(Base base, unsigned order = 0);

    /// Parse a name such as "a''", "kappa" or "alpha". Throws InvalidInput for unknown names.
    static Symbol from_name(std::string_view text);

    Base base() const noexcept { return base_; }
    unsigned order() const noexcept { return order_; }
    bool is_parameter() const noexcept { return sym::is_parameter(base_); }

    /// Same base, derivative order raised by `by`.
    Symbol differentiated(unsigned by = 1) const;

    std::string name() const;

    std::uint32_t sort_key() const noexcept;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& lhs, const Symbol& rhs) noexcept {
        return lhs.sort_key() <=> rhs.sort_key();
    }

private:
    Base base_;
    std::uint16_t order_;
};

}  // namespace solitonlab::sym

#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "qhnf/ratfunc.hpp"
#include "qhnf/rational.hpp"

namespace qhnf {

/// An exact coefficient field: arithmetic is exact and equality is decided by
/// comparing canonical representations.
template <typename F>
concept ExactField = requires(F a, F b, const Rational& r) {
    { F(0) } -> std::same_as<F>;
    { F(r) } -> std::same_as<F>;
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a.inv() } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_rational_constant() } -> std::convertible_to<bool>;
    { a.to_rational() } -> std::convertible_to<Rational>;
    { a.to_string() } -> std::convertible_to<std::string>;
    { a.needs_parens() } -> std::convertible_to<bool>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<RatFunc>);

template <ExactField F>
constexpr std::string_view field_name();
template <>
constexpr std::string_view field_name<Rational>() { return "rationals"; }
template <>
constexpr std::string_view field_name<RatFunc>() { return "rational-functions"; }

template <ExactField F>
bool is_rational_constant(const F& x) { return x.is_rational_constant(); }

/// Splits a scalar into (negative?, magnitude text) for sign-aware printing of sums.
/// Non-constant rational functions are parenthesized and never reported negative.
template <ExactField F>
std::pair<bool, std::string> signed_text(const F& c) {
    if (c.is_rational_constant()) {
        Rational r = c.to_rational();
        if (r.sign() < 0) return {true, (-r).to_string()};
        return {false, r.to_string()};
    }
    return {false, "(" + c.to_string() + ")"};
}

/// Total order used only for canonical sorting of branch data; numeric on Q.
template <ExactField F>
bool canonical_less(const F& a, const F& b) {
    if (a.is_rational_constant() && b.is_rational_constant()) return a.to_rational() < b.to_rational();
    if (a.is_rational_constant() != b.is_rational_constant()) return a.is_rational_constant();
    return a.to_string() < b.to_string();
}

}  // namespace qhnf

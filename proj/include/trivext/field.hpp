#pragma once

#include "trivext/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace trivext {

/// The rational numbers, backed by Rational.
struct Rationals {
    using value_type = Rational;

    value_type zero() const { return {}; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type div(const value_type& a, const value_type& b) const { return a / b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return a.inverse(); }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool is_one(const value_type& a) const { return a.is_one(); }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    long long characteristic() const { return 0; }
    std::string name() const { return "Q"; }
    std::string format(const value_type& a) const { return a.to_string(); }
    bool operator==(const Rationals&) const = default;
};

/// GF(p) for a prime p < 2^31.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type add(value_type a, value_type b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    bool equal(value_type a, value_type b) const { return a == b; }
    long long characteristic() const { return p_; }
    std::uint32_t prime() const { return p_; }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
    std::string format(value_type a) const { return std::to_string(a); }
    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Runtime description of a ground field: characteristic 0 means Q.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p);
    /// Accepts "q", "Q", "0", or a prime such as "2" / "gf2" / "GF(2)".
    static FieldSpec parse(const std::string& text);

    bool is_rationals() const { return characteristic == 0; }
    std::string name() const;
    bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec spec_of(const Rationals&) { return FieldSpec::rationals(); }
inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.prime()); }

/// Calls fn with the concrete field object described by spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.is_rationals())
        return std::forward<Fn>(fn)(Rationals{});
    return std::forward<Fn>(fn)(PrimeField(spec.characteristic));
}

}  // namespace trivext

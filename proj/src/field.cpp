#include "trivext/field.hpp"

#include <algorithm>
#include <cctype>

namespace trivext {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
}

PrimeField::value_type PrimeField::inv(value_type a) const
{
    if (a == 0)
        throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return from_int(t);
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q" || s == "0" || s == "qq" || s == "rationals")
        return rationals();
    if (s.rfind("gf(", 0) == 0 && s.back() == ')')
        s = s.substr(3, s.size() - 4);
    else if (s.rfind("gf", 0) == 0)
        s = s.substr(2);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("unrecognised field '" + text + "'");
    unsigned long p = std::stoul(s);
    if (p >= (1ul << 31))
        throw std::invalid_argument("field characteristic too large: " + text);
    return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const { return is_rationals() ? "Q" : "GF(" + std::to_string(characteristic) + ")"; }

}  // namespace trivext

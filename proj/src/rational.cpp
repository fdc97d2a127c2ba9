#include "trivext/rational.hpp"

#include <limits>
#include <stdexcept>

namespace trivext {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b)
{
    while (b != 0) {
        // most operands fit in 64 bits; use the cheap division when possible
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            std::uint64_t x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
            while (y != 0) {
                std::uint64_t t = x % y;
                x = y;
                y = t;
            }
            return x;
        }
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs(std::int64_t v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v); }

mpz_class mpz_from_u128(u128 v)
{
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
    return (hi << 64) + lo;
}

mpz_class mpz_from_i128(i128 v)
{
    if (v < 0)
        return -mpz_from_u128(static_cast<u128>(0) - static_cast<u128>(v));
    return mpz_from_u128(static_cast<u128>(v));
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1)
{
    if (n == std::numeric_limits<long long>::min())
        set_big(mpq_class(mpz_class(static_cast<long>(n))));
}

Rational::Rational(long long n, long long d)
{
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q)
{
    mpq_class c(q);
    c.canonicalize();
    set_big(std::move(c));
}

Rational::Rational(const mpz_class& z) { set_big(mpq_class(z)); }

void Rational::set_big(mpq_class q)
{
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        long n = q.get_num().get_si();
        long d = q.get_den().get_si();
        if (n != std::numeric_limits<long>::min()) {
            num_ = n;
            den_ = d;
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
}

Rational Rational::from_wide(i128 n, i128 d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Rational r;
    if (n == 0)
        return r;
    u128 g = gcd_u128(n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n), static_cast<u128>(d));
    if (g != 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (fits(n) && fits(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::string Rational::to_string() const
{
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    if (big_)
        return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    if (big_)
        return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
            Rational r;
            r.num_ = s;
            return r;
        }
    }
    if (a.den_ == b.den_)
        return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.num_ == 0 || b.num_ == 0)
        return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t p;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
            Rational r;
            r.num_ = p;
            return r;
        }
    }
    // cross-cancel first so the result is already reduced
    std::int64_t g1 = static_cast<std::int64_t>(gcd_u64(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(gcd_u64(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    // canonical forms differ in representation only when one side is big,
    // and a big value never fits inline
    return false;
}

bool operator<(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

}  // namespace trivext

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace trivext {

/*
  Exact rational number.

  Values whose reduced numerator and denominator fit in a signed 64-bit word
  are stored inline; everything else lives in a shared, immutable mpq_class.
  Results are demoted back to the inline form whenever they fit again, so
  the common case (structure constants 0, +-1 and small pivots) never touches
  GMP.
*/
class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT: implicit from integers is intended
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static Rational from_wide(__int128 n, __int128 d);
    void set_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace trivext

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "graphnil/error.hpp"

namespace graphnil {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Field specification
// ---------------------------------------------------------------------------

/// Which exact field to compute over: the rationals or F_p with p an odd prime.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0; // only meaningful for PrimeField

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const {
        return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p);
    }

    /// Accepts "q" or "fp:<p>".
    static FieldSpec parse(std::string_view s) {
        if (s == "q" || s == "Q")
            return {Kind::Rationals, 0};
        if (s.rfind("fp:", 0) == 0) {
            std::uint64_t p = 0;
            const std::string digits(s.substr(3));
            if (digits.empty())
                throw error("field spec 'fp:' is missing the modulus");
            for (char c : digits) {
                if (c < '0' || c > '9')
                    throw error("field spec modulus is not a number: " + digits);
                p = p * 10 + static_cast<std::uint64_t>(c - '0');
                if (p > (std::uint64_t{1} << 31))
                    throw error("field spec modulus too large: " + digits);
            }
            return {Kind::PrimeField, p};
        }
        throw error("unrecognized field spec '" + std::string(s) +
                    "' (expected \"q\" or \"fp:<p>\")");
    }
};

// ---------------------------------------------------------------------------
// Rational scalars
// ---------------------------------------------------------------------------

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    /// Parses "a" or "a/b" with optional leading sign.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(s)));
            BigInt n{std::string(s.substr(0, slash))};
            BigInt d{std::string(s.substr(slash + 1))};
            return Rational(std::move(n), std::move(d));
        } catch (const std::exception&) {
            throw error("cannot parse rational '" + std::string(s) + "'");
        }
    }

private:
    void normalize() {
        if (den_ == 0)
            throw error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    BigInt num_;
    BigInt den_; // > 0
};

// ---------------------------------------------------------------------------
// Field handles
// ---------------------------------------------------------------------------

/// The field of rational numbers. Stateless handle; all arithmetic is exact.
class Rationals {
public:
    using Scalar = Rational;

    Scalar zero() const { return Rational(0); }
    Scalar one() const { return Rational(1); }
    Scalar from_int(long long v) const { return Rational(v); }

    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar neg(const Scalar& a) const { return -a; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar inv(const Scalar& a) const {
        if (a.is_zero())
            throw error("inverse of zero");
        return Rational(1) / a;
    }
    bool is_zero(const Scalar& a) const { return a.is_zero(); }

    std::uint64_t characteristic() const { return 0; }
    FieldSpec spec() const { return {FieldSpec::Kind::Rationals, 0}; }

    std::string to_string(const Scalar& a) const { return a.to_string(); }
    Scalar parse(std::string_view s) const { return Rational::parse(s); }

    /// Small random rational, suitable for property tests.
    template <class Rng> Scalar random(Rng& rng) const {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        return Rational(BigInt(num(rng)), BigInt(den(rng)));
    }
    template <class Rng> Scalar random_nonzero(Rng& rng) const {
        for (;;) {
            Scalar s = random(rng);
            if (!s.is_zero())
                return s;
        }
    }

    bool operator==(const Rationals&) const { return true; }
};

/// The prime field F_p for an odd prime p <= 2^31. Scalars are residues in [0, p).
class PrimeField {
public:
    using Scalar = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p == 2)
            throw error("characteristic two not allowed");
        if (p < 2 || !is_prime(p))
            throw error("modulus " + std::to_string(p) + " is not prime");
        if (p > (std::uint64_t{1} << 31))
            throw error("modulus too large (limit 2^31)");
    }

    std::uint64_t modulus() const { return p_; }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }
    Scalar from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0)
            m += static_cast<long long>(p_);
        return static_cast<Scalar>(m);
    }

    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
    Scalar inv(Scalar a) const {
        if (a == 0)
            throw error("inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0)
            t += static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(t);
    }
    bool is_zero(Scalar a) const { return a == 0; }

    std::uint64_t characteristic() const { return p_; }
    FieldSpec spec() const { return {FieldSpec::Kind::PrimeField, p_}; }

    std::string to_string(Scalar a) const { return std::to_string(a); }

    /// Accepts a decimal residue, optionally negative; reduces mod p.
    Scalar parse(std::string_view s) const {
        if (s.empty())
            throw error("empty prime-field scalar");
        bool negative = s[0] == '-';
        std::uint64_t v = 0;
        for (std::size_t i = negative ? 1 : 0; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9')
                throw error("cannot parse prime-field scalar '" + std::string(s) + "'");
            v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
        }
        return negative ? neg(v) : v;
    }

    template <class Rng> Scalar random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
        return d(rng);
    }
    template <class Rng> Scalar random_nonzero(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(1, p_ - 1);
        return d(rng);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static bool is_prime(std::uint64_t n) {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    std::uint64_t p_;
};

template <class K>
concept FieldLike = requires(const K k, typename K::Scalar a, typename K::Scalar b) {
    { k.zero() } -> std::convertible_to<typename K::Scalar>;
    { k.one() } -> std::convertible_to<typename K::Scalar>;
    { k.add(a, b) } -> std::convertible_to<typename K::Scalar>;
    { k.sub(a, b) } -> std::convertible_to<typename K::Scalar>;
    { k.neg(a) } -> std::convertible_to<typename K::Scalar>;
    { k.mul(a, b) } -> std::convertible_to<typename K::Scalar>;
    { k.inv(a) } -> std::convertible_to<typename K::Scalar>;
    { k.is_zero(a) } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { k.to_string(a) } -> std::convertible_to<std::string>;
    { k.characteristic() } -> std::convertible_to<std::uint64_t>;
};

// ---------------------------------------------------------------------------
// Runtime field selection
// ---------------------------------------------------------------------------

using FieldVariant = std::variant<Rationals, PrimeField>;

/// Builds a field handle from a spec. Rejects p = 2 and composite moduli.
inline FieldVariant field_create(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::Rationals)
        return Rationals{};
    return PrimeField{spec.p};
}

/// Calls fn with the concrete field handle selected by spec.
template <class Fn> decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::Rationals)
        return fn(Rationals{});
    return fn(PrimeField{spec.p});
}

} // namespace graphnil

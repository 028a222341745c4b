#pragma once
// Exact scalars: prime fields GF(p) with p < 2^61 and the rationals (GMP).
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include "errors.hpp"

namespace braidcoh {

inline bool is_prime_trial(uint64_t n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (uint64_t k = 5; k <= n / k; k += 6)
        if (n % k == 0 || n % (k + 2) == 0) return false;
    return true;
}

struct FieldSpec {
    enum class Kind { PrimeField, Rationals };
    Kind kind = Kind::Rationals;
    uint64_t p = 0;

    static FieldSpec prime(uint64_t p)
    {
        if (p >= (uint64_t(1) << 61)) fail(ErrorKind::NotPrime, "modulus must be below 2^61");
        if (!is_prime_trial(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
        return FieldSpec{Kind::PrimeField, p};
    }
    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

    bool is_prime_field() const { return kind == Kind::PrimeField; }
    uint64_t characteristic() const { return is_prime_field() ? p : 0; }
    std::string name() const { return is_prime_field() ? "GF(" + std::to_string(p) + ")" : "Q"; }
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline FieldSpec field_parse(const std::string& text)
{
    if (text == "Q" || text == "QQ") return FieldSpec::rationals();
    if (text.size() > 4 && text.compare(0, 3, "GF(") == 0 && text.back() == ')') {
        std::string digits = text.substr(3, text.size() - 4);
        if (digits.empty() || digits.size() > 19) fail(ErrorKind::ParseError, "bad modulus in '" + text + "'");
        for (char c : digits)
            if (c < '0' || c > '9') fail(ErrorKind::ParseError, "bad modulus in '" + text + "'");
        return FieldSpec::prime(std::stoull(digits));
    }
    fail(ErrorKind::ParseError, "field must be Q or GF(p), got '" + text + "'");
}

// Prime field with a runtime modulus. Values are canonical residues.
class GF {
public:
    using value_type = uint64_t;

    explicit GF(uint64_t p) : p_(p) {}
    explicit GF(const FieldSpec& s) : p_(s.p) {}

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::PrimeField, p_}; }
    uint64_t modulus() const { return p_; }
    uint64_t characteristic() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }
    bool is_zero(value_type a) const { return a == 0; }
    bool eq(value_type a, value_type b) const { return a == b; }

    value_type add(value_type a, value_type b) const
    {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    value_type inv(value_type a) const
    {
        if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 in " + spec().name());
        // extended Euclid on signed 128-bit to stay clear of overflow
        __int128 t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            __int128 q = r / nr;
            __int128 tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<uint64_t>(t);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    value_type from_int(long long v) const
    {
        long long m = static_cast<long long>(p_);
        long long r = v % m;
        return static_cast<uint64_t>(r < 0 ? r + m : r);
    }
    value_type from_mpz(const mpz_class& z) const
    {
        mpz_class m = z % mpz_class(std::to_string(p_));
        if (m < 0) m += mpz_class(std::to_string(p_));
        return std::stoull(m.get_str());
    }
    // accepts "a" or "a/b" with integer a, b
    value_type parse(const std::string& s) const
    {
        mpq_class q;
        if (!parse_rational(s, q)) fail(ErrorKind::ParseError, "bad scalar '" + s + "'");
        value_type den = from_mpz(q.get_den());
        if (den == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
        return div(from_mpz(q.get_num()), den);
    }
    std::string str(value_type a) const { return std::to_string(a); }

    template <class Rng>
    value_type random(Rng& rng) const { return rng() % p_; }

    static bool parse_rational(const std::string& s, mpq_class& out)
    {
        if (s.empty()) return false;
        size_t slash = s.find('/');
        auto ok_int = [](const std::string& t) {
            size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i >= t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto strip = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
        std::string a = s.substr(0, slash);
        std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!ok_int(a) || !ok_int(b) || b[0] == '-' || b[0] == '+') return false;
        mpz_class den(strip(b));
        if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
        out = mpq_class(mpz_class(strip(a)), den);
        out.canonicalize();
        return true;
    }

private:
    uint64_t p_;
};

// The rationals, always in lowest terms with positive denominator.
class QQ {
public:
    using value_type = mpq_class;

    QQ() = default;
    explicit QQ(const FieldSpec&) {}

    FieldSpec spec() const { return FieldSpec::rationals(); }
    uint64_t characteristic() const { return 0; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool eq(const value_type& a, const value_type& b) const { return a == b; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const
    {
        if (sgn(a) == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 in Q");
        return 1 / a;
    }
    value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

    value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    value_type parse(const std::string& s) const
    {
        mpq_class q;
        if (!GF::parse_rational(s, q)) fail(ErrorKind::ParseError, "bad scalar '" + s + "'");
        return q;
    }
    std::string str(const value_type& a) const { return a.get_str(); }

    // small numerators and denominators keep random tests readable
    template <class Rng>
    value_type random(Rng& rng) const
    {
        long num = static_cast<long>(rng() % 9) - 4;
        long den = static_cast<long>(rng() % 3) + 1;
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
};

template <class Fn>
decltype(auto) with_field(const FieldSpec& s, Fn&& fn)
{
    if (s.is_prime_field()) return fn(GF(s.p));
    return fn(QQ());
}

// Type-erased scalar for the plumbing layer (parsing, reports, scalar_arith).
class Scalar {
public:
    Scalar(FieldSpec f, uint64_t residue) : field_(f), r_(residue)
    {
        if (!f.is_prime_field()) q_ = mpq_class(mpz_class(std::to_string(residue)));
        else r_ = residue % f.p;
    }
    Scalar(FieldSpec f, const mpq_class& q) : field_(f)
    {
        if (f.is_prime_field()) r_ = GF(f.p).parse(q.get_str());
        else {
            q_ = q;
            q_.canonicalize();
        }
    }
    static Scalar parse(FieldSpec f, const std::string& s)
    {
        if (f.is_prime_field()) return Scalar(f, GF(f.p).parse(s));
        return Scalar(f, QQ().parse(s));
    }

    const FieldSpec& field() const { return field_; }
    uint64_t residue() const { return r_; }
    const mpq_class& rational() const { return q_; }
    bool is_zero() const { return field_.is_prime_field() ? r_ == 0 : sgn(q_) == 0; }
    std::string str() const { return field_.is_prime_field() ? std::to_string(r_) : q_.get_str(); }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        if (!(a.field_ == b.field_)) return false;
        return a.field_.is_prime_field() ? a.r_ == b.r_ : a.q_ == b.q_;
    }

private:
    FieldSpec field_;
    uint64_t r_ = 0;
    mpq_class q_;
};

enum class ScalarOp { Add, Sub, Mul, Div, Neg, Inv };

inline Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar* b = nullptr)
{
    bool binary = op == ScalarOp::Add || op == ScalarOp::Sub || op == ScalarOp::Mul || op == ScalarOp::Div;
    if (binary && !b) fail(ErrorKind::ShapeMismatch, "binary scalar op needs two operands");
    if (binary && !(a.field() == b->field()))
        fail(ErrorKind::FieldMismatch, a.field().name() + " vs " + b->field().name());
    if (a.field().is_prime_field()) {
        GF f(a.field().p);
        uint64_t x = a.residue(), y = binary ? b->residue() : 0;
        switch (op) {
        case ScalarOp::Add: return Scalar(a.field(), f.add(x, y));
        case ScalarOp::Sub: return Scalar(a.field(), f.sub(x, y));
        case ScalarOp::Mul: return Scalar(a.field(), f.mul(x, y));
        case ScalarOp::Div: return Scalar(a.field(), f.div(x, y));
        case ScalarOp::Neg: return Scalar(a.field(), f.neg(x));
        case ScalarOp::Inv: return Scalar(a.field(), f.inv(x));
        }
    }
    QQ f;
    const mpq_class& x = a.rational();
    mpq_class y = binary ? b->rational() : mpq_class(0);
    switch (op) {
    case ScalarOp::Add: return Scalar(a.field(), f.add(x, y));
    case ScalarOp::Sub: return Scalar(a.field(), f.sub(x, y));
    case ScalarOp::Mul: return Scalar(a.field(), f.mul(x, y));
    case ScalarOp::Div: return Scalar(a.field(), f.div(x, y));
    case ScalarOp::Neg: return Scalar(a.field(), f.neg(x));
    case ScalarOp::Inv: return Scalar(a.field(), f.inv(x));
    }
    return a;
}

} // namespace braidcoh

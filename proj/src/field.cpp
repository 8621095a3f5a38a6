#include "apolar/field.hpp"

#include <ostream>

namespace apolar {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw DomainError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    return Field(p);
}

Field Field::parse(const std::string& spec) {
    if (spec == "q" || spec == "Q" || spec == "rational") return rationals();
    std::string digits = spec;
    if (digits.rfind("p=", 0) == 0) digits = digits.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad field spec '" + spec + "' (expected q or p=<prime>)");
    unsigned long long p = std::stoull(digits);
    if (p >= (1ull << 31)) throw ParseError("prime too large in field spec '" + spec + "'");
    return prime(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (is_rational()) return Scalar(Rational(v));
    long long m = static_cast<long long>(modulus_);
    long long r = v % m;
    if (r < 0) r += m;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), modulus_});
}

Scalar Field::from_rational(const Rational& q) const {
    if (is_rational()) return Scalar(q);
    using boost::multiprecision::cpp_int;
    cpp_int num = boost::multiprecision::numerator(q) % modulus_;
    cpp_int den = boost::multiprecision::denominator(q) % modulus_;
    if (num < 0) num += modulus_;
    if (den == 0) throw DomainError("denominator divisible by the characteristic");
    Scalar n(Scalar::Residue{num.convert_to<std::uint32_t>(), modulus_});
    Scalar d(Scalar::Residue{den.convert_to<std::uint32_t>(), modulus_});
    return n / d;
}

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

Field Scalar::field() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
    return Field::rationals();
}

void Scalar::check_same(const Scalar& o) const {
    if (value_.index() != o.value_.index())
        throw FieldMismatch("scalar field mismatch (rational vs prime field)");
    if (const auto* r = std::get_if<Residue>(&value_)) {
        if (r->modulus != std::get<Residue>(o.value_).modulus)
            throw FieldMismatch("scalar field mismatch: F_" + std::to_string(r->modulus) + " vs F_" +
                                std::to_string(std::get<Residue>(o.value_).modulus));
    }
}

bool Scalar::is_zero() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
    return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<Rational>(value_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (const auto* r = std::get_if<Residue>(&value_)) {
        std::uint64_t v = std::uint64_t(r->value) + std::get<Residue>(o.value_).value;
        if (v >= r->modulus) v -= r->modulus;
        return Scalar(Residue{static_cast<std::uint32_t>(v), r->modulus});
    }
    return Scalar(Rational(std::get<Rational>(value_) + std::get<Rational>(o.value_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    if (const auto* r = std::get_if<Residue>(&value_)) {
        std::uint32_t b = std::get<Residue>(o.value_).value;
        std::uint32_t v = r->value >= b ? r->value - b : r->value + (r->modulus - b);
        return Scalar(Residue{v, r->modulus});
    }
    return Scalar(Rational(std::get<Rational>(value_) - std::get<Rational>(o.value_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (const auto* r = std::get_if<Residue>(&value_)) {
        std::uint64_t v = std::uint64_t(r->value) * std::get<Residue>(o.value_).value % r->modulus;
        return Scalar(Residue{static_cast<std::uint32_t>(v), r->modulus});
    }
    return Scalar(Rational(std::get<Rational>(value_) * std::get<Rational>(o.value_)));
}

Scalar Scalar::operator-() const {
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    return Scalar(Rational(-std::get<Rational>(value_)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
    return Scalar(Rational(Rational(1) / std::get<Rational>(value_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == std::get<Residue>(o.value_).value;
    return std::get<Rational>(value_) == std::get<Rational>(o.value_);
}

std::uint32_t Scalar::residue() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
    throw DomainError("residue() requested for a rational scalar");
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<Rational>(value_).str();
}

std::string Scalar::to_signed_string() const {
    if (const auto* r = std::get_if<Residue>(&value_)) {
        if (r->value > r->modulus / 2) return "-" + std::to_string(r->modulus - r->value);
        return std::to_string(r->value);
    }
    return std::get<Rational>(value_).str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_signed_string(); }

}  // namespace apolar

#ifndef APOLAR_FIELD_HPP
#define APOLAR_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "apolar/error.hpp"

namespace apolar {

using Rational = boost::multiprecision::cpp_rational;

class Scalar;

/// The base field: either Q or F_p for a prime p < 2^31.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);
    /// Parses "q", "p=101" or "101".
    static Field parse(const std::string& spec);

    bool is_rational() const { return modulus_ == 0; }
    std::uint32_t characteristic() const { return modulus_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rational(const Rational& q) const;

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
    std::uint32_t modulus_;
};

/// An exact element of a Field. Arithmetic never rounds; combining scalars
/// of different fields throws FieldMismatch.
class Scalar {
public:
    Scalar() : value_(Residue{0, 101}) {}

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    /// Canonical text: residues as 0..p-1, rationals as "a" or "a/b".
    std::string to_string() const;
    /// Residue printed in the symmetric range (-p/2, p/2]; rationals as is.
    std::string to_signed_string() const;
    /// Residue value (prime fields only).
    std::uint32_t residue() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    friend class Field;
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
    };
    explicit Scalar(Residue r) : value_(r) {}
    explicit Scalar(Rational q) : value_(std::move(q)) {}

    void check_same(const Scalar& o) const;

    std::variant<Residue, Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace apolar

#endif

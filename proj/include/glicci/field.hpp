#ifndef GLICCI_FIELD_HPP
#define GLICCI_FIELD_HPP

#include <cstdint>
#include <string>

#include "glicci/types.hpp"

namespace glicci {

// Coefficient field: the rationals or a prime field GF(p), 2 ≤ p < 2^31.
// Every computation in this library depends on the field only through its
// characteristic.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;  // set iff PrimeField

    static FieldSpec rationals() { return {}; }
    static FieldSpec gf(std::uint32_t prime);
    // "q" or "gf:p"
    static FieldSpec parse(const std::string& text);

    bool is_rationals() const { return kind == Kind::Rationals; }
    std::uint32_t characteristic() const { return is_rationals() ? 0 : p; }
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint32_t m);

}  // namespace glicci

#endif

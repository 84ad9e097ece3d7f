#include "glicci/field.hpp"

namespace glicci {

bool is_prime(std::uint32_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::gf(std::uint32_t prime) {
    if (prime < 2 || prime >= (1u << 31) || !is_prime(prime))
        throw invalid_field("GF(" + std::to_string(prime) + "): not a prime below 2^31");
    FieldSpec f;
    f.kind = Kind::PrimeField;
    f.p = prime;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
        std::uint64_t v = 0;
        const std::string digits = text.substr(3);
        if (digits.empty()) throw invalid_field("bad field spec '" + text + "'");
        for (char ch : digits) {
            if (ch < '0' || ch > '9') throw invalid_field("bad field spec '" + text + "'");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            if (v >= (1ull << 31)) throw invalid_field("prime in '" + text + "' too large");
        }
        return gf(static_cast<std::uint32_t>(v));
    }
    throw invalid_field("bad field spec '" + text + "' (expected q or gf:p)");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "q" : "gf:" + std::to_string(p);
}

}  // namespace glicci

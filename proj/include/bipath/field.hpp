#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bipath {

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A prime field F_p. Elements are residues in [0, p).
struct FieldSpec {
    std::uint32_t p;

    explicit FieldSpec(std::uint32_t prime = 2) : p(prime) {
        if (p < 2) throw error("field characteristic must be >= 2");
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw error("field characteristic " + std::to_string(p) + " is not prime");
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw error("inverse of zero");
        // Fermat: a^(p-2) mod p
        std::uint32_t result = 1, base = a % p, e = p - 2;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    bool operator==(const FieldSpec& o) const { return p == o.p; }
    bool operator!=(const FieldSpec& o) const { return p != o.p; }
};

}  // namespace bipath

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace envlab {

/// Residues mod p, always kept in canonical form 0 <= value < p.
using Scalar = std::uint32_t;

struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotStabilized : MathError {
    explicit NotStabilized(const std::string& msg) : MathError(msg) {}
};

struct DegenerateSample : MathError {
    explicit DegenerateSample(const std::string& msg) : MathError(msg) {}
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Arithmetic context for F_p. Elements are plain Scalar residues; every
/// operation here returns a canonical residue.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t prime) : p_(prime) {
        if (prime < 2 || prime >= (1u << 31) || !is_prime(prime))
            throw InputError("modulus must be a prime below 2^31, got " + std::to_string(prime));
    }

    std::uint32_t prime() const { return p_; }

    Scalar reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Scalar>(r);
    }

    Scalar add(Scalar a, Scalar b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return s >= p_ ? static_cast<Scalar>(s - p_) : static_cast<Scalar>(s);
    }

    Scalar sub(Scalar a, Scalar b) const {
        return a >= b ? a - b : static_cast<Scalar>(a + p_ - b);
    }

    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }

    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    Scalar inv(Scalar a) const {
        if (a == 0) throw MathError("division by zero in F_p");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Scalar>(t);
    }

    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

    Scalar pow(Scalar a, std::uint64_t e) const {
        return static_cast<Scalar>(detail::powmod64(a, e, p_));
    }

private:
    std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seeded random stream. Substreams derived from (seed, index) are
/// statistically independent and fully reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed ^ 0x5bf03635ull)) {}

    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed) ^ splitmix64(index * 0x9e3779b97f4a7c15ull + 1));
    }

    Rng fork(std::uint64_t index) { return Rng(gen_() ^ splitmix64(index)); }

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, m) by rejection; no modulo bias.
    std::uint32_t below(std::uint32_t m) {
        std::uint64_t limit = (~0ull / m) * m;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<std::uint32_t>(x % m);
    }

    Scalar scalar(const PrimeField& F) { return below(F.prime()); }

    Scalar nonzero_scalar(const PrimeField& F) { return 1 + below(F.prime() - 1); }

private:
    std::mt19937_64 gen_;
};

} // namespace envlab

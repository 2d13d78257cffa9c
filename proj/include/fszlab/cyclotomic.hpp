#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fszlab {

/// How a cyclotomic value sits inside Q.
enum class CycKind { Integer, RationalNonInteger, Irrational };

/// Exact element of Q(zeta_d).
///
/// Stored as an integer coefficient vector over the power basis
/// 1, z, ..., z^{phi(d)-1} (reduced modulo the d-th cyclotomic polynomial)
/// together with a common positive denominator.  Values are kept normalized:
/// the gcd of all numerator coefficients and the denominator is 1, and the
/// zero value has denominator 1.  All arithmetic is exact; any intermediate
/// that would overflow 64-bit integers throws std::overflow_error instead of
/// wrapping.
class CycNum {
public:
    /// Zero, conductor 1.
    CycNum();

    static CycNum integer(int64_t v);
    static CycNum rational(int64_t num, int64_t den);
    /// zeta_d^k (k taken modulo d).
    static CycNum root_of_unity(int64_t d, int64_t k);
    /// Build from raw coefficients over zeta_d^0..zeta_d^{m-1} (m <= d allowed)
    /// and a denominator; reduces modulo the d-th cyclotomic polynomial and
    /// normalizes.
    static CycNum from_coeffs(int64_t d, std::vector<int64_t> raw, int64_t den);

    int64_t conductor() const { return conductor_; }
    const std::vector<int64_t>& coefficients() const { return num_; }
    int64_t denominator() const { return den_; }

    bool is_zero() const;
    CycKind classify() const;
    /// Numerator/denominator when the value is rational; throws otherwise.
    std::pair<int64_t, int64_t> as_rational() const;

    /// Galois action zeta -> zeta^q; requires gcd(q, conductor) = 1.
    CycNum galois(int64_t q) const;
    /// Fixed by complex conjugation (zeta -> zeta^{-1}).
    bool is_real() const;

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    /// Multiply by the rational num/den.
    CycNum scaled(int64_t num, int64_t den) const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// Rendering "a0 + a1*z + ... (conductor d, /den)"; plain integers and
    /// rationals render without the conductor suffix when the conductor is 1.
    std::string to_string() const;

private:
    CycNum(int64_t conductor, std::vector<int64_t> num, int64_t den);
    /// Re-express at conductor m (current conductor must divide m).
    CycNum lifted(int64_t m) const;
    void normalize();

    int64_t conductor_;
    std::vector<int64_t> num_;
    int64_t den_;
};

/// Euler totient.
int64_t euler_phi(int64_t n);

/// Monic d-th cyclotomic polynomial as integer coefficients c0..c_{phi(d)}.
const std::vector<int64_t>& cyclotomic_polynomial(int64_t d);

/// Sorted list of the positive divisors of n.
std::vector<int64_t> divisors_of(int64_t n);

}  // namespace fszlab

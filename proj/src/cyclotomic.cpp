#include "fszlab/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fszlab {

namespace {

int64_t add_ck(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic arithmetic overflowed 64-bit range");
    return r;
}

int64_t mul_ck(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic arithmetic overflowed 64-bit range");
    return r;
}

constexpr int64_t kConductorLimit = 2'000'000;

// Exact division of integer polynomials, used for (x^d - 1) / prod(Phi_t).
std::vector<int64_t> poly_divide_exact(std::vector<int64_t> num, const std::vector<int64_t>& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("poly_divide_exact: divisor must be monic");
    std::vector<int64_t> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (int64_t i = static_cast<int64_t>(num.size()) - 1;
         i >= static_cast<int64_t>(den.size()) - 1; --i) {
        int64_t c = num[static_cast<size_t>(i)];
        if (c == 0) continue;
        size_t shift = static_cast<size_t>(i) - (den.size() - 1);
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j)
            num[shift + j] = add_ck(num[shift + j], -mul_ck(c, den[j]));
    }
    for (int64_t c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: division not exact");
    return quot;
}

// Reduce raw coefficients (any length) modulo Phi_d down to degree < phi(d).
std::vector<int64_t> reduce_mod_phi(int64_t d, std::vector<int64_t> raw) {
    const std::vector<int64_t>& phi = cyclotomic_polynomial(d);
    size_t deg = phi.size() - 1;  // = euler_phi(d)
    if (raw.size() < deg) raw.resize(deg, 0);
    for (size_t i = raw.size(); i-- > deg;) {
        int64_t c = raw[i];
        if (c == 0) continue;
        raw[i] = 0;
        size_t shift = i - deg;
        for (size_t j = 0; j < deg; ++j)
            raw[shift + j] = add_ck(raw[shift + j], -mul_ck(c, phi[j]));
    }
    raw.resize(deg);
    return raw;
}

}  // namespace

int64_t euler_phi(int64_t n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    int64_t result = n, m = n;
    for (int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<int64_t> divisors_of(int64_t n) {
    if (n <= 0) throw std::invalid_argument("divisors_of: n must be positive");
    std::vector<int64_t> divs;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

const std::vector<int64_t>& cyclotomic_polynomial(int64_t d) {
    if (d <= 0) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
    if (d > kConductorLimit) throw std::invalid_argument("cyclotomic_polynomial: conductor too large");
    static std::mutex mx;
    static std::map<int64_t, std::vector<int64_t>> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    std::vector<int64_t> poly;
    if (d == 1) {
        poly = {-1, 1};  // x - 1
    } else {
        // Phi_d = (x^d - 1) / prod_{t | d, t < d} Phi_t
        std::vector<int64_t> num(static_cast<size_t>(d) + 1, 0);
        num[0] = -1;
        num[static_cast<size_t>(d)] = 1;
        for (int64_t t : divisors_of(d)) {
            if (t == d) continue;
            // recursive fill of the cache; re-lock safe because we recurse
            // before taking the lock? -- avoid recursion: compute inline.
            auto sub = cache.find(t);
            if (sub == cache.end()) {
                // divisors are processed in increasing order, so all proper
                // divisors of t < d are already present except t itself;
                // compute t now with the same inline product.
                std::vector<int64_t> numt(static_cast<size_t>(t) + 1, 0);
                numt[0] = -1;
                numt[static_cast<size_t>(t)] = 1;
                for (int64_t s : divisors_of(t)) {
                    if (s == t) continue;
                    numt = poly_divide_exact(std::move(numt), cache.at(s));
                }
                sub = cache.emplace(t, std::move(numt)).first;
            }
            num = poly_divide_exact(std::move(num), sub->second);
        }
        poly = std::move(num);
    }
    return cache.emplace(d, std::move(poly)).first->second;
}

CycNum::CycNum() : conductor_(1), num_{0}, den_(1) {}

CycNum::CycNum(int64_t conductor, std::vector<int64_t> num, int64_t den)
    : conductor_(conductor), num_(std::move(num)), den_(den) {
    normalize();
}

CycNum CycNum::integer(int64_t v) { return CycNum(1, {v}, 1); }

CycNum CycNum::rational(int64_t num, int64_t den) {
    if (den == 0) throw std::invalid_argument("CycNum::rational: zero denominator");
    return CycNum(1, {num}, den);
}

CycNum CycNum::root_of_unity(int64_t d, int64_t k) {
    if (d <= 0) throw std::invalid_argument("CycNum::root_of_unity: conductor must be positive");
    k %= d;
    if (k < 0) k += d;
    std::vector<int64_t> raw(static_cast<size_t>(d), 0);
    raw[static_cast<size_t>(k)] = 1;
    return from_coeffs(d, std::move(raw), 1);
}

CycNum CycNum::from_coeffs(int64_t d, std::vector<int64_t> raw, int64_t den) {
    if (d <= 0) throw std::invalid_argument("CycNum: conductor must be positive");
    if (den == 0) throw std::invalid_argument("CycNum: zero denominator");
    return CycNum(d, reduce_mod_phi(d, std::move(raw)), den);
}

void CycNum::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (int64_t& c : num_) c = add_ck(0, -c);
    }
    int64_t g = den_;
    for (int64_t c : num_) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1) {
        den_ /= g;
        for (int64_t& c : num_) c /= g;
    }
    bool zero = std::all_of(num_.begin(), num_.end(), [](int64_t c) { return c == 0; });
    if (zero) den_ = 1;
}

bool CycNum::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](int64_t c) { return c == 0; });
}

CycKind CycNum::classify() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return CycKind::Irrational;
    return den_ == 1 ? CycKind::Integer : CycKind::RationalNonInteger;
}

std::pair<int64_t, int64_t> CycNum::as_rational() const {
    if (classify() == CycKind::Irrational)
        throw std::domain_error("CycNum::as_rational: value is irrational");
    return {num_[0], den_};
}

CycNum CycNum::lifted(int64_t m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw std::logic_error("CycNum::lifted: conductor does not divide target");
    int64_t step = m / conductor_;
    std::vector<int64_t> raw(static_cast<size_t>(m), 0);
    for (size_t k = 0; k < num_.size(); ++k)
        raw[static_cast<size_t>(step * static_cast<int64_t>(k))] = num_[k];
    return from_coeffs(m, std::move(raw), den_);
}

CycNum CycNum::galois(int64_t q) const {
    int64_t d = conductor_;
    q %= d;
    if (q < 0) q += d;
    if (std::gcd(q, d) != 1)
        throw std::invalid_argument("CycNum::galois: exponent not coprime to conductor");
    std::vector<int64_t> raw(static_cast<size_t>(d), 0);
    for (size_t k = 0; k < num_.size(); ++k) {
        size_t target = static_cast<size_t>((static_cast<int64_t>(k) * q) % d);
        raw[target] = add_ck(raw[target], num_[k]);
    }
    return from_coeffs(d, std::move(raw), den_);
}

bool CycNum::is_real() const {
    if (conductor_ <= 2) return true;
    return galois(conductor_ - 1) == *this;
}

CycNum CycNum::operator-() const {
    std::vector<int64_t> n(num_);
    for (int64_t& c : n) c = add_ck(0, -c);
    return CycNum(conductor_, std::move(n), den_);
}

CycNum CycNum::operator+(const CycNum& o) const {
    int64_t m = std::lcm(conductor_, o.conductor_);
    if (m > kConductorLimit) throw std::overflow_error("CycNum: combined conductor too large");
    CycNum a = lifted(m), b = o.lifted(m);
    std::vector<int64_t> n(a.num_.size());
    for (size_t i = 0; i < n.size(); ++i)
        n[i] = add_ck(mul_ck(a.num_[i], b.den_), mul_ck(b.num_[i], a.den_));
    return CycNum(m, std::move(n), mul_ck(a.den_, b.den_));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    int64_t m = std::lcm(conductor_, o.conductor_);
    if (m > kConductorLimit) throw std::overflow_error("CycNum: combined conductor too large");
    CycNum a = lifted(m), b = o.lifted(m);
    std::vector<int64_t> prod(a.num_.size() + b.num_.size() - 1, 0);
    for (size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i] == 0) continue;
        for (size_t j = 0; j < b.num_.size(); ++j) {
            if (b.num_[j] == 0) continue;
            prod[i + j] = add_ck(prod[i + j], mul_ck(a.num_[i], b.num_[j]));
        }
    }
    return CycNum(m, reduce_mod_phi(m, std::move(prod)), mul_ck(a.den_, b.den_));
}

CycNum CycNum::scaled(int64_t num, int64_t den) const {
    if (den == 0) throw std::invalid_argument("CycNum::scaled: zero denominator");
    std::vector<int64_t> n(num_);
    for (int64_t& c : n) c = mul_ck(c, num);
    return CycNum(conductor_, std::move(n), mul_ck(den_, den));
}

bool CycNum::operator==(const CycNum& o) const {
    if (conductor_ == o.conductor_)
        return den_ == o.den_ && num_ == o.num_;
    int64_t m = std::lcm(conductor_, o.conductor_);
    if (m > kConductorLimit) throw std::overflow_error("CycNum: combined conductor too large");
    CycNum a = lifted(m), b = o.lifted(m);
    return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycNum::to_string() const {
    std::ostringstream out;
    if (is_zero()) {
        out << "0";
        return out.str();
    }
    bool first = true;
    for (size_t k = 0; k < num_.size(); ++k) {
        int64_t c = num_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        int64_t mag = c < 0 ? -c : c;
        if (k == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    if (conductor_ > 1 || den_ > 1) {
        out << " (conductor " << conductor_;
        if (den_ > 1) out << ", /" << den_;
        out << ")";
    }
    return out.str();
}

}  // namespace fszlab

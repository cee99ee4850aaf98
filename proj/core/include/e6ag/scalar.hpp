// Exact coefficient fields: arbitrary-precision rationals (GMP-backed),
// gaussian rationals, and prime fields F_p with p >= 17.
//
// All arithmetic is exact; there is no floating point anywhere in this
// library. Values are immutable in the algebraic sense: operators return
// fresh values and never mutate operands.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace e6ag {

// ---------------------------------------------------------------------------
// Rat: arbitrary-precision rational, always reduced, denominator > 0.
// ---------------------------------------------------------------------------
class Rat {
public:
    Rat() : v_(0) {}
    explicit Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }
    static Rat of(long n) { return Rat(n); }
    static Rat ratio(long n, long d) { return Rat(n, d); }

    bool is_zero() const { return v_ == 0; }

    Rat operator+(const Rat& o) const { return from_raw(v_ + o.v_); }
    Rat operator-(const Rat& o) const { return from_raw(v_ - o.v_); }
    Rat operator*(const Rat& o) const { return from_raw(v_ * o.v_); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return from_raw(v_ / o.v_);
    }
    Rat operator-() const { return from_raw(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat inv() const { return one() / *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    // Canonical ordering (for sorting/merging only).
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    // Canonical text form "p/q", q > 0, gcd(p,q) = 1. Integers print as "p/1".
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    static std::optional<Rat> parse(std::string_view s) {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
                return std::nullopt;
        try {
            mpq_class q(std::string(s), 10);
            if (q.get_den() == 0) return std::nullopt;
            q.canonicalize();
            return from_raw(q);
        } catch (...) {
            return std::nullopt;
        }
    }

    const mpq_class& raw() const { return v_; }
    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

private:
    static Rat from_raw(mpq_class q) {
        Rat r;
        r.v_ = std::move(q);  // GMP arithmetic keeps canonical form
        return r;
    }
    mpq_class v_;
};

// ---------------------------------------------------------------------------
// GaussRat: re + im*i with i^2 = -1, both components Rat.
// ---------------------------------------------------------------------------
class GaussRat {
public:
    GaussRat() = default;
    explicit GaussRat(long n) : re_(n) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat zero() { return GaussRat(); }
    static GaussRat one() { return GaussRat(1); }
    static GaussRat of(long n) { return GaussRat(n); }
    static GaussRat ratio(long n, long d) { return GaussRat(Rat(n, d), Rat()); }
    static GaussRat i() { return GaussRat(Rat(), Rat(1)); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussRat operator+(const GaussRat& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussRat operator-(const GaussRat& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussRat operator/(const GaussRat& o) const {
        Rat n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n.is_zero()) throw std::domain_error("GaussRat: division by zero");
        return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
    }
    GaussRat operator-() const { return {-re_, -im_}; }
    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
    GaussRat inv() const { return one() / *this; }

    bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
    bool operator<(const GaussRat& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    // Canonical text form "p/q+r/s*i".
    std::string str() const { return re_.str() + "+" + im_.str() + "*i"; }
    static std::optional<GaussRat> parse(std::string_view s) {
        if (s.size() < 2 || s.substr(s.size() - 2) != "*i") {
            auto re = Rat::parse(s);  // bare rational accepted
            if (!re) return std::nullopt;
            return GaussRat(*re, Rat());
        }
        s.remove_suffix(2);
        auto plus = s.find('+', 1);
        if (plus == std::string_view::npos) return std::nullopt;
        auto re = Rat::parse(s.substr(0, plus));
        auto im = Rat::parse(s.substr(plus + 1));
        if (!re || !im) return std::nullopt;
        return GaussRat(*re, *im);
    }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

private:
    Rat re_, im_;
};

// ---------------------------------------------------------------------------
// Fp: prime field element. The modulus is a thread-local context in the
// style of NTL's zz_p; FpContext installs it with RAII. p must be prime,
// 17 <= p < 2^31 (characteristic assumption: small primes excluded).
// ---------------------------------------------------------------------------
namespace detail {
inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for n < 3,215,031,751
    uint32_t d = n - 1, r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    auto mulmod = [n](uint64_t a, uint64_t b) { return a * b % n; };
    for (uint32_t a : {2u, 3u, 5u, 7u}) {
        uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (uint32_t k = 1; k < r; ++k) {
            x = mulmod(x, x);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

struct FpState {
    uint64_t p = 0;
    uint64_t barrett = 0;  // floor(2^64 / p)
};
inline thread_local FpState fp_state;
}  // namespace detail

class Fp {
public:
    Fp() : v_(0) {}

    static void install_modulus(uint64_t p) {
        if (p < 17 || p >= (1ull << 31))
            throw std::invalid_argument("Fp: modulus must satisfy 17 <= p < 2^31");
        if (!detail::is_prime_u32(static_cast<uint32_t>(p)))
            throw std::invalid_argument("Fp: modulus must be prime");
        detail::fp_state.p = p;
        detail::fp_state.barrett = ~uint64_t{0} / p;
    }
    static uint64_t modulus() {
        if (detail::fp_state.p == 0) throw std::logic_error("Fp: no modulus installed");
        return detail::fp_state.p;
    }
    // Copies the calling thread's modulus into a worker thread.
    static uint64_t modulus_raw() { return detail::fp_state.p; }
    static void adopt_modulus(uint64_t p) {
        detail::fp_state.p = p;
        detail::fp_state.barrett = p ? ~uint64_t{0} / p : 0;
    }

    static Fp zero() { return Fp(); }
    static Fp one() { return of(1); }
    static Fp of(long n) {
        uint64_t p = modulus();
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return from_raw(static_cast<uint64_t>(r));
    }
    static Fp ratio(long n, long d) { return of(n) / of(d); }
    static Fp from_residue(uint64_t r) { return from_raw(r % modulus()); }

    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        uint64_t p = detail::fp_state.p, s = v_ + o.v_;
        return from_raw(s >= p ? s - p : s);
    }
    Fp operator-(const Fp& o) const {
        uint64_t p = detail::fp_state.p;
        return from_raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_);
    }
    Fp operator*(const Fp& o) const { return from_raw(mulmod(v_, o.v_)); }
    Fp operator-() const {
        return from_raw(v_ == 0 ? 0 : detail::fp_state.p - v_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { v_ = mulmod(v_, o.v_); return *this; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        int64_t p = static_cast<int64_t>(detail::fp_state.p);
        int64_t a = static_cast<int64_t>(v_), b = p, x0 = 1, x1 = 0;
        while (b) {
            int64_t q = a / b;
            a -= q * b; std::swap(a, b);
            x0 -= q * x1; std::swap(x0, x1);
        }
        if (x0 < 0) x0 += p;
        return from_raw(static_cast<uint64_t>(x0));
    }

    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }
    bool operator<(const Fp& o) const { return v_ < o.v_; }

    std::string str() const { return std::to_string(v_); }
    static std::optional<Fp> parse(std::string_view s) {
        if (s.empty()) return std::nullopt;
        uint64_t r = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            r = r * 10 + static_cast<uint64_t>(c - '0');
            if (r >= (1ull << 62)) return std::nullopt;
        }
        return from_raw(r % modulus());
    }

    uint64_t residue() const { return v_; }

    // Tonelli-Shanks; nullopt when v is a non-residue.
    std::optional<Fp> sqrt() const {
        uint64_t p = modulus();
        if (v_ == 0) return Fp();
        if (powmod(v_, (p - 1) / 2) != 1) return std::nullopt;
        if (p % 4 == 3) return from_raw(powmod(v_, (p + 1) / 4));
        uint64_t q = p - 1, s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        uint64_t z = 2;
        while (powmod(z, (p - 1) / 2) == 1) ++z;
        uint64_t m = s, c = powmod(z, q), t = powmod(v_, q), r = powmod(v_, (q + 1) / 2);
        while (t != 1) {
            uint64_t tt = t, i = 0;
            while (tt != 1) { tt = mulmod(tt, tt); ++i; }
            uint64_t b = c;
            for (uint64_t k = 0; k < m - i - 1; ++k) b = mulmod(b, b);
            m = i;
            c = mulmod(b, b);
            t = mulmod(t, c);
            r = mulmod(r, b);
        }
        return from_raw(r);
    }

private:
    static Fp from_raw(uint64_t v) {
        Fp f; f.v_ = v; return f;
    }
    static uint64_t mulmod(uint64_t a, uint64_t b) {
        uint64_t t = a * b;  // a, b < 2^31 so no overflow
        const auto& st = detail::fp_state;
        uint64_t q = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(t) * st.barrett) >> 64);
        uint64_t r = t - q * st.p;
        if (r >= st.p) r -= st.p;
        return r;
    }
    static uint64_t powmod(uint64_t b, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    }
    uint64_t v_;
};

// RAII modulus scope.
class FpContext {
public:
    explicit FpContext(uint64_t p) : saved_(detail::fp_state) { Fp::install_modulus(p); }
    ~FpContext() { detail::fp_state = saved_; }
    FpContext(const FpContext&) = delete;
    FpContext& operator=(const FpContext&) = delete;

private:
    detail::FpState saved_;
};

// ---------------------------------------------------------------------------
// Field traits
// ---------------------------------------------------------------------------
template <class F>
struct field_traits;

template <>
struct field_traits<Rat> {
    static constexpr const char* name = "rat";
    static constexpr bool has_i = false;
    static std::optional<Rat> sqrt_minus_one() { return std::nullopt; }
};
template <>
struct field_traits<GaussRat> {
    static constexpr const char* name = "rat-i";
    static constexpr bool has_i = true;
    static std::optional<GaussRat> sqrt_minus_one() { return GaussRat::i(); }
};
template <>
struct field_traits<Fp> {
    static std::string field_name() { return "fp:" + std::to_string(Fp::modulus()); }
    static constexpr const char* name = "fp";
    static constexpr bool has_i = false;  // depends on p; query sqrt_minus_one
    static std::optional<Fp> sqrt_minus_one() { return (-Fp::one()).sqrt(); }
};

template <class F>
std::string field_name() {
    if constexpr (std::is_same_v<F, Fp>)
        return field_traits<Fp>::field_name();
    else
        return field_traits<F>::name;
}

template <class F>
concept ExactField = requires(F a, F b) {
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
    { F::of(1L) } -> std::same_as<F>;
    { F::ratio(1L, 2L) } -> std::same_as<F>;
    { a + b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
    { a == b } -> std::same_as<bool>;
    { a < b } -> std::same_as<bool>;
};

static_assert(ExactField<Rat>);
static_assert(ExactField<GaussRat>);
static_assert(ExactField<Fp>);

}  // namespace e6ag

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiver {

// Arbitrary-precision signed integer, sign/magnitude with base-10^9 limbs.
// Provides exactly the ring operations the library needs (no division);
// coefficient arithmetic must stay exact regardless of instance size.
class Integer {
public:
    Integer() = default;

    Integer(long long v) {  // NOLINT: implicit by design, mirrors int literals
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u > 0) {
            mag_.push_back(static_cast<std::uint32_t>(u % kBase));
            u /= kBase;
        }
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    Integer operator-() const {
        Integer r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    Integer& operator+=(const Integer& o) {
        if (o.sign_ == 0) return *this;
        if (sign_ == 0) { *this = o; return *this; }
        if (sign_ == o.sign_) {
            add_mag(mag_, o.mag_);
            return *this;
        }
        int c = compare_mag(mag_, o.mag_);
        if (c == 0) { *this = Integer(); return *this; }
        if (c > 0) {
            sub_mag(mag_, o.mag_);
        } else {
            std::vector<std::uint32_t> m = o.mag_;
            sub_mag(m, mag_);
            mag_ = std::move(m);
            sign_ = o.sign_;
        }
        return *this;
    }

    Integer& operator-=(const Integer& o) { return *this += -o; }

    Integer& operator*=(const Integer& o) {
        if (sign_ == 0 || o.sign_ == 0) { *this = Integer(); return *this; }
        std::vector<std::uint32_t> out(mag_.size() + o.mag_.size(), 0);
        for (std::size_t i = 0; i < mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < o.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] +
                                    out[i + j] + carry;
                out[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + o.mag_.size();
            while (carry > 0) {
                std::uint64_t cur = out[k] + carry;
                out[k] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        mag_ = std::move(out);
        sign_ *= o.sign_;
        return *this;
    }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = compare_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(mag_.back());
        for (std::size_t i = mag_.size() - 1; i-- > 0;) {
            std::string limb = std::to_string(mag_[i]);
            s += std::string(9 - limb.size(), '0') + limb;
        }
        return s;
    }

    // Exact conversion for small values; throws if it does not fit.
    long long to_long_long() const {
        long long v = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            if (v > (kLLMax - static_cast<long long>(mag_[i])) / kBase)
                throw std::overflow_error("Integer::to_long_long: out of range");
            v = v * kBase + mag_[i];
        }
        return sign_ < 0 ? -v : v;
    }

private:
    static constexpr std::uint32_t kBase = 1000000000u;
    static constexpr long long kLLMax = 9223372036854775807LL;

    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static void add_mag(std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) + carry +
                                (i < b.size() ? b[i] : 0);
            a[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = static_cast<std::uint32_t>(cur / kBase);
        }
        if (carry) a.push_back(carry);
    }

    // requires a >= b
    static void sub_mag(std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            a[i] = static_cast<std::uint32_t>(cur);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    int sign_ = 0;
    std::vector<std::uint32_t> mag_;
};

inline Integer pow(Integer base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow: negative exponent");
    Integer r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

}  // namespace quiver

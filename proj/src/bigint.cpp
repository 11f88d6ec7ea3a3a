#include "wps/bigint.hpp"

#include <algorithm>
#include <limits>

#include "wps/errors.hpp"

namespace wps {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ull - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (m > 0) {
        limbs_.push_back(static_cast<uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw input_error("empty integer literal");
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw input_error("bad digit in integer literal: " + s);
        r.limbs_ = mul_small(r.limbs_, 10);
        // add digit
        uint32_t carry = static_cast<uint32_t>(s[i] - '0');
        for (size_t j = 0; j < r.limbs_.size() && carry; ++j) {
            uint64_t t = static_cast<uint64_t>(r.limbs_[j]) + carry;
            r.limbs_[j] = static_cast<uint32_t>(t % kBase);
            carry = static_cast<uint32_t>(t / kBase);
        }
        if (carry) r.limbs_.push_back(carry);
    }
    r.sign_ = r.limbs_.empty() ? 0 : sign;
    r.trim();
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t t = carry;
        if (i < a.size()) t += a[i];
        if (i < b.size()) t += b[i];
        r.push_back(static_cast<uint32_t>(t % kBase));
        carry = static_cast<uint32_t>(t / kBase);
    }
    if (carry) r.push_back(carry);
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t t = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (t < 0) {
            t += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(t);
    }
    WPS_ASSERT(borrow == 0, "sub_mag underflow");
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t t = acc[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
            acc[i + j] = t % kBase;
            carry = t / kBase;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t t = acc[k] + carry;
            acc[k] = t % kBase;
            carry = t / kBase;
            ++k;
        }
    }
    std::vector<uint32_t> r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint32_t>(acc[i]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_small(const std::vector<uint32_t>& a, uint32_t m) {
    std::vector<uint32_t> r;
    r.reserve(a.size() + 1);
    uint64_t carry = 0;
    for (uint32_t limb : a) {
        uint64_t t = static_cast<uint64_t>(limb) * m + carry;
        r.push_back(static_cast<uint32_t>(t % kBase));
        carry = t / kBase;
    }
    while (carry) {
        r.push_back(static_cast<uint32_t>(carry % kBase));
        carry /= kBase;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
            r.sign_ = b.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw internal_error("BigInt division by zero");
    if (cmp_mag(a.limbs_, b.limbs_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // Schoolbook long division on magnitudes; quotient digit by binary search.
    std::vector<uint32_t> quot(a.limbs_.size(), 0);
    std::vector<uint32_t> rem;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        rem.insert(rem.begin(), a.limbs_[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        uint32_t lo = 0, hi = kBase - 1, digit = 0;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            if (cmp_mag(mul_small(b.limbs_, mid), rem) <= 0) {
                digit = mid;
                if (mid == kBase - 1) break;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        quot[i] = digit;
        if (digit) rem = sub_mag(rem, mul_small(b.limbs_, digit));
    }
    q.limbs_ = std::move(quot);
    q.sign_ = 1;
    q.trim();
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.limbs_ = std::move(rem);
    r.sign_ = 1;
    r.trim();
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

bool BigInt::fits_ll() const {
    static const BigInt kMin(std::numeric_limits<long long>::min());
    static const BigInt kMax(std::numeric_limits<long long>::max());
    return kMin <= *this && *this <= kMax;
}

long long BigInt::to_ll() const {
    WPS_ASSERT(fits_ll(), "BigInt out of long long range: " + to_string());
    unsigned long long v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    if (sign_ < 0) {
        if (v == static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ull)
            return std::numeric_limits<long long>::min();
        return -static_cast<long long>(v);
    }
    return static_cast<long long>(v);
}

} // namespace wps

#include "crysext/galois_field.hpp"

#include "crysext/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace crysext {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::not_in_fil: return "not_in_fil";
    case ErrorKind::invalid_weight: return "invalid_weight";
    case ErrorKind::inertially_incompatible: return "inertially_incompatible";
    case ErrorKind::determinant_mismatch: return "determinant_mismatch";
    case ErrorKind::no_valid_pairs: return "no_valid_pairs";
    case ErrorKind::invalid_pair: return "invalid_pair";
    case ErrorKind::inadmissible_lambda: return "inadmissible_lambda";
    case ErrorKind::shift_sum_exceeds_e: return "shift_sum_exceeds_e";
    case ErrorKind::shift_negative_exponent: return "shift_negative_exponent";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Conway polynomials, coefficients c_0..c_f (monic).
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},          {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 1}, {4, 1}},          {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},    {{11, 1}, {9, 1}},
        {{11, 2}, {2, 7, 1}},      {{13, 1}, {11, 1}},
        {{13, 2}, {2, 12, 1}},
    };
    return table;
}

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

int least_primitive_root(int p) {
    for (int g = 1; g < p; ++g) {
        long long x = 1;
        int order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return g;
    }
    return 1;
}

}  // namespace

const GaloisField& GaloisField::get(int p, int f) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<GaloisField>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p, f}];
    if (!slot) slot.reset(new GaloisField(p, f));
    return *slot;
}

GaloisField::GaloisField(int p, int f) : p_(p), f_(f), q_(1) {
    if (!is_prime(p) || p == 2)
        throw Error(ErrorKind::invalid_argument, "field characteristic must be an odd prime, got " + std::to_string(p));
    if (f < 1) throw Error(ErrorKind::invalid_argument, "field degree must be >= 1");
    unsigned long long q = 1;
    for (int i = 0; i < f; ++i) {
        q *= static_cast<unsigned long long>(p);
        if (q > max_order) throw Error(ErrorKind::invalid_argument, "field order exceeds supported bound 2^20");
    }
    q_ = static_cast<std::uint32_t>(q);
    prime_generator_ = least_primitive_root(p);

    // Try the tabulated polynomial first, then search lexicographically.
    auto try_modulus = [&](const std::vector<int>& m) {
        modulus_ = m;
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        std::vector<int> cur(f_, 0);
        cur[0] = 1;
        std::vector<bool> seen(q_, false);
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            Code c = from_digits(cur);
            if (c == 0 || seen[c]) return false;
            seen[c] = true;
            exp_[i] = c;
            log_[c] = i;
            // multiply cur by a, reduce with a^f = -sum m_i a^i
            int top = cur[f_ - 1];
            for (int j = f_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            for (int j = 0; j < f_; ++j) cur[j] = static_cast<int>(mod(cur[j] - static_cast<long long>(top) * m[j], p_));
        }
        return from_digits(cur) == 1;
    };

    bool ok = false;
    if (auto it = conway_table().find({p, f}); it != conway_table().end()) ok = try_modulus(it->second);
    if (!ok && f == 1) ok = try_modulus({static_cast<int>(mod(-prime_generator_, p)), 1});
    if (!ok) {
        std::vector<int> m(f + 1, 0);
        m[f] = 1;
        // enumerate lower coefficients in increasing lexicographic order (high degree first)
        std::uint32_t count = q_;
        for (std::uint32_t idx = 1; idx < count && !ok; ++idx) {
            std::uint32_t t = idx;
            for (int j = f - 1; j >= 0; --j) {
                m[j] = static_cast<int>(t % p);
                t /= p;
            }
            if (m[0] == 0) continue;
            ok = try_modulus(m);
        }
    }
    if (!ok) throw Error(ErrorKind::internal, "no primitive polynomial found");

    if (q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Code a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (Code b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<int> s(f_);
                for (int j = 0; j < f_; ++j) s[j] = (da[j] + db[j]) % p_;
                add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(from_digits(s));
            }
        }
    }
}

std::vector<int> GaloisField::digits(Code a) const {
    std::vector<int> d(f_);
    for (int j = 0; j < f_; ++j) {
        d[j] = static_cast<int>(a % p_);
        a /= p_;
    }
    return d;
}

GaloisField::Code GaloisField::from_digits(const std::vector<int>& d) const {
    Code c = 0;
    for (int j = f_ - 1; j >= 0; --j) c = c * p_ + static_cast<Code>(d[j]);
    return c;
}

GaloisField::Code GaloisField::add(Code a, Code b) const noexcept {
    if (f_ == 1) {
        Code s = a + b;
        return s >= static_cast<Code>(p_) ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    Code r = 0, scale = 1;
    for (int j = 0; j < f_; ++j) {
        Code s = (a % p_ + b % p_) % p_;
        r += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

GaloisField::Code GaloisField::neg(Code a) const noexcept {
    if (f_ == 1) return a == 0 ? 0 : p_ - a;
    Code r = 0, scale = 1;
    for (int j = 0; j < f_; ++j) {
        Code d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return r;
}

GaloisField::Code GaloisField::sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

GaloisField::Code GaloisField::inv(Code a) const {
    if (a == 0) throw Error(ErrorKind::invalid_argument, "division by zero in GF(" + std::to_string(q_) + ")");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

GaloisField::Code GaloisField::pow(Code a, long long n) const {
    if (n == 0) return 1;
    if (a == 0) {
        if (n < 0) throw Error(ErrorKind::invalid_argument, "zero has no negative powers");
        return 0;
    }
    long long e = mod(static_cast<long long>(log_[a]) * mod(n, q_ - 1), q_ - 1);
    return exp_[static_cast<std::size_t>(e)];
}

GaloisField::Code GaloisField::code_of_int(long long n) const noexcept {
    return static_cast<Code>(mod(n, p_));
}

std::uint32_t GaloisField::multiplicative_order(Code a) const {
    if (a == 0) throw Error(ErrorKind::invalid_argument, "zero has no multiplicative order");
    std::uint32_t order = 1;
    Code x = a;
    while (x != 1) {
        x = mul(x, a);
        ++order;
    }
    return order;
}

FieldElem GaloisField::zero() const { return {this, 0}; }
FieldElem GaloisField::one() const { return {this, 1}; }
FieldElem GaloisField::from_int(long long n) const { return {this, code_of_int(n)}; }
FieldElem GaloisField::primitive_element() const { return {this, exp_[q_ > 2 ? 1 : 0]}; }

FieldElem GaloisField::from_code(Code c) const {
    if (c >= q_) throw Error(ErrorKind::invalid_argument, "field code out of range");
    return {this, c};
}

FieldElem GaloisField::parse(std::string_view text) const { return {this, parse_code(text)}; }

std::string GaloisField::format(Code a) const {
    if (f_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::ostringstream out;
    bool first = true;
    for (int j = f_ - 1; j >= 0; --j) {
        if (d[j] == 0) continue;
        if (!first) out << '+';
        first = false;
        if (j == 0 || d[j] != 1) out << d[j];
        if (j >= 1) out << 'a';
        if (j >= 2) out << '^' << j;
    }
    if (first) out << '0';
    return out.str();
}

// Accepts decimal integers (reduced mod p) and, for f > 1, sums of terms
// "c", "a", "ca", "a^k", "ca^k".
GaloisField::Code GaloisField::parse_code(std::string_view text) const {
    auto fail = [&]() -> Code {
        throw Error(ErrorKind::invalid_argument, "cannot parse field element '" + std::string(text) + "' for GF(" +
                                                     std::to_string(q_) + ")");
    };
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '*') s.push_back(ch);
    if (s.empty()) return fail();

    std::vector<long long> coeffs(f_, 0);
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        std::size_t start = pos;
        long long c = 0;
        bool has_digits = false;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            c = c * 10 + (s[pos] - '0');
            if (c > 1'000'000'000LL) return fail();
            ++pos;
            has_digits = true;
        }
        int power = 0;
        if (pos < s.size() && s[pos] == 'a') {
            ++pos;
            power = 1;
            if (!has_digits) c = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                int k = 0;
                bool has_k = false;
                while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                    k = k * 10 + (s[pos] - '0');
                    if (k > 1000) return fail();
                    ++pos;
                    has_k = true;
                }
                if (!has_k) return fail();
                power = k;
            }
        } else if (!has_digits) {
            return fail();
        }
        if (pos == start) return fail();
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-') return fail();
        if (power > 0 && f_ == 1) return fail();
        // reduce a^power into the basis by repeated multiplication
        Code term = 1;
        Code gen = f_ == 1 ? 1 : static_cast<Code>(p_);  // code of `a`
        for (int i = 0; i < power; ++i) term = mul(term, gen);
        Code scaled = mul(term, code_of_int(sign * c));
        auto d = digits(scaled);
        for (int j = 0; j < f_; ++j) coeffs[j] += d[j];
    }
    std::vector<int> d(f_);
    for (int j = 0; j < f_; ++j) d[j] = static_cast<int>(mod(coeffs[j], p_));
    return from_digits(d);
}

}  // namespace crysext

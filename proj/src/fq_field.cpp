#include "wittbox/fq_field.hpp"

#include <algorithm>
#include <sstream>

#include "wittbox/errors.hpp"

namespace wittbox {

namespace {

constexpr std::uint32_t kTableLimit = 256;

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a modulo a monic b, over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = (lead * b[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool irreducible(const Coeffs& modulus, std::uint32_t p, unsigned h) {
    for (unsigned d = 1; d <= h / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Coeffs divisor(d + 1, 0);
            std::uint64_t rest = code;
            for (unsigned i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            divisor[d] = 1;
            if (poly_mod(modulus, divisor, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldParams FieldParams::prime(std::uint32_t p) {
    return FieldParams{p, 1, {0, 1}};
}

FieldParams FieldParams::with_default_modulus(std::uint32_t p, unsigned h) {
    if (h == 1) return prime(p);
    if (p == 2 && h == 2) return {2, 2, {1, 1, 1}};
    if (p == 2 && h == 3) return {2, 3, {1, 1, 0, 1}};
    if (p == 3 && h == 2) return {3, 2, {1, 0, 1}};
    if (p == 5 && h == 2) return {5, 2, {2, 0, 1}};
    std::ostringstream msg;
    msg << "no built-in modulus for p=" << p << ", h=" << h << "; supply one explicitly";
    throw ValidationError(msg.str());
}

Field::Field(FieldParams params) : params_(std::move(params)) {
    const auto p = params_.p;
    const auto h = params_.h;
    if (!is_prime(p)) throw ValidationError("p=" + std::to_string(p) + " is not prime");
    if (h < 1 || h > kMaxDegree) {
        throw ValidationError("h must lie in [1, " + std::to_string(kMaxDegree) + "]");
    }
    if (params_.modulus.size() != h + 1 || params_.modulus[h] != 1) {
        throw ValidationError("modulus must be monic of degree h=" + std::to_string(h));
    }
    for (auto c : params_.modulus) {
        if (c >= p) throw ValidationError("modulus coefficients must lie in [0, p-1]");
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < h; ++i) {
        q *= p;
        if (q >= (std::uint64_t{1} << 31)) throw ValidationError("field order q too large");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (!irreducible(params_.modulus, p, h)) {
        throw ValidationError("modulus is reducible over F_" + std::to_string(p));
    }

    if (q_ <= kTableLimit) {
        add_table_.resize(std::size_t{q_} * q_);
        mul_table_.resize(std::size_t{q_} * q_);
        neg_table_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[std::size_t{a} * q_ + b] = slow_add(a, b);
                mul_table_[std::size_t{a} * q_ + b] = slow_mul(a, b);
            }
        }
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                if (add_table_[std::size_t{a} * q_ + b] == 0) {
                    neg_table_[a] = b;
                    break;
                }
            }
        }
    }
}

Coeffs Field::decode(std::uint32_t code) const {
    Coeffs c(params_.h, 0);
    for (unsigned i = 0; i < params_.h; ++i) {
        c[i] = code % params_.p;
        code /= params_.p;
    }
    return c;
}

std::uint32_t Field::encode(const Coeffs& c) const {
    std::uint32_t code = 0;
    for (unsigned i = params_.h; i-- > 0;) code = code * params_.p + c[i];
    return code;
}

std::uint32_t Field::slow_add(std::uint32_t a, std::uint32_t b) const {
    auto ca = decode(a);
    const auto cb = decode(b);
    for (unsigned i = 0; i < params_.h; ++i) ca[i] = (ca[i] + cb[i]) % params_.p;
    return encode(ca);
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
    const auto p = params_.p;
    const auto ca = decode(a);
    const auto cb = decode(b);
    Coeffs prod(2 * params_.h - 1, 0);
    for (unsigned i = 0; i < params_.h; ++i) {
        for (unsigned j = 0; j < params_.h; ++j) {
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p);
        }
    }
    auto rem = poly_mod(std::move(prod), params_.modulus, p);
    rem.resize(params_.h, 0);
    return encode(rem);
}

FqElem Field::make(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > params_.h) {
        throw ValidationError("field literal has more than h=" + std::to_string(params_.h) +
                              " coefficients");
    }
    Coeffs c(params_.h, 0);
    const auto p = static_cast<std::int64_t>(params_.p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        c[i] = static_cast<std::uint32_t>(((coeffs[i] % p) + p) % p);
    }
    return FqElem{encode(c)};
}

FqElem Field::make(std::initializer_list<std::int64_t> coeffs) const {
    return make(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

FqElem Field::from_int(std::int64_t c) const {
    const auto p = static_cast<std::int64_t>(params_.p);
    return FqElem{static_cast<std::uint32_t>(((c % p) + p) % p)};
}

std::vector<std::uint32_t> Field::coeffs(FqElem a) const { return decode(a.code()); }

FqElem Field::generator() const {
    if (params_.h == 1) return zero();
    return FqElem{params_.p};
}

FqElem Field::add(FqElem a, FqElem b) const {
    if (!add_table_.empty()) return FqElem{add_table_[std::size_t{a.code()} * q_ + b.code()]};
    return FqElem{slow_add(a.code(), b.code())};
}

FqElem Field::neg(FqElem a) const {
    if (!neg_table_.empty()) return FqElem{neg_table_[a.code()]};
    auto c = decode(a.code());
    for (auto& x : c) x = (params_.p - x) % params_.p;
    return FqElem{encode(c)};
}

FqElem Field::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Field::mul(FqElem a, FqElem b) const {
    if (!mul_table_.empty()) return FqElem{mul_table_[std::size_t{a.code()} * q_ + b.code()]};
    return FqElem{slow_mul(a.code(), b.code())};
}

FqElem Field::pow(FqElem a, std::uint64_t e) const {
    FqElem result = one();
    FqElem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FqElem Field::inv(FqElem a) const {
    if (a.is_zero()) throw DomainError("inversion of zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
}

FqElem Field::frobenius(FqElem a, std::uint64_t e) const {
    e %= params_.h;
    for (std::uint64_t i = 0; i < e; ++i) a = pow(a, params_.p);
    return a;
}

FqElem Field::frobenius_inverse(FqElem a, std::uint64_t e) const {
    const auto h = params_.h;
    return frobenius(a, (h - e % h) % h);
}

std::vector<FqElem> Field::enumerate() const {
    std::vector<FqElem> all;
    all.reserve(q_);
    for (std::uint32_t code = 0; code < q_; ++code) all.emplace_back(code);
    return all;
}

std::string Field::render(FqElem a) const {
    if (a.is_zero()) return "0";
    const auto c = decode(a.code());
    std::string out;
    for (unsigned i = 0; i < params_.h; ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace wittbox

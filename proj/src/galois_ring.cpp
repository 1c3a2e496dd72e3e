#include "wittbox/galois_ring.hpp"

#include <sstream>

#include "wittbox/errors.hpp"

namespace wittbox {

namespace {
constexpr std::uint32_t kTeichmuellerTableLimit = 1u << 16;
}

GaloisRing::GaloisRing(std::shared_ptr<const Field> field, unsigned precision)
    : field_(std::move(field)), precision_(precision), modulus_(1) {
    if (!field_) throw ValidationError("Galois ring needs a residue field");
    if (precision_ < 1) throw ValidationError("Galois ring precision must be >= 1");
    for (unsigned i = 0; i < precision_; ++i) {
        modulus_ *= field_->p();
        if (modulus_ >= (std::uint64_t{1} << 31)) {
            throw ValidationError("p^M must stay below 2^31");
        }
    }
    if (field_->q() <= kTeichmuellerTableLimit) {
        teichmuller_table_.reserve(field_->q());
        for (auto a : field_->enumerate()) teichmuller_table_.push_back(teichmuller_uncached(a));
    }
}

std::uint64_t GaloisRing::size() const noexcept {
    std::uint64_t s = 1;
    for (unsigned i = 0; i < h(); ++i) s *= modulus_;
    return s;
}

GRElem GaloisRing::one() const {
    GRElem r;
    r[0] = 1 % modulus_;
    return r;
}

GRElem GaloisRing::from_int(std::int64_t c) const {
    const auto n = static_cast<std::int64_t>(modulus_);
    GRElem r;
    r[0] = static_cast<std::uint64_t>(((c % n) + n) % n);
    return r;
}

GRElem GaloisRing::from_int(const mpz_class& c) const {
    mpz_class r = c % mpz_class(static_cast<unsigned long>(modulus_));
    if (r < 0) r += static_cast<unsigned long>(modulus_);
    GRElem out;
    out[0] = r.get_ui();
    return out;
}

GRElem GaloisRing::make(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > h()) {
        throw ValidationError("Galois ring literal has more than h coordinates");
    }
    const auto n = static_cast<std::int64_t>(modulus_);
    GRElem r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        r[i] = static_cast<std::uint64_t>(((coeffs[i] % n) + n) % n);
    }
    return r;
}

GRElem GaloisRing::make(std::initializer_list<std::int64_t> coeffs) const {
    return make(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

GRElem GaloisRing::add(const GRElem& a, const GRElem& b) const {
    GRElem r;
    for (unsigned i = 0; i < h(); ++i) r[i] = (a[i] + b[i]) % modulus_;
    return r;
}

GRElem GaloisRing::neg(const GRElem& a) const {
    GRElem r;
    for (unsigned i = 0; i < h(); ++i) r[i] = (modulus_ - a[i]) % modulus_;
    return r;
}

GRElem GaloisRing::sub(const GRElem& a, const GRElem& b) const { return add(a, neg(b)); }

GRElem GaloisRing::mul(const GRElem& a, const GRElem& b) const {
    const unsigned deg = h();
    if (deg == 1) {
        GRElem r;
        r[0] = (a[0] * b[0]) % modulus_;
        return r;
    }
    std::array<std::uint64_t, 2 * Field::kMaxDegree> prod{};
    for (unsigned i = 0; i < deg; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < deg; ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % modulus_;
        }
    }
    // t^deg = -(phi_0 + phi_1 t + ... + phi_{deg-1} t^{deg-1})
    const auto& phi = field_->params().modulus;
    for (unsigned k = 2 * deg - 2; k >= deg; --k) {
        const std::uint64_t lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < deg; ++i) {
            const std::uint64_t sub = (lead * phi[i]) % modulus_;
            prod[k - deg + i] = (prod[k - deg + i] + modulus_ - sub) % modulus_;
        }
    }
    GRElem r;
    for (unsigned i = 0; i < deg; ++i) r[i] = prod[i];
    return r;
}

GRElem GaloisRing::pow(const GRElem& a, std::uint64_t e) const {
    GRElem result = one();
    GRElem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

GRElem GaloisRing::scale(const GRElem& a, std::uint64_t k) const {
    k %= modulus_;
    GRElem r;
    for (unsigned i = 0; i < h(); ++i) r[i] = (a[i] * k) % modulus_;
    return r;
}

FqElem GaloisRing::residue(const GRElem& a) const {
    std::vector<std::int64_t> c(h());
    for (unsigned i = 0; i < h(); ++i) c[i] = static_cast<std::int64_t>(a[i] % p());
    return field_->make(c);
}

GRElem GaloisRing::naive_lift(FqElem a) const {
    const auto c = field_->coeffs(a);
    GRElem r;
    for (unsigned i = 0; i < h(); ++i) r[i] = c[i] % modulus_;
    return r;
}

GRElem GaloisRing::teichmuller_uncached(FqElem a) const {
    GRElem z = naive_lift(a);
    const std::uint64_t q = field_->q();
    for (unsigned i = 1; i < precision_; ++i) z = pow(z, q);
    return z;
}

GRElem GaloisRing::teichmuller(FqElem a) const {
    if (a.code() < teichmuller_table_.size()) return teichmuller_table_[a.code()];
    return teichmuller_uncached(a);
}

DigitVec GaloisRing::to_digits(const GRElem& y) const {
    DigitVec out;
    out.digits.reserve(precision_);
    GRElem rest = y;
    for (unsigned i = 0; i < precision_; ++i) {
        const FqElem digit = residue(rest);
        out.digits.push_back(digit);
        // rest - tau(digit) is divisible by p as a residue mod p^M; dividing
        // leaves a value that is exact modulo p^{M-i-1}, enough for the
        // remaining digits.
        GRElem diff = sub(rest, teichmuller(digit));
        for (unsigned k = 0; k < h(); ++k) diff[k] /= p();
        rest = diff;
    }
    return out;
}

GRElem GaloisRing::from_digits(const DigitVec& d) const {
    if (d.size() != precision_) {
        throw ValidationError("digit vector length " + std::to_string(d.size()) +
                              " differs from precision " + std::to_string(precision_));
    }
    GRElem acc;
    std::uint64_t weight = 1;
    for (unsigned i = 0; i < precision_; ++i) {
        acc = add(acc, scale(teichmuller(d[i]), weight));
        weight *= p();
    }
    return acc;
}

Valuation GaloisRing::ord_p(const GRElem& y) const {
    if (y.is_zero()) return Valuation::infinity();
    std::int64_t e = 0;
    std::uint64_t pe = p();
    while (static_cast<unsigned>(e) + 1 < precision_) {
        bool divisible = true;
        for (unsigned i = 0; i < h(); ++i) {
            if (y[i] % pe != 0) {
                divisible = false;
                break;
            }
        }
        if (!divisible) break;
        ++e;
        pe *= p();
    }
    return Valuation(e);
}

GRElem GaloisRing::truncate(const GRElem& y, unsigned k) const {
    if (k > precision_) throw ValidationError("cannot truncate to a higher precision");
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p();
    GRElem r;
    for (unsigned i = 0; i < h(); ++i) r[i] = y[i] % pk;
    return r;
}

GRElem GaloisRing::element(std::uint64_t index) const {
    GRElem r;
    for (unsigned i = 0; i < h(); ++i) {
        r[i] = index % modulus_;
        index /= modulus_;
    }
    return r;
}

std::vector<GRElem> GaloisRing::enumerate() const {
    const auto n = size();
    std::vector<GRElem> all;
    all.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) all.push_back(element(i));
    return all;
}

std::string GaloisRing::render_list(const GRElem& a) const {
    std::ostringstream out;
    out << "[";
    for (unsigned i = 0; i < h(); ++i) {
        if (i > 0) out << ", ";
        out << a[i];
    }
    out << "]";
    return out.str();
}

std::string GaloisRing::render(const GRElem& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (unsigned i = 0; i < h(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(a[i]);
            continue;
        }
        if (a[i] != 1) out += std::to_string(a[i]) + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace wittbox

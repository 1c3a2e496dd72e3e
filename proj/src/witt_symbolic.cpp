#include "wittbox/witt_symbolic.hpp"

#include <map>
#include <mutex>

namespace wittbox {

namespace {

mpz_class ipow(std::uint64_t base, unsigned e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

std::uint64_t upow(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

// w_k(x_{0j}, ..., x_{kj}) inside the variable set of `vars`.
IntPoly ghost_component(const Variables& vars, unsigned k, unsigned j, unsigned r, std::uint32_t p) {
    IntPoly out(IntegerRing{}, vars);
    for (unsigned i = 0; i <= k; ++i) {
        Monomial e(vars->size(), 0);
        e[witt_variable_index(i, j, r)] = static_cast<std::uint32_t>(upow(p, k - i));
        out.add_term(e, ipow(p, i));
    }
    return out;
}

IntPoly combined_ghost(const Variables& vars, unsigned k, unsigned r, std::uint32_t p, WittOp kind) {
    if (kind == WittOp::sum) {
        IntPoly acc(IntegerRing{}, vars);
        for (unsigned j = 1; j <= r; ++j) acc += ghost_component(vars, k, j, r, p);
        return acc;
    }
    IntPoly acc = IntPoly::constant(IntegerRing{}, vars, 1);
    for (unsigned j = 1; j <= r; ++j) acc *= ghost_component(vars, k, j, r, p);
    return acc;
}

std::vector<IntPoly> generate(const WittGenRequest& req) {
    const auto vars = witt_variables(req.n, req.r);
    std::vector<IntPoly> polys;
    polys.reserve(req.n + 1);
    for (unsigned k = 0; k <= req.n; ++k) {
        IntPoly numerator = combined_ghost(vars, k, req.r, req.p, req.kind);
        for (unsigned i = 0; i < k; ++i) {
            numerator -= polys[i].pow(upow(req.p, k - i)).scaled(ipow(req.p, i));
        }
        polys.push_back(int_divide_exact(numerator, ipow(req.p, k)));
    }
    return polys;
}

}  // namespace

const char* to_string(WittOp op) { return op == WittOp::sum ? "sum" : "product"; }

IntPoly witt_poly(unsigned k, std::uint32_t p) {
    std::vector<std::string> names;
    for (unsigned i = 0; i <= k; ++i) names.push_back("X" + std::to_string(i));
    const auto vars = make_variables(std::move(names));
    IntPoly out(IntegerRing{}, vars);
    for (unsigned i = 0; i <= k; ++i) {
        Monomial e(k + 1, 0);
        e[i] = static_cast<std::uint32_t>(upow(p, k - i));
        out.add_term(e, ipow(p, i));
    }
    return out;
}

Variables witt_variables(unsigned n, unsigned r) {
    std::vector<std::string> names;
    names.reserve(std::size_t{n + 1} * r);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 1; j <= r; ++j) {
            if (r == 2) {
                names.push_back((j == 1 ? "X" : "Y") + std::to_string(i));
            } else {
                names.push_back("x[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            }
        }
    }
    return make_variables(std::move(names));
}

std::shared_ptr<const std::vector<IntPoly>> witt_op_polys(const WittGenRequest& req) {
    if (req.r < 2) throw ValidationError("Witt fold count r must be >= 2");
    static std::mutex mutex;
    static std::map<WittGenRequest, std::shared_ptr<const std::vector<IntPoly>>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(req); it != cache.end()) return it->second;
    }
    auto fresh = std::make_shared<const std::vector<IntPoly>>(generate(req));
    std::lock_guard lock(mutex);
    // A concurrent fill may have won; both computed the same value.
    return cache.try_emplace(req, std::move(fresh)).first->second;
}

std::vector<IntPoly> twisted_digit_polys(const WittGenRequest& req) {
    const auto& polys = *witt_op_polys(req);
    std::vector<std::uint64_t> factors;
    factors.reserve(std::size_t{req.n + 1} * req.r);
    for (unsigned i = 0; i <= req.n; ++i) {
        for (unsigned j = 1; j <= req.r; ++j) factors.push_back(upow(req.p, i));
    }
    std::vector<IntPoly> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(scale_exponents(f, factors));
    return out;
}

bool ghost_identity_holds(std::uint32_t p, unsigned r, WittOp kind, std::span<const IntPoly> polys) {
    if (polys.empty()) return true;
    const auto& vars = polys.front().variables();
    for (unsigned k = 0; k < polys.size(); ++k) {
        IntPoly lhs(IntegerRing{}, vars);
        for (unsigned i = 0; i <= k; ++i) lhs += polys[i].pow(upow(p, k - i)).scaled(ipow(p, i));
        if (!(lhs == combined_ghost(vars, k, r, p, kind))) return false;
    }
    return true;
}

bool ghost_check(const WittGenRequest& req) {
    const auto& polys = *witt_op_polys(req);
    return ghost_identity_holds(req.p, req.r, req.kind, polys);
}

std::vector<std::uint64_t> witt_weights(unsigned n, std::uint32_t p, std::span<const std::uint64_t> d) {
    std::vector<std::uint64_t> w;
    w.reserve(std::size_t{n + 1} * d.size());
    for (unsigned i = 0; i <= n; ++i) {
        for (auto dj : d) w.push_back(dj * upow(p, i));
    }
    return w;
}

}  // namespace wittbox

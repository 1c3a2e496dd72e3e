#include "wittbox/parser.hpp"

#include <map>
#include <regex>
#include <sstream>

namespace wittbox {

namespace {

std::int64_t small_int(const mpz_class& v, int line) {
    if (!v.fits_slong_p()) throw ParseError(line, "integer literal out of range: " + v.get_str());
    return v.get_si();
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct Line {
    int number;
    std::string text;
};

// Runs fn, turning math errors into validation errors that name the line.
template <class Fn>
auto at_line(int line, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError("line " + std::to_string(line) + ": " + e.what());
    }
}

unsigned parse_unsigned(const std::string& value, int line, const std::string& key) {
    static const std::regex number(R"(\d{1,9})");
    if (!std::regex_match(value, number)) throw ParseError(line, key + " must be a nonnegative integer");
    return static_cast<unsigned>(std::stoul(value));
}

}  // namespace

FqElem parse_fq_literal(const Field& field, std::string_view text, int line) {
    auto shared = std::make_shared<const Field>(field);
    const FqRing ring(shared);
    const auto vars = make_variables({});
    PolyParser<FqRing> parser(
        ring, vars, [&](const mpz_class& c) { return field.from_int(small_int(c % field.p(), line)); },
        [&](const std::string& name) -> std::optional<FqPoly> {
            if (name == "t" && field.h() > 1) return FqPoly::constant(ring, vars, field.generator());
            return std::nullopt;
        },
        line);
    return parser.parse(text).coefficient(Monomial{});
}

std::vector<unsigned> parse_modulus(std::uint64_t p, std::string_view text, int line) {
    const auto vars = make_variables({"t"});
    PolyParser<IntegerRing> parser(IntegerRing{}, vars, [](const mpz_class& c) { return c; }, {}, line);
    const IntPoly f = parser.parse(text);
    std::vector<unsigned> out(f.total_degree() + 1, 0);
    for (const auto& [e, c] : f.terms()) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        out[e[0]] = static_cast<unsigned>(r.get_ui());
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

IntPoly parse_int_poly(unsigned n, std::string_view text, int line) {
    PolyParser<IntegerRing> parser(IntegerRing{}, system_variables(n), [](const mpz_class& c) { return c; }, {},
                                   line);
    return parser.parse(text);
}

FqPoly parse_box_poly(std::shared_ptr<const Field> field, unsigned n, unsigned m, std::string_view text, int line) {
    const FqRing ring(field);
    const auto vars = box_variables(n, m);
    const Field& f = *field;
    PolyParser<FqRing> parser(
        ring, vars, [&](const mpz_class& c) { return f.from_int(small_int(c % f.p(), line)); },
        [&](const std::string& name) -> std::optional<FqPoly> {
            if (name == "t" && f.h() > 1) return FqPoly::constant(ring, vars, f.generator());
            return std::nullopt;
        },
        line);
    return parser.parse(text);
}

GRPoly parse_gr_poly(std::shared_ptr<const GaloisRing> ring, unsigned n, std::string_view text, int line) {
    const GRRing coeffs(ring);
    const auto vars = system_variables(n);
    PolyParser<GRRing> parser(
        coeffs, vars, [&](const mpz_class& c) { return ring->from_int(c); },
        [&](const std::string& name) -> std::optional<GRPoly> {
            if (name == "t" && ring->h() > 1) return GRPoly::constant(coeffs, vars, ring->make({0, 1}));
            return std::nullopt;
        },
        line);
    return parser.parse(text);
}

ProblemInstance parse_instance(std::string_view text) {
    static const std::regex section_re(R"(\[\s*([A-Za-z]+)\s*\])");
    static const std::regex key_re(R"(([A-Za-z]+)\s*=\s*(.*))");
    static const std::regex system_re(R"(f(\d+)\s*=\s*(.*?)\s+mod\s+p(?:\s*\^\s*(\d+))?)");
    static const std::regex box_re(R"(g\s*\[\s*(\d+)\s*\]\s*\[\s*(\d+)\s*\]\s*=\s*(.*))");

    std::map<std::string, std::vector<Line>> sections;
    std::map<std::string, int> section_line;
    std::string current;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        std::smatch match;
        if (std::regex_match(line, match, section_re)) {
            current = match[1];
            if (current != "ring" && current != "problem" && current != "system" && current != "box") {
                throw ParseError(number, "unknown section [" + current + "]");
            }
            if (section_line.contains(current)) throw ParseError(number, "duplicate section [" + current + "]");
            section_line[current] = number;
            sections[current];
            continue;
        }
        if (current.empty()) throw ParseError(number, "content before the first section");
        sections[current].push_back({number, std::move(line)});
    }
    for (const char* required : {"ring", "problem", "system"}) {
        if (!section_line.contains(required)) {
            throw ParseError(0, std::string("missing [") + required + "] section");
        }
    }

    auto key_values = [&](const std::string& name, std::initializer_list<const char*> allowed) {
        std::map<std::string, Line> out;
        for (const auto& l : sections[name]) {
            std::smatch match;
            if (!std::regex_match(l.text, match, key_re)) throw ParseError(l.number, "expected key = value");
            const std::string key = match[1];
            if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) ==
                allowed.end()) {
                throw ParseError(l.number, "unknown key '" + key + "' in [" + name + "]");
            }
            if (out.contains(key)) throw ParseError(l.number, "duplicate key '" + key + "'");
            out[key] = {l.number, trim(match.str(2))};
        }
        return out;
    };

    const auto ring_kv = key_values("ring", {"p", "h", "modulus"});
    const int ring_line = section_line["ring"];
    if (!ring_kv.contains("p")) throw ParseError(ring_line, "[ring] needs p");
    const Line& p_line = ring_kv.at("p");
    const unsigned p = parse_unsigned(p_line.text, p_line.number, "p");
    unsigned h = 1;
    if (ring_kv.contains("h")) h = parse_unsigned(ring_kv.at("h").text, ring_kv.at("h").number, "h");
    std::shared_ptr<const Field> field;
    if (ring_kv.contains("modulus")) {
        const Line& mod = ring_kv.at("modulus");
        const auto coeffs = parse_modulus(p, mod.text, mod.number);
        field = at_line(mod.number, [&] {
            if (coeffs.size() != h + 1) {
                throw ValidationError("modulus degree " + std::to_string(coeffs.size() - 1) + " differs from h = " +
                                      std::to_string(h));
            }
            return std::make_shared<const Field>(FieldParams{p, h, coeffs});
        });
    } else {
        field = at_line(ring_line, [&] { return std::make_shared<const Field>(FieldParams::with_default_modulus(p, h)); });
    }

    const auto problem_kv = key_values("problem", {"n", "m"});
    const int problem_line = section_line["problem"];
    for (const char* key : {"n", "m"}) {
        if (!problem_kv.contains(key)) throw ParseError(problem_line, std::string("[problem] needs ") + key);
    }
    const unsigned n = parse_unsigned(problem_kv.at("n").text, problem_kv.at("n").number, "n");
    const unsigned m = parse_unsigned(problem_kv.at("m").text, problem_kv.at("m").number, "m");
    if (n < 1) throw ValidationError("line " + std::to_string(problem_kv.at("n").number) + ": n must be >= 1");
    if (m < 1) throw ValidationError("line " + std::to_string(problem_kv.at("m").number) + ": m must be >= 1");

    std::map<GeneratorIndex, FqPoly> generators;
    for (const auto& l : sections["box"]) {
        std::smatch match;
        if (!std::regex_match(l.text, match, box_re)) throw ParseError(l.number, "expected g[i][j] = <expression>");
        const GeneratorIndex idx{static_cast<unsigned>(std::stoul(match[1])), static_cast<unsigned>(std::stoul(match[2]))};
        if (generators.contains(idx)) throw ParseError(l.number, "duplicate generator " + l.text.substr(0, l.text.find('=')));
        generators.emplace(idx, parse_box_poly(field, n, m, match.str(3), l.number));
    }
    const int box_line = section_line.contains("box") ? section_line["box"] : problem_line;
    BoxSpec box = at_line(box_line, [&] { return BoxSpec(field, n, m, generators); });

    struct Pending {
        int line;
        unsigned index;
        std::string expr;
        unsigned modulus;
    };
    std::vector<Pending> pending;
    unsigned precision = m;
    for (const auto& l : sections["system"]) {
        std::smatch match;
        if (!std::regex_match(l.text, match, system_re)) {
            throw ParseError(l.number, "expected f<k> = <expression> mod p^<m_k>");
        }
        const unsigned mk = match[3].matched ? parse_unsigned(match[3], l.number, "modulus exponent") : 1;
        if (mk < 1) throw ParseError(l.number, "modulus exponent must be >= 1");
        pending.push_back({l.number, static_cast<unsigned>(std::stoul(match[1])), match.str(2), mk});
        precision = std::max(precision, mk);
    }
    if (pending.empty()) throw ParseError(section_line["system"], "[system] has no congruences");
    for (std::size_t k = 0; k < pending.size(); ++k) {
        if (pending[k].index != k + 1) {
            throw ParseError(pending[k].line, "congruences must be numbered f1, f2, ... in order");
        }
    }
    auto ring = at_line(section_line["system"], [&] { return std::make_shared<const GaloisRing>(field, precision); });
    std::vector<Congruence> system;
    for (const auto& pe : pending) system.push_back({parse_gr_poly(ring, n, pe.expr, pe.line), pe.modulus});
    return at_line(section_line["system"], [&] { return ProblemInstance(std::move(box), std::move(system)); });
}

}  // namespace wittbox

namespace wittbox {

std::string format_instance(const ProblemInstance& inst) {
    const auto& params = inst.field().params();
    std::ostringstream out;
    out << "[ring]\np = " << params.p << "\nh = " << params.h << "\n";
    std::string modulus;
    for (std::size_t i = params.modulus.size(); i-- > 0;) {
        const unsigned c = params.modulus[i];
        if (c == 0) continue;
        if (!modulus.empty()) modulus += " + ";
        if (i == 0) {
            modulus += std::to_string(c);
            continue;
        }
        if (c != 1) modulus += std::to_string(c) + "*";
        modulus += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    out << "modulus = " << modulus << "\n";
    out << "\n[problem]\nn = " << inst.n() << "\nm = " << inst.m() << "\n\n[system]\n";
    for (std::size_t k = 0; k < inst.s(); ++k) {
        const auto& c = inst.system()[k];
        out << "f" << k + 1 << " = " << c.poly.to_string() << " mod p^" << c.modulus_exponent << "\n";
    }
    if (!inst.box().generators().empty()) {
        out << "\n[box]\n";
        for (const auto& [idx, g] : inst.box().generators()) {
            out << "g[" << idx.i << "][" << idx.j << "] = " << g.to_string() << "\n";
        }
    }
    return out.str();
}

}  // namespace wittbox

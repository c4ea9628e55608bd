#include "chaincodes/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chaincodes {

namespace {

using u64 = std::uint64_t;

struct Parser {
    const RingPtr& ring;
    const std::vector<std::size_t>& dims;
    const std::string& s;
    std::size_t pos = 0;
    std::size_t depth = 0;
    bool allow_vars;

    Parser(const RingPtr& ring, const std::vector<std::size_t>& dims, const std::string& s,
           bool allow_vars)
        : ring(ring), dims(dims), s(s), allow_vars(allow_vars) {}

    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < s.size(); ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    MultiPoly constant(u64 code) const { return MultiPoly::constant(ring, dims, code); }

    MultiPoly variable(std::size_t var) {
        if (!allow_vars) fail("variables are not allowed here");
        if (var >= dims.size()) fail("variable index out of range for the given dims");
        MultiPoly f(ring, dims);
        std::vector<std::size_t> e(dims.size(), 0);
        e[var] = 1 % dims[var];
        f.set_coeff(e, ring->one());
        return f;
    }

    u64 parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        u64 v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<u64>(s[pos] - '0');
            if (v > (1ull << 62)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            if (++depth > 512) fail("expression nested too deeply");
            ++pos;
            MultiPoly f = parse_expr();
            if (!eat(')')) fail("expected ')'");
            --depth;
            return f;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            u64 v = parse_nat();
            return constant(ring->from_int(static_cast<std::int64_t>(v)));
        }
        if (c == 'g') {
            ++pos;
            return constant(ring->gamma());
        }
        if (c == 'w') {
            ++pos;
            if (ring->r < 2) fail("'w' is only defined for extension residue fields");
            return constant(ring->lift(static_cast<std::uint32_t>(ring->p)));
        }
        if (c == 'y') {
            ++pos;
            return variable(1);
        }
        if (c == 'x') {
            ++pos;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                u64 idx = parse_nat();
                if (idx == 0) fail("variables are numbered from 1");
                return variable(static_cast<std::size_t>(idx - 1));
            }
            return variable(0);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_atom();
        if (eat('^')) {
            u64 e = parse_nat();
            return base.pow(e);
        }
        return base;
    }

    MultiPoly parse_term() {
        MultiPoly f = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                f = f * parse_factor();
            } else {
                break;
            }
        }
        return f;
    }

    MultiPoly parse_expr() {
        MultiPoly f = peek() == '+' ? (eat('+'), parse_term()) : parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                f = f + parse_term();
            } else if (c == '-') {
                ++pos;
                f = f - parse_term();
            } else {
                break;
            }
        }
        return f;
    }

    MultiPoly parse_full() {
        MultiPoly f = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input after expression");
        return f;
    }
};

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ';' || c == ',' || c == '\n') && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string coeff_string(const ChainRing& ring, u64 code) {
    std::string s = ring.to_string(code);
    if (s.find('+') != std::string::npos || s.find('*') != std::string::npos) return "(" + s + ")";
    return s;
}

std::vector<std::string> var_names(std::size_t k) {
    if (k == 1) return {"x"};
    if (k == 2) return {"x", "y"};
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

} // namespace

RingPtr parse_ring(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg + ": " + text, 1, 1); };
    if (s.rfind("Z/", 0) == 0) {
        u64 m = 0;
        for (std::size_t i = 2; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail("bad integer modulus");
            m = m * 10 + static_cast<u64>(s[i] - '0');
            if (m > (1ull << 40)) fail("modulus too large");
        }
        if (m < 2) fail("modulus must be at least 2");
        u64 p = m;
        for (u64 d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                p = d;
                break;
            }
        std::uint32_t nu = 0;
        u64 rest = m;
        while (rest % p == 0) {
            rest /= p;
            ++nu;
        }
        if (rest != 1) fail("modulus must be a prime power");
        return ChainRing::integers_mod(p, nu);
    }
    if (!s.empty() && s[0] == 'F') {
        std::size_t i = 1;
        u64 q = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            q = q * 10 + static_cast<u64>(s[i] - '0');
            ++i;
        }
        if (q < 2) fail("field size must be at least 2");
        std::uint32_t nu = 1;
        if (i != s.size()) {
            const std::string tail = s.substr(i);
            const std::string pre = "[g]/(g^";
            if (tail.rfind(pre, 0) != 0 || tail.back() != ')') fail("bad gamma extension syntax");
            std::string num = tail.substr(pre.size(), tail.size() - pre.size() - 1);
            if (num.empty()) fail("missing nilpotency index");
            nu = 0;
            for (char c : num) {
                if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad nilpotency index");
                nu = nu * 10 + static_cast<std::uint32_t>(c - '0');
            }
        }
        u64 p = q;
        for (u64 d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        std::uint32_t r = 0;
        u64 rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++r;
        }
        if (rest != 1) fail("field size must be a prime power");
        return ChainRing::gamma_extension(static_cast<std::uint32_t>(p), r, nu);
    }
    fail("unrecognized ring spec");
    return nullptr;
}

MultiPoly parse_polynomial(const RingPtr& ring, const std::vector<std::size_t>& dims,
                           const std::string& text) {
    Parser p(ring, dims, text, true);
    return p.parse_full();
}

std::vector<MultiPoly> parse_polynomial_list(const RingPtr& ring,
                                             const std::vector<std::size_t>& dims,
                                             const std::string& text) {
    std::vector<MultiPoly> out;
    if (blank(text)) return out;
    for (const auto& part : split_top_level(text)) {
        if (blank(part)) continue;
        out.push_back(parse_polynomial(ring, dims, part));
    }
    return out;
}

std::uint64_t parse_element(const RingPtr& ring, const std::string& text) {
    std::vector<std::size_t> dims{1};
    Parser p(ring, dims, text, false);
    return p.parse_full().coeffs()[0];
}

std::string to_string(const MultiPoly& f) {
    const auto& dims = f.dims();
    const auto& ring = *f.ring();
    auto names = var_names(dims.size());
    // collect nonzero terms, sort by descending (total degree, exponents)
    std::vector<std::pair<std::vector<std::size_t>, u64>> terms;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.coeffs()[i] != 0) terms.emplace_back(f.exponents_of(i), f.coeffs()[i]);
    if (terms.empty()) return "0";
    auto total = [](const std::vector<std::size_t>& e) {
        std::size_t t = 0;
        for (auto v : e) t += v;
        return t;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        std::size_t ta = total(a.first), tb = total(b.first);
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, code] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            os << coeff_string(ring, code);
        } else if (code == ring.one()) {
            os << mono;
        } else {
            os << coeff_string(ring, code) << "*" << mono;
        }
    }
    return os.str();
}

std::string to_string(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    const auto& ring = *f.ring();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        u64 code = f.coeffs()[i];
        if (code == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeff_string(ring, code);
        } else {
            std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
            if (code == ring.one())
                os << mono;
            else
                os << coeff_string(ring, code) << "*" << mono;
        }
    }
    return os.str();
}

std::string to_string(const QuotPoly& f, const std::string& var) { return to_string(f.base(), var); }

} // namespace chaincodes

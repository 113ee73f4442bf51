#include "satkit/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace satkit {
namespace {

constexpr unsigned long kMaxExponent = 100000;

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    explicit Scanner(const std::string& t) : text(t) {}

    std::size_t column() const { return pos + 1; }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    // Raw lookahead, no whitespace skip; used for adjacency checks.
    char raw_peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::string scan_ident(Scanner& s) {
    std::string name;
    while (is_ident_char(s.raw_peek())) name.push_back(s.text[s.pos++]);
    return name;
}

mpz_class scan_nat(Scanner& s, const char* what) {
    if (!is_digit(s.peek())) throw ParseError(std::string("expected ") + what, s.column());
    std::string digits;
    while (is_digit(s.raw_peek())) digits.push_back(s.text[s.pos++]);
    return mpz_class(digits);
}

struct Parser {
    Scanner s;
    const VarContext& ctx;

    Parser(const std::string& text, const VarContext& c) : s(text), ctx(c) {}

    Poly parse() {
        Poly p = parse_expr();
        if (!s.eof()) throw ParseError("unexpected trailing input", s.column());
        return p;
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        while (true) {
            if (s.accept('+')) {
                acc += parse_term();
            } else if (s.peek() == '-') {
                ++s.pos;
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (s.accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (s.accept('^')) {
            std::size_t col = s.column();
            mpz_class e = scan_nat(s, "exponent");
            if (e > kMaxExponent) throw ParseError("exponent too large", col);
            unsigned exp = static_cast<unsigned>(e.get_ui());
            Poly acc = Poly::constant(ctx.nvars(), GaussRat(1));
            Poly pw = base;
            for (unsigned bit = exp; bit; bit >>= 1) {
                if (bit & 1) acc = acc * pw;
                if (bit >> 1) pw = pw * pw;
            }
            return acc;
        }
        return base;
    }

    Poly parse_base() {
        char c = s.peek();
        std::size_t col = s.column();
        if (c == '(') {
            ++s.pos;
            Poly inner = parse_expr();
            if (!s.accept(')')) throw ParseError("expected ')'", s.column());
            return inner;
        }
        if (c == '-' || is_digit(c)) return parse_number(col);
        if (is_ident_start(c)) {
            std::string name = scan_ident(s);
            if (name == "i") {
                throw ParseError("bare 'i' is not a term; write '1i'", col);
            }
            auto idx = ctx.lookup(name);
            if (!idx) throw ParseError("unknown identifier '" + name + "'", col);
            return Poly::variable(ctx.nvars(), *idx);
        }
        throw ParseError("expected a number, variable, or '('", col);
    }

    Poly parse_number(std::size_t col) {
        bool neg = false;
        if (s.peek() == '-') {
            ++s.pos;
            if (!is_digit(s.peek())) throw ParseError("expected digits after '-'", s.column());
            neg = true;
        }
        mpz_class num = scan_nat(s, "number");
        mpz_class den = 1;
        if (s.raw_peek() == '/') {
            ++s.pos;
            std::size_t dcol = s.column();
            den = scan_nat(s, "denominator");
            if (den == 0) throw ParseError("zero denominator", dcol);
        }
        Rat value(num, den);
        value.canonicalize();
        if (neg) value = -value;
        GaussRat coeff(value);
        if (s.raw_peek() == 'i' && !is_ident_char(s.pos + 1 < s.text.size() ? s.text[s.pos + 1] : '\0')) {
            ++s.pos;
            coeff = GaussRat(Rat(0), value);
        }
        (void)col;
        return Poly::constant(ctx.nvars(), coeff);
    }
};

// Shared identifier scan for context inference.
void scan_identifiers(const std::string& text,
                      const std::vector<std::string>& ignore,
                      std::size_t& max_index) {
    Scanner s(text);
    while (!s.eof()) {
        char c = s.peek();
        if (is_ident_start(c)) {
            std::size_t col = s.column();
            std::string name = scan_ident(s);
            if (std::find(ignore.begin(), ignore.end(), name) != ignore.end()) continue;
            if (name == "i") continue;
            if (name == "x") {
                max_index = std::max(max_index, std::size_t{1});
            } else if (name == "y") {
                max_index = std::max(max_index, std::size_t{2});
            } else if (name == "z" || name == "t") {
                max_index = std::max(max_index, name == "z" ? std::size_t{3} : std::size_t{1});
            } else if (name.size() > 1 && name[0] == 'z' &&
                       std::all_of(name.begin() + 1, name.end(),
                                   [](char d) { return is_digit(d); })) {
                unsigned long k = std::stoul(name.substr(1));
                if (k == 0) throw ParseError("variable indices start at z1", col);
                max_index = std::max(max_index, static_cast<std::size_t>(k));
            } else {
                throw ParseError("unknown identifier '" + name + "'", col);
            }
        } else if (is_digit(c)) {
            scan_nat(s, "number");
            if (s.raw_peek() == 'i') ++s.pos;
        } else {
            ++s.pos;
        }
    }
}

std::string rat_term(const Rat& r) { return rat_to_string(r); }

// Coefficient text and whether a leading '-' was factored out.
struct CoeffText {
    std::string text;  // magnitude form, parseable at base position
    bool negative = false;
    bool is_one = false;  // magnitude exactly 1 (real), so "c*" may be dropped
};

CoeffText coeff_text(const GaussRat& c) {
    CoeffText out;
    if (c.im == 0) {
        Rat a = c.re;
        if (a < 0) {
            out.negative = true;
            a = -a;
        }
        out.is_one = (a == 1);
        out.text = rat_term(a);
    } else if (c.re == 0) {
        Rat b = c.im;
        if (b < 0) {
            out.negative = true;
            b = -b;
        }
        out.text = rat_term(b) + "i";
    } else {
        std::string re = rat_term(c.re);
        Rat b = c.im;
        std::string im = (b < 0) ? "-" + rat_term(-b) + "i" : "+" + rat_term(b) + "i";
        out.text = "(" + re + im + ")";
    }
    return out;
}

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "z" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    unsigned ta = total_degree(a);
    unsigned tb = total_degree(b);
    if (ta != tb) return ta > tb;
    return a > b;
}

}  // namespace

VarContext VarContext::standard(std::size_t nvars) {
    VarContext ctx;
    ctx.nvars_ = nvars;
    for (std::size_t k = 0; k < nvars; ++k) {
        ctx.names_["z" + std::to_string(k + 1)] = k;
    }
    static const char* aliases[] = {"x", "y", "z"};
    for (std::size_t k = 0; k < nvars && k < 3; ++k) {
        if (!(k == 2 && nvars != 3)) ctx.names_.emplace(aliases[k], k);
    }
    if (nvars == 1) ctx.names_.emplace("t", 0);
    return ctx;
}

VarContext VarContext::with_parameter(std::size_t nvars, const std::string& name) {
    VarContext ctx;
    ctx.nvars_ = nvars + 1;
    ctx.names_[name] = 0;
    for (std::size_t k = 0; k < nvars; ++k) {
        ctx.names_["z" + std::to_string(k + 1)] = k + 1;
    }
    static const char* aliases[] = {"x", "y", "z"};
    for (std::size_t k = 0; k < nvars && k < 3; ++k) {
        if (!(k == 2 && nvars != 3)) ctx.names_.emplace(aliases[k], k + 1);
    }
    return ctx;
}

std::optional<std::size_t> VarContext::lookup(const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end()) return std::nullopt;
    return it->second;
}

Poly parse_poly(const std::string& text, const VarContext& ctx) {
    Parser p(text, ctx);
    return p.parse();
}

std::size_t infer_nvars(const std::string& text, const std::vector<std::string>& ignore) {
    std::size_t max_index = 0;
    scan_identifiers(text, ignore, max_index);
    return std::max<std::size_t>(max_index, 1);
}

std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, GaussRat>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return grlex_greater(a.first, b.first);
    });
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [m, c] = terms[k];
        CoeffText ct = coeff_text(c);
        std::string vars = monomial_text(m);
        std::string body;
        if (vars.empty()) {
            body = ct.text;
        } else if (ct.is_one && (!ct.negative || k > 0)) {
            body = vars;
        } else {
            body = ct.text + "*" + vars;
        }
        if (k == 0) {
            out = (ct.negative ? "-" : "") + body;
        } else {
            out += (ct.negative ? " - " : " + ") + body;
        }
    }
    return out;
}

std::vector<Rat> parse_direction(const std::string& text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        // trim
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty direction entry", start + 1);
        out.push_back(rat_from_string(piece.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace satkit

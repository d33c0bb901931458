#include "modp/exprparse.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace modp::exprparse {

namespace {

struct Token {
    enum class Kind { Int, Name, Punct, End } kind;
    std::string text;
    int pos = 0;
    long long value = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        int pos = static_cast<int>(i);
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Token t{Token::Kind::Int, s.substr(i, j - i), pos, 0};
            t.value = std::stoll(t.text);
            out.push_back(std::move(t));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Name, s.substr(i, j - i), pos, 0});
            i = j;
        } else if (std::string("(),;+*^-").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Punct, std::string(1, c), pos, 0});
            ++i;
        } else {
            raise(ErrKind::ParseError,
                  "unexpected character '" + std::string(1, c) + "' at position " +
                      std::to_string(pos));
        }
    }
    out.push_back({Token::Kind::End, "<end>", static_cast<int>(s.size()), 0});
    return out;
}

class Parser {
public:
    Parser(const FieldPtr& F, const std::string& text) : F_(F), toks_(lex(text)) {}

    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_++]; }

    [[noreturn]] void fail(const std::string& why) const {
        raise(ErrKind::ParseError, why + ", got '" + peek().text + "' at position " +
                                       std::to_string(peek().pos));
    }

    void expect_punct(const std::string& p) {
        if (peek().kind != Token::Kind::Punct || peek().text != p) fail("expected '" + p + "'");
        next();
    }

    bool try_punct(const std::string& p) {
        if (peek().kind == Token::Kind::Punct && peek().text == p) {
            next();
            return true;
        }
        return false;
    }

    long long parse_int() {
        bool neg = try_punct("-");
        if (peek().kind != Token::Kind::Int) fail("expected an integer");
        long long v = next().value;
        return neg ? -v : v;
    }

    hecke::SmoothChar parse_eta() {
        hecke::SmoothChar eta = hecke::SmoothChar::trivial();
        const int p = F_->p();
        if (peek().kind == Token::Kind::Int && peek().text == "1") {
            next();
            return eta;
        }
        if (peek().kind != Token::Kind::Name) fail("expected an eta token");
        std::string head = next().text;
        if (head == "w") {
            eta.u = 1;
            if (try_punct("^")) eta.u = static_cast<int>(parse_int());
            if (try_punct("*")) {
                if (peek().kind != Token::Kind::Name || peek().text != "mu")
                    fail("expected 'mu-1' after '*'");
                next();
                expect_punct("-");
                if (peek().kind != Token::Kind::Int || peek().text != "1")
                    fail("expected 'mu-1'");
                next();
                eta.vp = F_->neg(1);
            }
        } else if (head == "mu") {
            expect_punct("-");
            if (peek().kind != Token::Kind::Int || peek().text != "1") fail("expected 'mu-1'");
            next();
            eta.vp = F_->neg(1);
        } else {
            fail("unknown eta token '" + head + "'");
        }
        eta.u = ((eta.u % (p - 1)) + (p - 1)) % (p - 1);
        return eta;
    }

    struct Atom {
        int zeta_unit;
        std::string canonical;
        std::function<presalg::AlgebraModule(const hecke::HeckeCtx&)> build;
    };

    Atom parse_term() {
        if (peek().kind != Token::Kind::Name) fail("expected a module atom M/E/I");
        Token head = next();
        const int p = F_->p();
        if (head.text == "M") {
            expect_punct("(");
            long long r = parse_int();
            expect_punct(",");
            long long lam = parse_int();
            expect_punct(",");
            hecke::SmoothChar eta = parse_eta();
            expect_punct(")");
            if (r < 0 || r > p - 1) fail("r out of range in M(r,lambda,eta)");
            felt lamf = F_->from_int(lam);
            int zu = hecke::central_char(F_, static_cast<int>(r), eta).first;
            std::string canon = "M(" + std::to_string(r) + "," + std::to_string(lamf) + "," +
                                eta.str(p) + ")";
            return {zu, canon, [=](const hecke::HeckeCtx& h) {
                        return hecke::module_M(h, static_cast<int>(r), lamf, eta);
                    }};
        }
        if (head.text == "E") {
            expect_punct("(");
            long long l1 = parse_int();
            expect_punct(",");
            long long l2 = parse_int();
            expect_punct(";");
            long long r = parse_int();
            expect_punct(")");
            if (r <= 0 || r >= p - 1) fail("E(l1,l2;r) needs 0 < r < p-1");
            felt f1 = F_->from_int(l1), f2 = F_->from_int(l2);
            int zu = hecke::central_char(F_, static_cast<int>(r), hecke::SmoothChar::trivial())
                         .first;
            std::string canon = "E(" + std::to_string(f1) + "," + std::to_string(f2) + ";" +
                                std::to_string(r) + ")";
            return {zu, canon, [=](const hecke::HeckeCtx& h) {
                        return hecke::module_E(h, f1, f2, static_cast<int>(r),
                                               hecke::SmoothChar::trivial());
                    }};
        }
        if (head.text == "I") {
            expect_punct("(");
            bool sp = false;
            if (peek().kind == Token::Kind::Int && peek().text == "1") {
                next();
            } else if (peek().kind == Token::Kind::Name && peek().text == "Sp") {
                next();
                sp = true;
            } else {
                fail("expected I(1) or I(Sp)");
            }
            expect_punct(")");
            std::string canon = sp ? "I(Sp)" : "I(1)";
            return {0, canon, [=](const hecke::HeckeCtx& h) {
                        return hecke::shadow(h, sp ? hecke::PiSpec::steinberg()
                                                   : hecke::PiSpec::trivial());
                    }};
        }
        fail("unknown module atom '" + head.text + "'");
    }

    ParsedModules parse_expr() {
        std::vector<Atom> atoms;
        atoms.push_back(parse_term());
        while (try_punct("+")) atoms.push_back(parse_term());
        if (peek().kind != Token::Kind::End) fail("trailing input");

        for (const auto& a : atoms)
            if (a.zeta_unit != atoms[0].zeta_unit)
                raise(ErrKind::ContextMismatch,
                      "atoms " + atoms[0].canonical + " and " + a.canonical +
                          " have different central characters");

        ParsedModules out;
        out.ctx = hecke::make_hecke_ctx(F_, atoms[0].zeta_unit, 1);
        out.mod = atoms[0].build(out.ctx);
        out.canonical = atoms[0].canonical;
        for (size_t i = 1; i < atoms.size(); ++i) {
            out.mod = presalg::direct_sum(out.mod, atoms[i].build(out.ctx));
            out.canonical += "+" + atoms[i].canonical;
        }
        return out;
    }

private:
    FieldPtr F_;
    std::vector<Token> toks_;
    size_t i_ = 0;
};

} // namespace

ParsedModules parse_module_expr(const FieldPtr& F, const std::string& expr) {
    Parser p(F, expr);
    return p.parse_expr();
}

hecke::SmoothChar parse_eta(const FieldPtr& F, const std::string& token) {
    Parser p(F, token);
    hecke::SmoothChar eta = p.parse_eta();
    if (p.peek().kind != Token::Kind::End)
        raise(ErrKind::ParseError, "trailing input after eta token");
    return eta;
}

} // namespace modp::exprparse

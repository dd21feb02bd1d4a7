#include "trs/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "trs/dp.hpp"

namespace trs {

std::string NameTable::var_name(std::size_t rule, int index) const {
    if (rule < rule_var_names.size() && index >= 0 &&
        index < static_cast<int>(rule_var_names[rule].size()))
        return rule_var_names[rule][index];
    return "x" + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Rule-set parser
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxNesting = 500;

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct TrsLexer {
    enum class Tok { LParen, RParen, Comma, Arrow, Name, End };

    std::string_view text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    Tok tok = Tok::End;
    std::string name;     // for Tok::Name
    int tok_line = 1, tok_col = 1;

    explicit TrsLexer(std::string_view t) : text(t) { advance(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(tok_line, tok_col, msg);
    }

    void bump(char c) {
        ++pos;
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }

    void skip_blank() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') bump(text[pos]);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump(c);
            } else {
                break;
            }
        }
    }

    void advance() {
        skip_blank();
        tok_line = line;
        tok_col = col;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        if (c == '(') {
            bump(c);
            tok = Tok::LParen;
        } else if (c == ')') {
            bump(c);
            tok = Tok::RParen;
        } else if (c == ',') {
            bump(c);
            tok = Tok::Comma;
        } else if (c == '-') {
            bump(c);
            if (pos >= text.size() || text[pos] != '>')
                throw SyntaxError(tok_line, tok_col, "expected '->'");
            bump('>');
            tok = Tok::Arrow;
        } else if (name_char(c)) {
            name.clear();
            while (pos < text.size() && name_char(text[pos])) {
                name += text[pos];
                bump(text[pos]);
            }
            tok = Tok::Name;
        } else {
            throw SyntaxError(tok_line, tok_col,
                              std::string("unexpected character '") + c + "'");
        }
    }

    void expect(Tok t, const std::string& what) {
        if (tok != t) fail("expected " + what);
        advance();
    }

    std::string expect_name(const std::string& what) {
        if (tok != Tok::Name) fail("expected " + what);
        std::string out = name;
        advance();
        return out;
    }
};

struct TrsParser {
    TrsLexer lex;
    std::set<std::string> var_names;
    std::vector<std::pair<std::string, int>> symbol_order; // first-use order
    std::map<std::string, int> arities;

    // per-rule scope
    std::map<std::string, int> scope;
    std::vector<std::string> scope_names;

    explicit TrsParser(std::string_view text) : lex(text) {}

    void note_symbol(const std::string& f, int arity) {
        auto it = arities.find(f);
        if (it == arities.end()) {
            arities.emplace(f, arity);
            symbol_order.emplace_back(f, arity);
        } else if (it->second != arity) {
            throw ArityConflict(f);
        }
    }

    Term parse_term(int depth) {
        if (depth > kMaxNesting) lex.fail("term nesting too deep");
        int at_line = lex.tok_line, at_col = lex.tok_col;
        std::string head = lex.expect_name("a term");
        bool is_var = var_names.count(head) != 0;
        if (lex.tok == TrsLexer::Tok::LParen) {
            if (is_var)
                throw SyntaxError(at_line, at_col,
                                  "variable '" + head + "' used as a function symbol");
            lex.advance();
            std::vector<Term> args;
            args.push_back(parse_term(depth + 1));
            while (lex.tok == TrsLexer::Tok::Comma) {
                lex.advance();
                args.push_back(parse_term(depth + 1));
            }
            lex.expect(TrsLexer::Tok::RParen, "')'");
            note_symbol(head, static_cast<int>(args.size()));
            return Term::app_unchecked(Symbol{head, false}, std::move(args));
        }
        if (is_var) {
            auto it = scope.find(head);
            if (it == scope.end()) {
                int index = static_cast<int>(scope.size());
                it = scope.emplace(head, index).first;
                scope_names.push_back(head);
            }
            return Term::var(it->second);
        }
        note_symbol(head, 0);
        return Term::app_unchecked(Symbol{head, false}, {});
    }

    ParsedTrs parse() {
        lex.expect(TrsLexer::Tok::LParen, "'('");
        if (lex.expect_name("'VAR'") != "VAR") lex.fail("expected 'VAR'");
        while (lex.tok == TrsLexer::Tok::Name) var_names.insert(lex.expect_name("a name"));
        lex.expect(TrsLexer::Tok::RParen, "')'");

        lex.expect(TrsLexer::Tok::LParen, "'('");
        if (lex.expect_name("'RULES'") != "RULES") lex.fail("expected 'RULES'");
        std::vector<Rule> rules;
        NameTable names;
        while (lex.tok != TrsLexer::Tok::RParen) {
            scope.clear();
            scope_names.clear();
            Term lhs = parse_term(0);
            lex.expect(TrsLexer::Tok::Arrow, "'->'");
            Term rhs = parse_term(0);
            rules.push_back(Rule{std::move(lhs), std::move(rhs)});
            names.rule_var_names.push_back(scope_names);
        }
        lex.advance();
        if (lex.tok != TrsLexer::Tok::End) lex.fail("expected end of input");

        Signature sig;
        for (const auto& [f, n] : symbol_order) sig.add(Symbol{f, false}, n);
        return ParsedTrs{Trs(std::move(sig), std::move(rules)), std::move(names)};
    }
};

} // namespace

ParsedTrs parse_trs(std::string_view text) { return TrsParser(text).parse(); }

// ---------------------------------------------------------------------------
// Minimal XML reader (elements, attributes, character data, comments)
// ---------------------------------------------------------------------------

namespace {

struct XmlNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<XmlNode> children;
    std::string text;
    int line = 1, col = 1;

    const std::string* attr(const std::string& key) const {
        for (const auto& [k, v] : attrs)
            if (k == key) return &v;
        return nullptr;
    }
};

struct XmlParser {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit XmlParser(std::string_view t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line, col, msg); }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char take() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    bool literal(std::string_view s) {
        if (text.substr(pos, s.size()) != s) return false;
        for (std::size_t i = 0; i < s.size(); ++i) take();
        return true;
    }

    void skip_space() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
    }

    void skip_misc() {
        // whitespace, comments and the optional declaration
        for (;;) {
            skip_space();
            if (literal("<!--")) {
                while (!eof() && !literal("-->")) take();
            } else if (!eof() && text.substr(pos, 2) == "<?") {
                while (!eof() && !literal("?>")) take();
            } else {
                return;
            }
        }
    }

    static bool xml_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
               c == '.' || c == ':';
    }

    std::string read_name() {
        if (eof() || !xml_name_char(peek())) fail("expected a name");
        std::string out;
        while (!eof() && xml_name_char(peek())) out += take();
        return out;
    }

    void decode_entity(std::string& out) {
        // '&' already consumed
        std::string ent;
        while (!eof() && peek() != ';') {
            ent += take();
            if (ent.size() > 8) fail("malformed entity");
        }
        if (eof()) fail("unterminated entity");
        take(); // ';'
        if (ent == "lt")
            out += '<';
        else if (ent == "gt")
            out += '>';
        else if (ent == "amp")
            out += '&';
        else if (ent == "quot")
            out += '"';
        else if (ent == "apos")
            out += '\'';
        else
            fail("unknown entity '&" + ent + ";'");
    }

    std::string read_attr_value() {
        if (eof() || (peek() != '"' && peek() != '\'')) fail("expected a quoted value");
        char quote = take();
        std::string out;
        while (!eof() && peek() != quote) {
            if (peek() == '&') {
                take();
                decode_entity(out);
            } else {
                out += take();
            }
        }
        if (eof()) fail("unterminated attribute value");
        take();
        return out;
    }

    XmlNode parse_element(int depth) {
        if (depth > kMaxNesting) fail("element nesting too deep");
        XmlNode node;
        node.line = line;
        node.col = col;
        if (eof() || peek() != '<') fail("expected an element");
        take();
        node.name = read_name();
        for (;;) {
            skip_space();
            if (eof()) fail("unterminated element");
            if (peek() == '/') {
                take();
                if (eof() || take() != '>') fail("expected '>'");
                return node;
            }
            if (peek() == '>') {
                take();
                break;
            }
            std::string key = read_name();
            skip_space();
            if (eof() || take() != '=') fail("expected '='");
            skip_space();
            node.attrs.emplace_back(std::move(key), read_attr_value());
        }
        // content
        for (;;) {
            if (eof()) fail("unterminated element '" + node.name + "'");
            if (peek() == '<') {
                if (literal("<!--")) {
                    bool closed = false;
                    while (!eof()) {
                        if (literal("-->")) {
                            closed = true;
                            break;
                        }
                        take();
                    }
                    if (!closed) fail("unterminated comment");
                    continue;
                }
                if (text.substr(pos, 2) == "</") {
                    take();
                    take();
                    std::string closing = read_name();
                    if (closing != node.name)
                        fail("mismatched closing tag '" + closing + "'");
                    skip_space();
                    if (eof() || take() != '>') fail("expected '>'");
                    return node;
                }
                node.children.push_back(parse_element(depth + 1));
            } else if (peek() == '&') {
                take();
                decode_entity(node.text);
            } else {
                char c = take();
                if (!std::isspace(static_cast<unsigned char>(c))) node.text += c;
            }
        }
    }

    XmlNode parse_document() {
        skip_misc();
        XmlNode root = parse_element(0);
        skip_misc();
        if (!eof()) fail("content after document element");
        return root;
    }
};

} // namespace

// ---------------------------------------------------------------------------
// Certificate conversion
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxVarIndex = 65536;
constexpr int kMaxExponent = 1000;

struct CertReader {
    Signature sig; // sharped

    [[noreturn]] static void fail(const XmlNode& n, const std::string& msg) {
        throw SyntaxError(n.line, n.col, msg);
    }

    static long parse_nat(const XmlNode& n, const std::string& s, long max) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            fail(n, "expected a natural number, got '" + s + "'");
        long value = 0;
        for (char c : s) {
            value = value * 10 + (c - '0');
            if (value > max) fail(n, "number out of range: '" + s + "'");
        }
        return value;
    }

    static Int parse_int(const XmlNode& n, const std::string& s) {
        std::string digits = s;
        if (!digits.empty() && digits[0] == '-') digits.erase(0, 1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            fail(n, "expected an integer, got '" + s + "'");
        return Int(s);
    }

    Symbol read_fun(const XmlNode& n) const {
        if (n.name != "fun") fail(n, "expected <fun>");
        if (n.text.empty()) fail(n, "empty symbol name");
        bool marked = false;
        if (const std::string* sharp = n.attr("sharp")) {
            if (*sharp != "true") fail(n, "attribute sharp must be \"true\"");
            marked = true;
        }
        Symbol f{n.text, marked};
        if (!sig.contains(f)) throw UnknownSymbol(to_string(f));
        return f;
    }

    Term read_term(const XmlNode& n) const {
        if (n.name == "var") {
            long index = parse_nat(n, n.text, kMaxVarIndex);
            return Term::var(static_cast<int>(index));
        }
        if (n.name != "app") fail(n, "expected <var> or <app>");
        if (n.children.empty()) fail(n, "<app> needs a <fun> child");
        Symbol f = read_fun(n.children.front());
        std::vector<Term> args;
        for (std::size_t i = 1; i < n.children.size(); ++i)
            args.push_back(read_term(n.children[i]));
        return mk_app(sig, f, std::move(args));
    }

    Rule read_rule(const XmlNode& n) const {
        if (n.name != "rule") fail(n, "expected <rule>");
        if (n.children.size() != 2 || n.children[0].name != "lhs" ||
            n.children[1].name != "rhs")
            fail(n, "<rule> needs <lhs> and <rhs>");
        const XmlNode& l = n.children[0];
        const XmlNode& r = n.children[1];
        if (l.children.size() != 1 || r.children.size() != 1)
            fail(n, "rule sides hold exactly one term");
        return Rule{read_term(l.children[0]), read_term(r.children[0])};
    }

    Polynomial read_polynomial(const XmlNode& n, const Symbol& f, int arity) const {
        std::vector<std::pair<Int, Monomial>> entries;
        for (const XmlNode& mono : n.children) {
            if (mono.name != "monomial") fail(mono, "expected <monomial>");
            const std::string* coef_attr = mono.attr("coef");
            if (!coef_attr) fail(mono, "<monomial> needs a coef attribute");
            Monomial m = Monomial::unit(arity);
            for (const XmlNode& exp : mono.children) {
                if (exp.name != "exp") fail(exp, "expected <exp>");
                const std::string* var_attr = exp.attr("var");
                const std::string* pow_attr = exp.attr("pow");
                if (!var_attr || !pow_attr) fail(exp, "<exp> needs var and pow attributes");
                long var = parse_nat(exp, *var_attr, kMaxVarIndex);
                long pow = parse_nat(exp, *pow_attr, kMaxExponent);
                if (var < 1 || var > arity) throw PolyArityMismatch(to_string(f));
                m.exps[var - 1] += static_cast<int>(pow);
            }
            entries.emplace_back(parse_int(mono, *coef_attr), std::move(m));
        }
        return Polynomial(arity, std::move(entries));
    }

    PolyInterpretation read_poly_int(const XmlNode& n) const {
        if (n.children.empty() || n.children.size() % 2 != 0)
            fail(n, "<poly_int> holds <fun>/<polynomial> pairs");
        PolyInterpretation pi;
        for (std::size_t i = 0; i < n.children.size(); i += 2) {
            Symbol f = read_fun(n.children[i]);
            const XmlNode& poly = n.children[i + 1];
            if (poly.name != "polynomial") fail(poly, "expected <polynomial>");
            if (pi.entries().count(f))
                fail(n.children[i], "duplicate interpretation for '" + to_string(f) + "'");
            pi.set(f, read_polynomial(poly, f, *sig.arity(f)));
        }
        return pi;
    }

    ProofComponent read_component(const XmlNode& n) const {
        if (n.name != "component") fail(n, "expected <component>");
        if (n.children.empty() || n.children.front().name != "rules")
            fail(n, "<component> starts with <rules>");
        if (n.children.size() > 2) fail(n, "<component> holds <rules> and at most one proof");
        ProofComponent out;
        for (const XmlNode& rule : n.children.front().children)
            out.pairs.push_back(read_rule(rule));
        if (n.children.size() == 2) out.sub = make_proof(read_proof(n.children[1]));
        return out;
    }

    Proof read_proof(const XmlNode& n) const {
        if (n.name == "trivial") {
            if (!n.children.empty()) fail(n, "<trivial> has no content");
            return Proof{TrivialStep{}};
        }
        if (n.name == "dp") {
            if (n.children.size() != 1) fail(n, "<dp> holds exactly one proof");
            return Proof{DpTransStep{make_proof(read_proof(n.children[0]))}};
        }
        if (n.name == "manna_ness") {
            if (n.children.size() != 2 || n.children[0].name != "poly_int")
                fail(n, "<manna_ness> holds <poly_int> and one proof");
            return Proof{PolyOrdStep{read_poly_int(n.children[0]),
                                     make_proof(read_proof(n.children[1]))}};
        }
        if (n.name == "decomp") {
            if (n.children.size() < 2 || n.children[0].name != "graph")
                fail(n, "<decomp> holds <graph> and at least one component");
            const XmlNode& graph = n.children[0];
            if (graph.children.size() != 1) fail(graph, "<graph> holds one approximation");
            GraphApprox approx;
            if (graph.children[0].name == "hde")
                approx = GraphApprox::Hde;
            else if (graph.children[0].name == "unif")
                approx = GraphApprox::Unif;
            else
                fail(graph.children[0], "expected <hde/> or <unif/>");
            std::vector<ProofComponent> components;
            for (std::size_t i = 1; i < n.children.size(); ++i)
                components.push_back(read_component(n.children[i]));
            return Proof{DecompStep{approx, std::move(components)}};
        }
        fail(n, "expected a proof element, got <" + n.name + ">");
    }
};

} // namespace

Proof parse_certificate(std::string_view text, const Signature& base_sig) {
    XmlNode root = XmlParser(text).parse_document();
    CertReader reader{sharp_signature(base_sig)};
    return reader.read_proof(root);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string print_trs(const Trs& system) {
    // Canonical variable names; dodge collisions with symbol names.
    std::set<std::string> taken;
    for (const auto& [f, n] : system.sig().symbols()) taken.insert(f.name);
    auto namer = [&taken](int i) {
        std::string name = "x" + std::to_string(i);
        while (taken.count(name)) name += "'";
        return name;
    };

    std::set<int> used;
    for (const Rule& r : system.rules()) {
        auto lv = vars(r.lhs);
        auto rv = vars(r.rhs);
        used.insert(lv.begin(), lv.end());
        used.insert(rv.begin(), rv.end());
    }

    std::string out = "(VAR";
    for (int i : used) out += " " + namer(i);
    out += ")\n(RULES\n";
    for (const Rule& r : system.rules()) out += "  " + to_string(r, namer) + "\n";
    out += ")\n";
    return out;
}

} // namespace trs

#include "ontoforge/parser.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <variant>

#include "json.hpp"

#include "ontoforge/error.hpp"

namespace ontoforge {

std::map<std::string, std::string> ParseOptions::default_prefixes() {
    return {
        {"owl", "http://www.w3.org/2002/07/owl#"},
        {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
        {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
        {"xsd", "http://www.w3.org/2001/XMLSchema#"},
        {"oboInOwl", "http://www.geneontology.org/formats/oboInOwl#"},
    };
}

namespace {

constexpr std::string_view kOwlThing = "http://www.w3.org/2002/07/owl#Thing";
constexpr std::string_view kOwlNothing = "http://www.w3.org/2002/07/owl#Nothing";

// ---------------------------------------------------------------------------
// Tokens and S-expressions of the functional syntax

enum class TokKind { LParen, RParen, Equals, FullIri, Name, Literal, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    std::string lang;
    std::string datatype;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        if (c == '(') {
            advance();
            t.kind = TokKind::LParen;
        } else if (c == ')') {
            advance();
            t.kind = TokKind::RParen;
        } else if (c == '=') {
            advance();
            t.kind = TokKind::Equals;
        } else if (c == '<') {
            advance();
            t.kind = TokKind::FullIri;
            while (pos_ < src_.size() && src_[pos_] != '>') {
                if (src_[pos_] == '\n') throw SyntaxError("unterminated IRI", t.line, t.column);
                t.text += src_[pos_];
                advance();
            }
            if (pos_ >= src_.size()) throw SyntaxError("unterminated IRI", t.line, t.column);
            advance();
            if (t.text.empty()) throw SyntaxError("empty IRI", t.line, t.column);
        } else if (c == '"') {
            t.kind = TokKind::Literal;
            read_literal(t);
        } else {
            t.kind = TokKind::Name;
            while (pos_ < src_.size() && is_name_char(src_[pos_])) {
                t.text += src_[pos_];
                advance();
            }
            if (t.text.empty())
                throw SyntaxError(std::string("unexpected character '") + c + "'", t.line,
                                  t.column);
        }
        return t;
    }

private:
    static bool is_name_char(char c) {
        auto u = static_cast<unsigned char>(c);
        return u > 0x20 && c != '(' && c != ')' && c != '<' && c != '>' && c != '"' &&
               c != '=';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (static_cast<unsigned char>(c) <= 0x20) {
                advance();
            } else {
                break;
            }
        }
    }

    void read_literal(Token& t) {
        advance();  // opening quote
        for (;;) {
            if (pos_ >= src_.size()) throw SyntaxError("unterminated literal", t.line, t.column);
            char c = src_[pos_];
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\\' && pos_ + 1 < src_.size()) {
                advance();
                c = src_[pos_];
            }
            t.text += c;
            advance();
        }
        if (pos_ < src_.size() && src_[pos_] == '@') {
            advance();
            while (pos_ < src_.size() && is_name_char(src_[pos_])) {
                t.lang += src_[pos_];
                advance();
            }
        } else if (src_.substr(pos_, 2) == "^^") {
            advance();
            advance();
            Token dt = next();
            if (dt.kind != TokKind::FullIri && dt.kind != TokKind::Name)
                throw SyntaxError("expected datatype after ^^", dt.line, dt.column);
            t.datatype = dt.text;
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

struct Node;
using Elem = std::variant<Token, Node>;

struct Node {
    std::string head;
    std::size_t line = 1;
    std::size_t column = 1;
    std::vector<Elem> args;
};

std::size_t elem_line(const Elem& e) {
    return std::visit([](const auto& x) { return x.line; }, e);
}

class Reader {
public:
    explicit Reader(std::string_view src) : lex_(src) { look_ = lex_.next(); }

    bool at_end() const { return look_.kind == TokKind::End; }

    Elem read() {
        Token t = take();
        switch (t.kind) {
            case TokKind::Name:
                if (look_.kind == TokKind::LParen) return read_node(std::move(t));
                return t;
            case TokKind::FullIri:
            case TokKind::Literal:
            case TokKind::Equals:
                return t;
            case TokKind::LParen:
                throw SyntaxError("unexpected '('", t.line, t.column);
            case TokKind::RParen:
                throw SyntaxError("unexpected ')'", t.line, t.column);
            case TokKind::End:
                throw SyntaxError("unexpected end of input", t.line, t.column);
        }
        throw SyntaxError("unreachable", t.line, t.column);
    }

private:
    Token take() {
        Token t = std::move(look_);
        look_ = lex_.next();
        return t;
    }

    Node read_node(Token head) {
        Node n{head.text, head.line, head.column, {}};
        take();  // '('
        while (look_.kind != TokKind::RParen) {
            if (look_.kind == TokKind::End)
                throw SyntaxError("missing ')' for " + n.head, n.line, n.column);
            n.args.push_back(read());
        }
        take();
        return n;
    }

    Lexer lex_;
    Token look_;
};

// ---------------------------------------------------------------------------
// Interpretation of axioms

struct Skip {
    std::string construct;
    std::size_t line;
};

enum class Role { Concept, Property, Individual };

struct PendingLabel {
    Iri iri;
    std::size_t rank;
    std::size_t seq;
    std::string text;
};

class Builder {
public:
    explicit Builder(const ParseOptions& opts) : opts_(opts), prefixes_(opts.curie_prefixes) {}

    void document(Reader& reader) {
        while (!reader.at_end()) {
            Elem e = reader.read();
            const Node* n = std::get_if<Node>(&e);
            if (n == nullptr) {
                const auto& t = std::get<Token>(e);
                throw SyntaxError("expected a declaration or axiom", t.line, t.column);
            }
            if (n->head == "Prefix") {
                prefix(*n);
            } else if (n->head == "Ontology") {
                ontology(*n);
            } else {
                axiom(*n);
            }
        }
    }

    ParseResult finish() {
        std::stable_sort(labels_.begin(), labels_.end(), [](const auto& a, const auto& b) {
            return std::tie(a.iri, a.rank, a.seq) < std::tie(b.iri, b.rank, b.seq);
        });
        for (auto& l : labels_) result_.ontology.labels[l.iri].push_back(std::move(l.text));
        return std::move(result_);
    }

private:
    void prefix(const Node& n) {
        // Prefix(name:=<iri>)
        if (n.args.size() != 3) throw SyntaxError("malformed Prefix", n.line, n.column);
        const auto* name = std::get_if<Token>(&n.args[0]);
        const auto* eq = std::get_if<Token>(&n.args[1]);
        const auto* iri = std::get_if<Token>(&n.args[2]);
        if (!name || !eq || !iri || name->kind != TokKind::Name || eq->kind != TokKind::Equals ||
            iri->kind != TokKind::FullIri || name->text.back() != ':')
            throw SyntaxError("malformed Prefix", n.line, n.column);
        prefixes_[name->text.substr(0, name->text.size() - 1)] = iri->text;
    }

    void ontology(const Node& n) {
        for (const auto& e : n.args) {
            if (const auto* t = std::get_if<Token>(&e)) {
                if (t->kind != TokKind::FullIri && t->kind != TokKind::Name)
                    throw SyntaxError("unexpected token in Ontology", t->line, t->column);
                continue;  // ontology / version IRI
            }
            const auto& child = std::get<Node>(e);
            if (child.head == "Annotation") continue;
            axiom(child);
        }
    }

    void axiom(const Node& n) {
        try {
            pending_.clear();
            if (n.head == "Declaration") {
                declaration(n);
            } else if (n.head == "SubClassOf") {
                auto args = strip_annotations(n);
                expect_arity(n, args, 2);
                auto sub = class_expr(*args[0]);
                auto super = class_expr(*args[1]);
                commit();
                result_.ontology.axioms.emplace_back(SubClassOf{std::move(sub), std::move(super)});
            } else if (n.head == "EquivalentClasses") {
                auto args = strip_annotations(n);
                if (args.size() < 2)
                    throw SyntaxError("EquivalentClasses needs two operands", n.line, n.column);
                std::vector<ConceptExpr> ops;
                for (const auto* a : args) ops.push_back(class_expr(*a));
                commit();
                for (std::size_t i = 1; i < ops.size(); ++i)
                    result_.ontology.axioms.emplace_back(normalise_equivalence(ops[0], ops[i]));
            } else if (n.head == "ClassAssertion") {
                auto args = strip_annotations(n);
                expect_arity(n, args, 2);
                auto type = class_expr(*args[0]);
                auto ind = entity(*args[1], Role::Individual);
                commit();
                result_.ontology.axioms.emplace_back(ClassAssertion{std::move(type), std::move(ind)});
            } else if (n.head == "AnnotationAssertion") {
                annotation(n);
            } else {
                throw Skip{n.head, n.line};
            }
        } catch (const Skip& s) {
            if (opts_.on_unsupported == OnUnsupported::Fail)
                throw UnsupportedConstruct(s.construct, s.line);
            result_.warnings.push_back(ParseWarning{s.line, s.construct});
        }
    }

    void declaration(const Node& n) {
        auto args = strip_annotations(n);
        expect_arity(n, args, 1);
        const auto* inner = std::get_if<Node>(args[0]);
        if (inner == nullptr || inner->args.size() != 1)
            throw SyntaxError("malformed Declaration", n.line, n.column);
        if (inner->head == "Class") {
            entity(inner->args[0], Role::Concept);
        } else if (inner->head == "ObjectProperty") {
            entity(inner->args[0], Role::Property);
        } else if (inner->head == "NamedIndividual") {
            entity(inner->args[0], Role::Individual);
        } else if (inner->head == "AnnotationProperty") {
            iri_of(inner->args[0]);
        } else {
            throw Skip{inner->head, inner->line};
        }
        commit();
    }

    void annotation(const Node& n) {
        auto args = strip_annotations(n);
        expect_arity(n, args, 3);
        const std::string prop = iri_of(*args[0]);
        const Iri subject(iri_of(*args[1]));
        const auto* value = std::get_if<Token>(args[2]);
        if (value == nullptr || value->kind != TokKind::Literal) return;  // IRI-valued: ignored

        if (prop == kOwlDeprecated) {
            if (value->text == "true") result_.ontology.deprecated.insert(subject);
            return;
        }
        auto it = std::find(opts_.label_properties.begin(), opts_.label_properties.end(), prop);
        if (it == opts_.label_properties.end()) return;
        if (!value->lang.empty() && value->lang.rfind("en", 0) != 0) return;
        labels_.push_back(PendingLabel{
            subject, static_cast<std::size_t>(it - opts_.label_properties.begin()),
            labels_.size(), value->text});
    }

    ConceptExpr class_expr(const Elem& e) {
        if (const auto* t = std::get_if<Token>(&e)) {
            if (t->kind == TokKind::Literal)
                throw SyntaxError("literal where a class expression was expected", t->line,
                                  t->column);
            std::string iri = iri_of(e);
            if (iri == kOwlThing) return ConceptExpr::top();
            if (iri == kOwlNothing) return ConceptExpr::bottom();
            return ConceptExpr::atomic(entity(e, Role::Concept));
        }
        const auto& n = std::get<Node>(e);
        if (n.head == "ObjectIntersectionOf" || n.head == "ObjectUnionOf") {
            if (n.args.size() < 2)
                throw SyntaxError(n.head + " needs at least two operands", n.line, n.column);
            std::vector<ConceptExpr> ops;
            for (const auto& a : n.args) ops.push_back(class_expr(a));
            return n.head == "ObjectIntersectionOf" ? ConceptExpr::conjunction(std::move(ops))
                                                    : ConceptExpr::disjunction(std::move(ops));
        }
        if (n.head == "ObjectComplementOf") {
            if (n.args.size() != 1)
                throw SyntaxError("ObjectComplementOf takes one operand", n.line, n.column);
            return ConceptExpr::negation(class_expr(n.args[0]));
        }
        if (n.head == "ObjectSomeValuesFrom" || n.head == "ObjectAllValuesFrom") {
            if (n.args.size() != 2)
                throw SyntaxError(n.head + " takes two operands", n.line, n.column);
            if (const auto* pn = std::get_if<Node>(&n.args[0])) throw Skip{pn->head, pn->line};
            PropertyExpr prop{entity(n.args[0], Role::Property)};
            auto filler = class_expr(n.args[1]);
            return n.head == "ObjectSomeValuesFrom" ? ConceptExpr::some(prop, std::move(filler))
                                                    : ConceptExpr::only(prop, std::move(filler));
        }
        throw Skip{n.head, n.line};
    }

    std::string iri_of(const Elem& e) {
        const auto* t = std::get_if<Token>(&e);
        if (t == nullptr) {
            const auto& n = std::get<Node>(e);
            throw SyntaxError("expected an IRI, found " + n.head, n.line, n.column);
        }
        if (t->kind == TokKind::FullIri) return t->text;
        if (t->kind != TokKind::Name) throw SyntaxError("expected an IRI", t->line, t->column);
        auto colon = t->text.find(':');
        if (colon == std::string::npos)
            throw SyntaxError("expected an IRI, found '" + t->text + "'", t->line, t->column);
        auto it = prefixes_.find(t->text.substr(0, colon));
        if (it == prefixes_.end())
            throw SyntaxError("unknown prefix in '" + t->text + "'", t->line, t->column);
        return it->second + t->text.substr(colon + 1);
    }

    Iri entity(const Elem& e, Role role) {
        Iri iri(iri_of(e));
        pending_.emplace_back(iri, role, elem_line(e));
        return iri;
    }

    // Registers the entities of an accepted axiom. An IRI used in two roles
    // is outside the model and the axiom is dropped.
    void commit() {
        auto& o = result_.ontology;
        for (const auto& [iri, role, line] : pending_) {
            const bool clash =
                (role != Role::Concept && o.concepts.count(iri)) ||
                (role != Role::Property && o.properties.count(iri)) ||
                (role != Role::Individual && o.individuals.count(iri)) ||
                std::any_of(pending_.begin(), pending_.end(), [&](const auto& p) {
                    return std::get<0>(p) == iri && std::get<1>(p) != role;
                });
            if (clash) throw Skip{"Punning", line};
        }
        for (const auto& [iri, role, line] : pending_) {
            switch (role) {
                case Role::Concept: o.concepts.insert(iri); break;
                case Role::Property: o.properties.insert(iri); break;
                case Role::Individual: o.individuals.insert(iri); break;
            }
        }
        pending_.clear();
    }

    static std::vector<const Elem*> strip_annotations(const Node& n) {
        std::vector<const Elem*> out;
        for (const auto& a : n.args) {
            const auto* child = std::get_if<Node>(&a);
            if (child != nullptr && child->head == "Annotation") continue;
            out.push_back(&a);
        }
        return out;
    }

    static void expect_arity(const Node& n, const std::vector<const Elem*>& args,
                             std::size_t k) {
        if (args.size() != k)
            throw SyntaxError(n.head + " expects " + std::to_string(k) + " operands", n.line,
                              n.column);
    }

    const ParseOptions& opts_;
    std::map<std::string, std::string> prefixes_;
    std::vector<std::tuple<Iri, Role, std::size_t>> pending_;
    std::vector<PendingLabel> labels_;
    ParseResult result_;
};

// ---------------------------------------------------------------------------
// Canonical concept text

class ConceptReader {
public:
    explicit ConceptReader(std::string_view src) : src_(src) {}

    ConceptExpr parse() {
        auto e = expr();
        skip_space();
        if (pos_ != src_.size()) fail("trailing input");
        return e;
    }

private:
    struct Tok {
        enum Kind { LParen, RParen, Word, Bracketed, End } kind;
        std::string text;
        std::size_t pos;
    };

    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(what, line, col);
    }

    void skip_space() {
        while (pos_ < src_.size() && static_cast<unsigned char>(src_[pos_]) <= 0x20) ++pos_;
    }

    Tok peek() {
        auto saved = pos_;
        auto t = lex();
        pos_ = saved;
        return t;
    }

    Tok lex() {
        skip_space();
        Tok t{Tok::End, {}, pos_};
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            t.kind = Tok::LParen;
        } else if (c == ')') {
            ++pos_;
            t.kind = Tok::RParen;
        } else if (c == '<') {
            auto end = src_.find('>', pos_);
            if (end == std::string_view::npos) fail("unterminated <IRI>");
            t.kind = Tok::Bracketed;
            t.text = std::string(src_.substr(pos_ + 1, end - pos_ - 1));
            if (t.text.empty()) fail("empty <IRI>");
            pos_ = end + 1;
        } else {
            t.kind = Tok::Word;
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if (static_cast<unsigned char>(d) <= 0x20 || d == '(' || d == ')' || d == '<' ||
                    d == '>')
                    break;
                t.text += d;
                ++pos_;
            }
        }
        return t;
    }

    static bool is_keyword(const std::string& w) {
        return w == "and" || w == "or" || w == "not" || w == "some" || w == "only";
    }

    Iri name(const Tok& t) {
        if (t.kind == Tok::Bracketed) return Iri(t.text);
        if (t.kind != Tok::Word || is_keyword(t.text) || t.text == "Thing" || t.text == "Nothing")
            fail_at("expected a name", t.pos);
        return Iri(t.text);
    }

    ConceptExpr expr() {
        Tok t = lex();
        if (t.kind == Tok::Word && t.text == "Thing") return ConceptExpr::top();
        if (t.kind == Tok::Word && t.text == "Nothing") return ConceptExpr::bottom();
        if (t.kind == Tok::Word || t.kind == Tok::Bracketed) return ConceptExpr::atomic(name(t));
        if (t.kind != Tok::LParen) fail_at("expected a concept expression", t.pos);

        Tok first = peek();
        if (first.kind == Tok::Word && first.text == "not") {
            lex();
            auto op = expr();
            close();
            return ConceptExpr::negation(std::move(op));
        }
        if (first.kind == Tok::Word || first.kind == Tok::Bracketed) {
            auto saved = pos_;
            lex();
            Tok q = peek();
            if (q.kind == Tok::Word && (q.text == "some" || q.text == "only")) {
                PropertyExpr prop{name(first)};
                lex();
                auto filler = expr();
                close();
                return q.text == "some" ? ConceptExpr::some(prop, std::move(filler))
                                        : ConceptExpr::only(prop, std::move(filler));
            }
            pos_ = saved;
        }

        std::vector<ConceptExpr> ops;
        ops.push_back(expr());
        std::string connective;
        for (;;) {
            Tok k = lex();
            if (k.kind == Tok::RParen) break;
            if (k.kind != Tok::Word || (k.text != "and" && k.text != "or"))
                fail_at("expected 'and', 'or' or ')'", k.pos);
            if (!connective.empty() && connective != k.text)
                fail_at("mixed 'and'/'or' without parentheses", k.pos);
            connective = k.text;
            ops.push_back(expr());
        }
        if (ops.size() < 2) fail_at("redundant parentheses", t.pos);
        return connective == "and" ? ConceptExpr::conjunction(std::move(ops))
                                   : ConceptExpr::disjunction(std::move(ops));
    }

    void close() {
        Tok t = lex();
        if (t.kind != Tok::RParen) fail_at("expected ')'", t.pos);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse_ontology(std::string_view text, const ParseOptions& opts) {
    Reader reader(text);
    Builder builder(opts);
    builder.document(reader);
    return builder.finish();
}

ConceptExpr parse_concept(std::string_view text) { return ConceptReader(text).parse(); }

std::string warnings_to_jsonl(const std::vector<ParseWarning>& warnings) {
    std::string out;
    for (const auto& w : warnings) {
        nlohmann::ordered_json j;
        j["line"] = w.line;
        j["construct"] = w.construct;
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace ontoforge

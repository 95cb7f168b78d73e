#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quiverkit/path.hpp"
#include "quiverkit/scalar.hpp"

namespace quiverkit {

/// Element of the path algebra KE: a finite K-linear combination of paths of
/// the ambient graph.  Zero coefficients are never stored, and terms are kept
/// in the canonical (length, lexicographic) order, so equality and printing
/// are structural.  Arithmetic between elements demands the same ambient
/// graph, where "same" means one shared object or structural equality;
/// anything else is a typed error, not a silent zero.
template <FieldScalar K>
class Element {
public:
    using Terms = std::map<Path, K, PathLess>;

    explicit Element(std::shared_ptr<const Graph> ambient)
        : ambient_(std::move(ambient)), terms_(PathLess{ambient_.get()}) {
        if (!ambient_) throw PreconditionError("element needs an ambient graph");
    }

    static Element zero(std::shared_ptr<const Graph> g) { return Element(std::move(g)); }

    static Element path_term(std::shared_ptr<const Graph> g, const Path& p, K c = K::one()) {
        Element e(std::move(g));
        e.add_term(p, c);
        return e;
    }

    static Element vertex_term(std::shared_ptr<const Graph> g, VertexIdx v, K c = K::one()) {
        return path_term(std::move(g), Path::at_vertex(v), c);
    }

    /// The identity of KE: the sum of all trivial paths.
    static Element unit(std::shared_ptr<const Graph> g) {
        Element e(g);
        for (VertexIdx v = 0; v < g->vertex_count(); ++v)
            e.add_term(Path::at_vertex(v), K::one());
        return e;
    }

    const Graph& graph() const { return *ambient_; }
    std::shared_ptr<const Graph> ambient() const { return ambient_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulates c on the path's coefficient, dropping the term when the
    /// sum vanishes.  The path must be valid in the ambient graph.
    void add_term(const Path& p, const K& c) {
        if (c.is_zero()) return;
        if (!p.valid_in(*ambient_))
            throw PreconditionError("path is not valid in this graph");
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    K coeff(const Path& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? K::zero() : it->second;
    }

    Element operator+(const Element& o) const {
        check_same_ambient(o);
        Element r = *this;
        for (const auto& [p, c] : o.terms_) r.add_term(p, c);
        return r;
    }

    Element operator-(const Element& o) const {
        check_same_ambient(o);
        Element r = *this;
        for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
        return r;
    }

    Element operator-() const {
        Element r(ambient_);
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }

    Element scaled(const K& c) const {
        Element r(ambient_);
        if (c.is_zero()) return r;
        for (const auto& [p, k] : terms_) r.terms_.emplace(p, k * c);
        return r;
    }

    /// The bilinear extension of path concatenation.
    Element operator*(const Element& o) const {
        check_same_ambient(o);
        Element r(ambient_);
        for (const auto& [p, cp] : terms_)
            for (const auto& [q, cq] : o.terms_)
                if (auto pq = path_compose(*ambient_, p, q))
                    r.add_term(*pq, cp * cq);
        return r;
    }

    bool operator==(const Element& o) const {
        check_same_ambient(o);
        return terms_ == o.terms_;
    }

    /// Canonical serialization in term order, e.g. "v0 - 2*f2 + 3/2*f0.f1";
    /// the zero element prints as "0".  Output re-parses to the same value.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            K mag = c.is_negative() ? -c : c;
            if (first) {
                if (c.is_negative()) s += "-";
                first = false;
            } else {
                s += c.is_negative() ? " - " : " + ";
            }
            if (!mag.is_one()) s += mag.str() + "*";
            s += p.str(*ambient_);
        }
        return s;
    }

private:
    void check_same_ambient(const Element& o) const {
        if (ambient_ == o.ambient_) return;
        if (*ambient_ == *o.ambient_) return;
        throw PreconditionError("elements live over different graphs");
    }

    std::shared_ptr<const Graph> ambient_;
    Terms terms_;
};

/// Keeps exactly the terms whose paths run from u to v; equals u·a·v.
template <FieldScalar K>
Element<K> peirce_project(const Element<K>& a, const std::string& u_id, const std::string& v_id) {
    const Graph& g = a.graph();
    VertexIdx u = g.vertex(u_id);
    VertexIdx v = g.vertex(v_id);
    Element<K> r(a.ambient());
    for (const auto& [p, c] : a.terms())
        if (p.source() == u && p.range(g) == v) r.add_term(p, c);
    return r;
}

namespace detail {

/// Shared tokenizer for the element expression grammar.  Words are maximal
/// [A-Za-z0-9_]+ runs; everything else is a single-character operator.
/// Columns are 1-based.
struct ExprToken {
    enum Kind { Word, Plus, Minus, Star, Slash, Dot, End } kind;
    std::string text;
    int column;
};

inline std::vector<ExprToken> expr_tokens(const std::string& text) {
    std::vector<ExprToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t') { ++i; continue; }
        int col = static_cast<int>(i) + 1;
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({ExprToken::Word, text.substr(i, j - i), col});
            i = j;
            continue;
        }
        ExprToken::Kind k;
        switch (ch) {
            case '+': k = ExprToken::Plus; break;
            case '-': k = ExprToken::Minus; break;
            case '*': k = ExprToken::Star; break;
            case '/': k = ExprToken::Slash; break;
            case '.': k = ExprToken::Dot; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, ch) + "'", 0, col);
        }
        out.push_back({k, std::string(1, ch), col});
        ++i;
    }
    out.push_back({ExprToken::End, "", static_cast<int>(text.size()) + 1});
    return out;
}

inline bool digits_only(const std::string& s) {
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return !s.empty();
}

inline long long parse_int_word(const ExprToken& t) {
    try {
        return std::stoll(t.text);
    } catch (const std::out_of_range&) {
        throw ParseError("integer literal out of range", 0, t.column);
    }
}

} // namespace detail

/// Parses the element expression grammar
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := coeff '*' path | path | coeff
///   coeff := int | int '/' int
///   path  := id ('.' id)*
/// against the ambient graph.  A single id names a vertex (trivial path) or
/// an edge; a dotted chain must be composable edges.  A bare coefficient
/// means that multiple of the identity, the sum of all vertices.  Words made
/// of digits alone are always integer literals, never ids.  Path length is
/// capped to bound memory.
template <FieldScalar K>
Element<K> parse_element(std::shared_ptr<const Graph> g, const std::string& text,
                         std::size_t path_cap = 512) {
    using detail::ExprToken;
    auto toks = detail::expr_tokens(text);
    std::size_t pos = 0;
    auto peek = [&]() -> const ExprToken& { return toks[pos]; };
    auto next = [&]() -> const ExprToken& { return toks[pos++]; };

    auto parse_path = [&](const ExprToken& head) -> Path {
        std::vector<std::string> ids{head.text};
        std::vector<int> cols{head.column};
        while (peek().kind == ExprToken::Dot) {
            next();
            if (peek().kind != ExprToken::Word)
                throw ParseError("expected an id after '.'", 0, peek().column);
            const ExprToken& t = next();
            ids.push_back(t.text);
            cols.push_back(t.column);
        }
        if (ids.size() == 1) {
            if (auto v = g->find_vertex(ids[0])) return Path::at_vertex(*v);
            if (auto e = g->find_edge(ids[0]))
                return Path::along(*g, {*e});
            throw ParseError("unknown id '" + ids[0] + "'", 0, cols[0]);
        }
        if (ids.size() > path_cap)
            throw CapExceeded("path length cap exceeded", static_cast<long long>(path_cap));
        std::vector<EdgeIdx> edges;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            auto e = g->find_edge(ids[i]);
            if (!e) {
                if (g->find_vertex(ids[i]))
                    throw ParseError("'" + ids[i] + "' is not an edge", 0, cols[i]);
                throw ParseError("unknown id '" + ids[i] + "'", 0, cols[i]);
            }
            if (!edges.empty() && g->dst(edges.back()) != g->src(*e))
                throw ParseError("edges '" + ids[i - 1] + "' and '" + ids[i] +
                                     "' do not compose",
                                 0, cols[i]);
            edges.push_back(*e);
        }
        return Path::along(*g, std::move(edges));
    };

    auto parse_term = [&]() -> Element<K> {
        if (peek().kind != ExprToken::Word)
            throw ParseError("expected a term", 0, peek().column);
        const ExprToken& head = next();
        if (detail::digits_only(head.text)) {
            long long n = detail::parse_int_word(head);
            K c = K::from_long(n);
            if (peek().kind == ExprToken::Slash) {
                next();
                if (peek().kind != ExprToken::Word || !detail::digits_only(peek().text))
                    throw ParseError("expected an integer denominator", 0, peek().column);
                const ExprToken& dt = next();
                long long d = detail::parse_int_word(dt);
                if (d == 0) throw ParseError("division by zero in coefficient", 0, dt.column);
                c = K::from_fraction(n, d);
            }
            if (peek().kind == ExprToken::Star) {
                next();
                if (peek().kind != ExprToken::Word)
                    throw ParseError("expected a path after '*'", 0, peek().column);
                Path p = parse_path(next());
                return Element<K>::path_term(g, p, c);
            }
            return Element<K>::unit(g).scaled(c);
        }
        Path p = parse_path(head);
        return Element<K>::path_term(g, p);
    };

    Element<K> acc(g);
    bool negate = false;
    if (peek().kind == ExprToken::Plus) next();
    else if (peek().kind == ExprToken::Minus) { next(); negate = true; }
    while (true) {
        Element<K> t = parse_term();
        acc = negate ? acc - t : acc + t;
        if (peek().kind == ExprToken::Plus) { next(); negate = false; continue; }
        if (peek().kind == ExprToken::Minus) { next(); negate = true; continue; }
        break;
    }
    if (peek().kind != ExprToken::End)
        throw ParseError("unexpected token '" + peek().text + "'", 0, peek().column);
    return acc;
}

} // namespace quiverkit

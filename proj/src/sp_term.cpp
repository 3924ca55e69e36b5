#include "spc/sp_term.hpp"

#include <algorithm>
#include <random>

#include "spc/errors.hpp"

namespace spc {

SPTerm SPTerm::edge() { return SPTerm{}; }

SPTerm SPTerm::series(std::vector<SPTerm> children) {
    if (children.size() < 2)
        throw PreconditionError("SPTerm::series needs at least 2 children");
    return SPTerm{Kind::Series, std::move(children)};
}

SPTerm SPTerm::parallel(std::vector<SPTerm> children) {
    if (children.size() < 2)
        throw PreconditionError("SPTerm::parallel needs at least 2 children");
    return SPTerm{Kind::Parallel, std::move(children)};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SPTerm parse() {
        SPTerm term = parse_term();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after term");
        return term;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("power out of range");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    SPTerm parse_term() {
        SPTerm term = parse_primary();
        // postfix powers bind left to right: e^2|3 is (e^2)|3
        while (!at_end() && (text_[pos_] == '^' || text_[pos_] == '|')) {
            char op = text_[pos_];
            ++pos_;
            std::size_t at = pos_;
            int n = parse_int();
            if (n < 1) throw ParseError("power must be >= 1", at);
            term = op == '^' ? series_power(term, n) : parallel_power(term, n);
        }
        return term;
    }

    SPTerm parse_primary() {
        char c = peek();
        if (c == 'e') {
            ++pos_;
            return SPTerm::edge();
        }
        if (c == 'S' || c == 'P') {
            ++pos_;
            expect('(');
            std::vector<SPTerm> children;
            children.push_back(parse_term());
            while (peek() == ',') {
                ++pos_;
                children.push_back(parse_term());
            }
            expect(')');
            if (children.size() < 2) fail("S(...) and P(...) need at least 2 children");
            return c == 'S' ? SPTerm::series(std::move(children))
                            : SPTerm::parallel(std::move(children));
        }
        fail("expected 'e', 'S(' or 'P('");
    }
};

} // namespace

SPTerm parse_sp_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_sp_expression(const SPTerm& term) {
    switch (term.kind) {
    case SPTerm::Kind::Edge:
        return "e";
    case SPTerm::Kind::Series:
    case SPTerm::Kind::Parallel: {
        std::string out = term.kind == SPTerm::Kind::Series ? "S(" : "P(";
        for (std::size_t i = 0; i < term.children.size(); ++i) {
            if (i) out += ',';
            out += print_sp_expression(term.children[i]);
        }
        out += ')';
        return out;
    }
    }
    throw Error("print_sp_expression: corrupt term");
}

namespace {

SPTerm power(const SPTerm& term, int n, SPTerm::Kind kind) {
    if (n < 1) throw PreconditionError("power must be >= 1, got " + std::to_string(n));
    if (n == 1) return term;
    std::vector<SPTerm> copies(static_cast<std::size_t>(n), term);
    return SPTerm{kind, std::move(copies)};
}

} // namespace

SPTerm series_power(const SPTerm& term, int n) { return power(term, n, SPTerm::Kind::Series); }

SPTerm parallel_power(const SPTerm& term, int n) {
    return power(term, n, SPTerm::Kind::Parallel);
}

SPTerm series_stretch(const SPTerm& term, int s) {
    if (s < 1) throw PreconditionError("series_stretch: s must be >= 1");
    if (term.kind == SPTerm::Kind::Edge) return series_power(SPTerm::edge(), s);
    std::vector<SPTerm> children;
    children.reserve(term.children.size());
    for (const SPTerm& child : term.children) children.push_back(series_stretch(child, s));
    return SPTerm{term.kind, std::move(children)};
}

int leaf_count(const SPTerm& term) {
    if (term.kind == SPTerm::Kind::Edge) return 1;
    int total = 0;
    for (const SPTerm& child : term.children) total += leaf_count(child);
    return total;
}

bool has_terminal_edge(const SPTerm& term) {
    switch (term.kind) {
    case SPTerm::Kind::Edge:
        return true;
    case SPTerm::Kind::Series:
        return false;
    case SPTerm::Kind::Parallel:
        return std::any_of(term.children.begin(), term.children.end(),
                           [](const SPTerm& c) { return has_terminal_edge(c); });
    }
    return false;
}

SPTerm random_sp_term(int leaves, std::uint64_t seed) {
    if (leaves < 1) throw PreconditionError("random_sp_term: leaves must be >= 1");
    std::mt19937_64 rng(seed);
    // rng() % n instead of uniform_int_distribution: the distribution's output
    // is not pinned down by the standard, and runs must reproduce everywhere.
    auto next = [&rng](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };

    std::vector<SPTerm> pool(static_cast<std::size_t>(leaves), SPTerm::edge());
    while (pool.size() > 1) {
        int a = next(static_cast<int>(pool.size()));
        int b = next(static_cast<int>(pool.size()) - 1);
        if (b >= a) ++b;
        if (a > b) std::swap(a, b);
        SPTerm left = std::move(pool[a]);
        SPTerm right = std::move(pool[b]);
        pool.erase(pool.begin() + b);

        bool parallel = next(2) == 1;
        if (parallel && has_terminal_edge(left) && has_terminal_edge(right))
            parallel = false; // parallel merge would realize a multi-edge
        pool[a] = parallel ? SPTerm::parallel({std::move(left), std::move(right)})
                           : SPTerm::series({std::move(left), std::move(right)});
    }
    return std::move(pool.front());
}

// ---------------------------------------------------------------------------
// Realization

namespace {

class Realizer {
public:
    RealizedGraph run(const SPTerm& term) {
        int x = fresh();
        int y = fresh();
        fill(term, x, y);
        return make_graph(std::move(vertices_), std::move(edges_), {{x, y}});
    }

private:
    std::vector<int> vertices_;
    std::vector<std::pair<int, int>> edges_;
    int next_ = 0;

    int fresh() {
        vertices_.push_back(next_);
        return next_++;
    }

    void add_edge(int u, int v) {
        auto e = u < v ? std::pair{u, v} : std::pair{v, u};
        if (std::find(edges_.begin(), edges_.end(), e) != edges_.end())
            throw PreconditionError("realize: term produces a multi-edge between vertices " +
                                    std::to_string(e.first) + " and " +
                                    std::to_string(e.second));
        edges_.push_back(e);
    }

    void fill(const SPTerm& term, int x, int y) {
        switch (term.kind) {
        case SPTerm::Kind::Edge:
            add_edge(x, y);
            return;
        case SPTerm::Kind::Series: {
            int prev = x;
            for (std::size_t i = 0; i + 1 < term.children.size(); ++i) {
                int mid = fresh();
                fill(term.children[i], prev, mid);
                prev = mid;
            }
            fill(term.children.back(), prev, y);
            return;
        }
        case SPTerm::Kind::Parallel:
            for (const SPTerm& child : term.children) fill(child, x, y);
            return;
        }
    }
};

} // namespace

RealizedGraph realize(const SPTerm& term) { return Realizer().run(term); }

} // namespace spc

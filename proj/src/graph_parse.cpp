#include <sstream>

#include "quiverkit/graph.hpp"

namespace quiverkit {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

} // namespace

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = split_line(line);
        if (tokens.empty() || tokens[0].text[0] == '#') continue;

        const std::string& head = tokens[0].text;
        auto check_id = [&](const Token& t) {
            if (!is_valid_id(t.text))
                throw ParseError("invalid id '" + t.text + "'", lineno, t.column);
        };
        try {
            if (head == "vertex") {
                if (tokens.size() != 2)
                    throw ParseError("expected 'vertex <id>'", lineno, tokens[0].column);
                check_id(tokens[1]);
                g.add_vertex(tokens[1].text);
            } else if (head == "edge") {
                if (tokens.size() != 4)
                    throw ParseError("expected 'edge <id> <src> <dst>'", lineno,
                                     tokens[0].column);
                for (int i = 1; i <= 3; ++i) check_id(tokens[i]);
                for (int i = 2; i <= 3; ++i)
                    if (!g.find_vertex(tokens[i].text))
                        throw ParseError("unknown vertex '" + tokens[i].text + "'",
                                         lineno, tokens[i].column);
                g.add_edge(tokens[1].text, tokens[2].text, tokens[3].text);
            } else {
                throw ParseError("unknown declaration '" + head + "'", lineno,
                                 tokens[0].column);
            }
        } catch (const ParseError& e) {
            if (e.line() > 0) throw;
            // Id errors raised by the graph builder gain the position here.
            throw ParseError(e.what(), lineno, tokens.size() > 1 ? tokens[1].column : 1);
        }
    }
    return g;
}

} // namespace quiverkit

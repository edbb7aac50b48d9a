#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rational.hpp"

namespace homcolor {

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw validation_error("self-loops are not allowed");
    if (u > v) std::swap(u, v);
    edges_.insert({u, v});
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    edges_.erase({u, v});
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(size());
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

Graph Graph::induced(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        labels.push_back(labels_[keep[i]]);
        pos[keep[i]] = i;
    }
    Graph sub(std::move(labels));
    for (auto [u, v] : edges_) {
        auto iu = pos.find(u), iv = pos.find(v);
        if (iu != pos.end() && iv != pos.end()) sub.add_edge(iu->second, iv->second);
    }
    return sub;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.color.size() != g.size()) return false;
    for (int col : c.color)
        if (col < 0 || col >= c.palette) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string graph_to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (const auto& label : g.labels()) os << "  " << dot_quote(label) << ";\n";
    for (auto [u, v] : g.edges())
        os << "  " << dot_quote(g.labels()[u]) << " -- " << dot_quote(g.labels()[v]) << ";\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_dot(const Graph& g, const Coloring& coloring, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        os << "  " << dot_quote(g.labels()[i]) << " [color=" << coloring.color[i] << "];\n";
    for (auto [u, v] : g.edges())
        os << "  " << dot_quote(g.labels()[u]) << " -- " << dot_quote(g.labels()[v]) << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

struct DotLexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i]))) {
                ++i;
            } else if (s[i] == '/' && i + 1 < s.size() && s[i + 1] == '/') {
                while (i < s.size() && s[i] != '\n') ++i;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return i >= s.size();
    }

    std::string next() {
        skip_ws();
        if (i >= s.size()) return "";
        char c = s[i];
        if (c == '{' || c == '}' || c == ';' || c == '[' || c == ']' || c == '=') {
            ++i;
            return std::string(1, c);
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
            i += 2;
            return "--";
        }
        if (c == '"') {
            std::string out;
            ++i;
            while (i < s.size() && s[i] != '"') {
                if (s[i] == '\\' && i + 1 < s.size()) ++i;
                out += s[i++];
            }
            if (i >= s.size()) throw validation_error("DOT: unterminated string");
            ++i;
            return "\xFF" + out;  // marker: quoted identifier (may be empty)
        }
        std::string out;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
               std::string("{};[]=\"").find(s[i]) == std::string::npos &&
               !(s[i] == '-' && i + 1 < s.size() && s[i + 1] == '-'))
            out += s[i++];
        if (out.empty()) throw validation_error("DOT: unexpected character");
        return "\xFF" + out;
    }
};

}  // namespace

Graph graph_from_dot(const std::string& text) {
    DotLexer lex{text};
    std::string tok = lex.next();
    if (tok == "\xFF" "strict") tok = lex.next();
    if (tok != "\xFF" "graph") throw validation_error("DOT: expected undirected graph");
    tok = lex.next();
    if (tok != "{") {
        tok = lex.next();  // optional graph name
        if (tok != "{") throw validation_error("DOT: expected '{'");
    }

    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> edge_list;
    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        index[name] = labels.size();
        labels.push_back(name);
        return labels.size() - 1;
    };

    while (true) {
        tok = lex.next();
        if (tok == "}") break;
        if (tok == ";") continue;
        if (tok.empty()) throw validation_error("DOT: unexpected end of input");
        if (tok[0] != '\xFF') throw validation_error("DOT: expected identifier");
        std::size_t u = intern(tok.substr(1));
        tok = lex.next();
        if (tok == "[") {  // attribute list on a node: skip
            while (tok != "]") {
                tok = lex.next();
                if (tok.empty()) throw validation_error("DOT: unterminated attributes");
            }
            continue;
        }
        while (tok == "--") {
            tok = lex.next();
            if (tok.empty() || tok[0] != '\xFF')
                throw validation_error("DOT: expected identifier after '--'");
            std::size_t v = intern(tok.substr(1));
            edge_list.push_back({u, v});
            u = v;
            tok = lex.next();
        }
        if (tok == "[") {
            while (tok != "]") {
                tok = lex.next();
                if (tok.empty()) throw validation_error("DOT: unterminated attributes");
            }
        }
    }

    Graph g(labels);
    for (auto [u, v] : edge_list) g.add_edge(u, v);
    return g;
}

}  // namespace homcolor

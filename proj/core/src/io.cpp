#include "tinv/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "tinv/error.hpp"

namespace tinv {
namespace {

struct Line {
    int number = 0;
    std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) l.words.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!l.words.empty()) out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] void parse_error(int line, const std::string& msg) {
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t number(std::string_view w, int line) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || p != w.data() + w.size()) parse_error(line, "expected a natural number, got '" + std::string(w) + "'");
    return v;
}

// "domain:" either stands alone or is glued to the first value.
bool header(const Line& l, std::string_view key, std::vector<std::string_view>& rest) {
    std::string_view w = l.words.front();
    if (w.substr(0, key.size()) != key) return false;
    rest.clear();
    if (w.size() > key.size()) rest.push_back(w.substr(key.size()));
    rest.insert(rest.end(), l.words.begin() + 1, l.words.end());
    return true;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::Io, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorKind::Io, "short write to " + path.string());
}

FiniteRelation parse_relation(std::string_view text, const Caps& caps) {
    std::vector<State> domain;
    std::vector<Edge> edges;
    bool have_domain = false;
    std::vector<std::string_view> rest;
    for (const Line& l : tokenize(text)) {
        if (header(l, "domain:", rest)) {
            if (have_domain) parse_error(l.number, "second domain header");
            have_domain = true;
            for (auto w : rest) domain.push_back(number(w, l.number));
            continue;
        }
        if (l.words.size() != 2) parse_error(l.number, "expected 'x y'");
        edges.emplace_back(number(l.words[0], l.number), number(l.words[1], l.number));
    }
    if (!have_domain) {
        for (auto [x, y] : edges) {
            domain.push_back(x);
            domain.push_back(y);
        }
    }
    domain = make_state_set(std::move(domain));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return FiniteRelation(std::move(domain), std::move(edges), caps);
}

std::string format_relation(const FiniteRelation& r) {
    std::string out = "domain:";
    for (State x : r.domain()) out += " " + std::to_string(x);
    out += "\n";
    for (auto [x, y] : r.edges()) out += std::to_string(x) + " " + std::to_string(y) + "\n";
    return out;
}

StateFunction parse_state_function(std::string_view text) {
    StateFunction f;
    f.provenance = StateFunction::Provenance::UserSupplied;
    for (const Line& l : tokenize(text)) {
        if (l.words.size() != 2) parse_error(l.number, "expected 'x value'");
        auto x = number(l.words[0], l.number);
        if (!f.table.emplace(x, number(l.words[1], l.number)).second)
            parse_error(l.number, "second value for " + std::to_string(x));
    }
    return f;
}

StateFunction parse_state_function(std::string_view text, const FiniteRelation& r) {
    auto f = parse_state_function(text);
    for (State x : r.domain())
        if (!f.table.count(x)) fail(ErrorKind::PartialFunction, "no value for state " + std::to_string(x));
    return f;
}

Coloring parse_coloring(std::string_view text) {
    std::vector<State> vertices;
    unsigned colors = 0;
    bool have_vertices = false;
    std::vector<std::tuple<State, State, unsigned, int>> entries;
    std::vector<std::string_view> rest;
    for (const Line& l : tokenize(text)) {
        if (header(l, "vertices:", rest)) {
            have_vertices = true;
            for (auto w : rest) vertices.push_back(number(w, l.number));
        } else if (header(l, "colors:", rest)) {
            if (rest.size() != 1) parse_error(l.number, "expected 'colors: k'");
            colors = static_cast<unsigned>(number(rest[0], l.number));
        } else {
            if (l.words.size() != 3) parse_error(l.number, "expected 'x y c'");
            entries.emplace_back(number(l.words[0], l.number), number(l.words[1], l.number),
                                 static_cast<unsigned>(number(l.words[2], l.number)), l.number);
        }
    }
    if (!have_vertices) fail(ErrorKind::ParseError, "missing 'vertices:' header");
    if (colors == 0) fail(ErrorKind::ParseError, "missing 'colors:' header");
    vertices = make_state_set(std::move(vertices));
    const std::size_t n = vertices.size();
    std::vector<std::uint8_t> pairs(n < 2 ? 0 : Coloring::pair_index(0, n - 1) + n - 1, 0);
    std::vector<char> seen(pairs.size(), 0);
    auto pos = [&](State v, int line) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) parse_error(line, std::to_string(v) + " is not a vertex");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    for (auto [x, y, c, line] : entries) {
        std::size_t i = pos(x, line), j = pos(y, line);
        if (i == j) parse_error(line, "a pair needs two distinct vertices");
        if (i > j) std::swap(i, j);
        if (c >= colors) parse_error(line, "color " + std::to_string(c) + " out of range");
        auto p = Coloring::pair_index(i, j);
        if (seen[p] && pairs[p] != c) parse_error(line, "pair colored twice");
        seen[p] = 1;
        pairs[p] = static_cast<std::uint8_t>(c);
    }
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!seen[Coloring::pair_index(i, j)])
                fail(ErrorKind::ParseError, "pair {" + std::to_string(vertices[i]) + "," +
                                                std::to_string(vertices[j]) + "} has no color");
    return Coloring(std::move(vertices), colors, std::move(pairs));
}

std::string format_coloring(const Coloring& c) {
    std::string out = "vertices:";
    for (State v : c.vertices()) out += " " + std::to_string(v);
    out += "\ncolors: " + std::to_string(c.colors()) + "\n";
    for (std::size_t j = 1; j < c.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            out += std::to_string(c.vertices()[i]) + " " + std::to_string(c.vertices()[j]) + " " +
                   std::to_string(c.at(i, j)) + "\n";
    return out;
}

StateSet parse_state_set(std::string_view text) {
    std::vector<State> out;
    for (const Line& l : tokenize(text))
        for (auto w : l.words) out.push_back(number(w, l.number));
    return make_state_set(std::move(out));
}

}  // namespace tinv

#include "liking/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace liking::io {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++number;
        if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::istringstream stream{std::string(raw)};
        std::vector<std::string> tokens;
        for (std::string tok; stream >> tok;) tokens.push_back(std::move(tok));
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

int parse_int(const std::string& token, int line) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + token + "'");
    }
}

}  // namespace

Digraph parse_digraph(std::string_view text, std::vector<ParseWarning>* warnings) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing 'digraph <n>' header");
    const auto& header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[0] != "digraph")
        throw ParseError(header.number, "expected 'digraph <n>' header");
    const int n = parse_int(header.tokens[1], header.number);
    if (n < 1 || n > Digraph::max_order)
        throw ParseError(header.number, "order must be between 1 and 64");

    std::vector<word> rows(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected an arc 'u v'");
        const int u = parse_int(line.tokens[0], line.number);
        const int v = parse_int(line.tokens[1], line.number);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line.number, "arc endpoint out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(line.number, "loop arc not allowed");
        if (rows[static_cast<std::size_t>(u)] & bit(v)) {
            if (warnings)
                warnings->push_back({line.number, "duplicate arc " + std::to_string(u) + " " +
                                                      std::to_string(v) + " collapsed"});
            continue;
        }
        rows[static_cast<std::size_t>(u)] |= bit(v);
    }
    return Digraph::from_out_rows(n, rows);
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "digraph " << d.order() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

Design parse_design(std::string_view text, std::vector<ParseWarning>* warnings) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing 'design <v> <b>' header");
    const auto& header = lines.front();
    if (header.tokens.size() != 3 || header.tokens[0] != "design")
        throw ParseError(header.number, "expected 'design <v> <b>' header");
    const int v = parse_int(header.tokens[1], header.number);
    const int b = parse_int(header.tokens[2], header.number);
    if (v < 2) throw ParseError(header.number, "need at least 2 varieties");
    if (b < 1) throw ParseError(header.number, "need at least one block");
    if (static_cast<int>(lines.size()) - 1 != b)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(b) + " block lines, got " +
                             std::to_string(lines.size() - 1));

    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(b));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() == 1 && line.tokens[0] == "-")
            throw ParseError(line.number, "empty block not allowed");
        std::vector<int> block;
        for (const auto& tok : line.tokens) {
            const int x = parse_int(tok, line.number);
            if (x < 0 || x >= v)
                throw ParseError(line.number,
                                 "variety " + std::to_string(x) + " out of range 0.." +
                                     std::to_string(v - 1));
            block.push_back(x);
        }
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() && warnings)
            warnings->push_back({line.number, "duplicate variety in block collapsed"});
        blocks.push_back(std::move(block));
    }
    return Design(v, std::move(blocks));
}

std::string serialize_design(const Design& d) {
    std::ostringstream out;
    out << "design " << d.varieties() << ' ' << d.block_count() << '\n';
    for (const auto& block : d.blocks()) {
        for (std::size_t i = 0; i < block.size(); ++i)
            out << block[i] << (i + 1 < block.size() ? ' ' : '\n');
        if (block.empty()) out << "-\n";
    }
    return out.str();
}

SetFamily parse_family(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing 'family <m> <k>' header");
    const auto& header = lines.front();
    if (header.tokens.size() != 3 || header.tokens[0] != "family")
        throw ParseError(header.number, "expected 'family <m> <k>' header");
    const int m = parse_int(header.tokens[1], header.number);
    const int k = parse_int(header.tokens[2], header.number);
    if (m < 1) throw ParseError(header.number, "ground set must be nonempty");
    if (k < 0) throw ParseError(header.number, "set count must be nonnegative");
    if (static_cast<int>(lines.size()) - 1 != k)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(k) + " set lines, got " +
                             std::to_string(lines.size() - 1));

    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<std::size_t>(k));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        std::vector<int> set;
        if (!(line.tokens.size() == 1 && line.tokens[0] == "-"))
            for (const auto& tok : line.tokens) {
                const int x = parse_int(tok, line.number);
                if (x < 0 || x >= m)
                    throw ParseError(line.number, "element " + std::to_string(x) +
                                                      " out of range 0.." + std::to_string(m - 1));
                set.push_back(x);
            }
        sets.push_back(std::move(set));
    }
    return SetFamily(m, std::move(sets));
}

std::string serialize_family(const SetFamily& f) {
    std::ostringstream out;
    out << "family " << f.ground() << ' ' << f.size() << '\n';
    for (const auto& set : f.sets()) {
        if (set.empty()) {
            out << "-\n";
            continue;
        }
        for (std::size_t i = 0; i < set.size(); ++i)
            out << set[i] << (i + 1 < set.size() ? ' ' : '\n');
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace liking::io

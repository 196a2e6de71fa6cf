#include "gtwist/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace gtwist {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<long long> split_integers(const std::string& text, int line_no) {
    std::vector<long long> out;
    std::istringstream iss(text);
    std::string tok;
    while (iss >> tok) {
        size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("expected integer, got '" + tok + "'", line_no);
        }
        if (used != tok.size()) throw ParseError("expected integer, got '" + tok + "'", line_no);
        if (value < 0) throw ParseError("vertex labels must be non-negative", line_no);
        out.push_back(value);
    }
    return out;
}

}  // namespace

ParsedRotationSystem parse_rotation_system(std::string_view text) {
    std::istringstream input{std::string(text)};
    std::string line;
    int line_no = 0;

    long long n = -1;
    int header_line = 0;
    // label -> (rotation entries, defining line)
    std::map<long long, std::pair<std::vector<long long>, int>> raw;

    while (std::getline(input, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        if (n < 0) {
            std::istringstream iss(line);
            std::string word;
            iss >> word;
            if (word != "n") throw ParseError("expected header 'n <count>'", line_no);
            std::string rest;
            std::getline(iss, rest);
            auto nums = split_integers(rest, line_no);
            if (nums.size() != 1) throw ParseError("expected header 'n <count>'", line_no);
            n = nums[0];
            if (n < 3) throw ParseError("vertex count must be at least 3", line_no);
            header_line = line_no;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected '<v>: a b c ...'", line_no);
        auto head = split_integers(line.substr(0, colon), line_no);
        if (head.size() != 1) throw ParseError("expected a single vertex label before ':'", line_no);
        const long long label = head[0];
        if (raw.count(label))
            throw ParseError("duplicate rotation for vertex " + std::to_string(label), line_no);
        if (static_cast<long long>(raw.size()) >= n)
            throw ParseError("more than " + std::to_string(n) + " rotation lines", line_no);
        raw[label] = {split_integers(line.substr(colon + 1), line_no), line_no};
    }

    if (n < 0) throw ParseError("missing header 'n <count>'", 0);
    if (static_cast<long long>(raw.size()) != n)
        throw ParseError("missing rotation: got " + std::to_string(raw.size()) + " of " +
                             std::to_string(n) + " vertices",
                         header_line);

    // Densify labels in ascending order.
    std::vector<long long> labels;
    labels.reserve(raw.size());
    for (const auto& [label, _] : raw) labels.push_back(label);
    std::map<long long, Vertex> dense;
    for (size_t i = 0; i < labels.size(); ++i) dense[labels[i]] = static_cast<Vertex>(i);

    std::vector<std::vector<Vertex>> rows(static_cast<size_t>(n));
    for (const auto& [label, entry] : raw) {
        const auto& [entries, def_line] = entry;
        auto& row = rows[dense[label]];
        row.reserve(entries.size());
        for (long long e : entries) {
            auto it = dense.find(e);
            if (it == dense.end())
                throw ParseError("unknown vertex label " + std::to_string(e), def_line);
            row.push_back(it->second);
        }
        if (static_cast<long long>(row.size()) != n - 1)
            throw ParseError("rotation of vertex " + std::to_string(label) + " must list " +
                                 std::to_string(n - 1) + " vertices",
                             def_line);
    }

    ValidationReport report = validate_rows(rows);
    if (!report.ok()) {
        const long long label = report.vertex >= 0 ? labels[report.vertex] : -1;
        const int at = report.vertex >= 0 ? raw[label].second : header_line;
        throw ParseError(report.message +
                             (label >= 0 ? " (vertex " + std::to_string(label) + ")" : ""),
                         at);
    }
    return {RotationSystem::from_rows(std::move(rows)), std::move(labels)};
}

std::string serialize(const RotationSystem& rs) {
    std::ostringstream out;
    out << "n " << rs.n() << "\n";
    for (Vertex v = 0; v < rs.n(); ++v) {
        out << v << ":";
        for (Vertex u : rs.rotation(v)) out << " " << u;
        out << "\n";
    }
    return out.str();
}

ParsedRotationSystem read_rotation_system_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rotation_system(buf.str());
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gtwist

#include "gtwist/geometry_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "gtwist/errors.hpp"

namespace gtwist {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Rat parse_rat(const std::string& tok, int line_no) {
    try {
        mpq_class q(tok, 10);
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + tok + "'", line_no);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("expected rational number, got '" + tok + "'", line_no);
    }
}

// Shared line-based reader: rows of (index, fields...).
struct TableReader {
    int n = -1;
    std::vector<std::vector<std::string>> rows;

    explicit TableReader(std::string_view text, size_t fields) {
        std::istringstream input{std::string(text)};
        std::string line;
        int line_no = 0;
        while (std::getline(input, line)) {
            ++line_no;
            if (is_blank_or_comment(line)) continue;
            std::istringstream iss(line);
            if (n < 0) {
                std::string word;
                iss >> word;
                if (word != "n" || !(iss >> n) || n < 3)
                    throw ParseError("expected header 'n <count>'", line_no);
                continue;
            }
            std::vector<std::string> toks;
            std::string tok;
            while (iss >> tok) toks.push_back(tok);
            if (toks.size() != fields + 1)
                throw ParseError("expected index and " + std::to_string(fields) + " values",
                                 line_no);
            int v;
            try {
                v = std::stoi(toks[0]);
            } catch (const std::exception&) {
                throw ParseError("bad vertex index '" + toks[0] + "'", line_no);
            }
            if (v != static_cast<int>(rows.size()))
                throw ParseError("vertex lines must be in order 0..n-1", line_no);
            toks.erase(toks.begin());
            rows.push_back(std::move(toks));
            line_nos.push_back(line_no);
        }
        if (n < 0) throw ParseError("missing header 'n <count>'", 0);
        if (static_cast<int>(rows.size()) != n)
            throw ParseError("expected " + std::to_string(n) + " vertex lines", 0);
    }

    std::vector<int> line_nos;
};

}  // namespace

std::string serialize_radial(const RadialDrawing& d) {
    std::ostringstream out;
    out << "# radial drawing: angles in turns (0,1), radii positive\n";
    out << "n " << d.n << "\n";
    for (int v = 0; v < d.n; ++v)
        out << v << " " << d.theta[v].get_str() << " " << d.rho[v].get_str() << "\n";
    return out.str();
}

RadialDrawing parse_radial(std::string_view text) {
    TableReader reader(text, 2);
    RadialDrawing d;
    d.n = reader.n;
    for (int v = 0; v < reader.n; ++v) {
        d.theta.push_back(parse_rat(reader.rows[v][0], reader.line_nos[v]));
        d.rho.push_back(parse_rat(reader.rows[v][1], reader.line_nos[v]));
    }
    try {
        validate_radial(d);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0);
    }
    return d;
}

std::string serialize_points(const PointSet& ps) {
    std::ostringstream out;
    out << "# point set, rational coordinates\n";
    out << "n " << ps.n() << "\n";
    for (int v = 0; v < ps.n(); ++v)
        out << v << " " << ps.pts[v].x.get_str() << " " << ps.pts[v].y.get_str() << "\n";
    return out.str();
}

PointSet parse_points(std::string_view text) {
    TableReader reader(text, 2);
    PointSet ps;
    for (int v = 0; v < reader.n; ++v)
        ps.pts.push_back({parse_rat(reader.rows[v][0], reader.line_nos[v]),
                          parse_rat(reader.rows[v][1], reader.line_nos[v])});
    try {
        require_general_position(ps);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0);
    }
    return ps;
}

}  // namespace gtwist

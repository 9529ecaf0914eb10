#include "hypermatch/hg_io.hpp"

#include <fstream>
#include <sstream>

#include "hypermatch/error.hpp"

namespace hypermatch {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    raise(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Hypergraph read_hg(std::istream& in) {
    std::string line;
    int line_no = 0;
    int k = -1, n = -1;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(body);
        if (k < 0) {
            if (!(ss >> k >> n)) parse_fail(line_no, "expected header `k n`");
            std::string extra;
            if (ss >> extra) parse_fail(line_no, "trailing tokens after header");
            if (k < 2 || n < k) parse_fail(line_no, "header requires k >= 2 and n >= k");
            continue;
        }
        std::vector<int> edge;
        int v;
        while (ss >> v) edge.push_back(v);
        if (!ss.eof()) parse_fail(line_no, "non-numeric vertex id");
        if (static_cast<int>(edge.size()) != k)
            parse_fail(line_no, "edge has " + std::to_string(edge.size()) +
                                    " vertices, expected " + std::to_string(k));
        for (int u : edge)
            if (u < 0 || u >= n)
                parse_fail(line_no, "vertex " + std::to_string(u) + " outside [0, n)");
        edges.push_back(std::move(edge));
    }
    if (k < 0) raise(ErrorKind::ParseError, "missing header `k n`");
    try {
        return Hypergraph::build(n, k, std::move(edges));
    } catch (const Error& e) {
        raise(ErrorKind::ParseError, std::string("invalid edge set: ") + e.what());
    }
}

Hypergraph read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::ParseError, "cannot open " + path);
    return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h,
              const std::string& header_comment) {
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    out << h.k() << " " << h.n() << "\n";
    for (EdgeId e = 0; e < static_cast<EdgeId>(h.m()); ++e) {
        auto row = h.edge(e);
        for (int i = 0; i < h.k(); ++i) {
            if (i) out << ' ';
            out << row[static_cast<size_t>(i)];
        }
        out << "\n";
    }
}

void write_hg_file(const std::string& path, const Hypergraph& h,
                   const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) raise(ErrorKind::ParseError, "cannot open " + path + " for writing");
    write_hg(out, h, header_comment);
}

} // namespace hypermatch

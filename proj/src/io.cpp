#include "glicci/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace glicci {

std::vector<std::vector<int>> sorted_vertex_lists(const std::vector<mask_t>& masks) {
    std::vector<std::vector<int>> lists;
    lists.reserve(masks.size());
    for (mask_t m : masks) lists.push_back(vertices_of_mask(m));
    std::sort(lists.begin(), lists.end());
    return lists;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<int> parse_int_line(const std::string& text, int line_no) {
    std::istringstream is(text);
    std::vector<int> out;
    int v;
    while (is >> v) out.push_back(v);
    if (!is.eof()) {
        std::string tail;
        is.clear();
        is >> tail;
        throw parse_error("line " + std::to_string(line_no) + ": unexpected token '" + tail +
                          "'");
    }
    return out;
}

}  // namespace

SimplicialComplex read_complex_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        std::istringstream is(body);
        if (n < 0) {
            std::string word;
            if (!(is >> word)) continue;  // blank or comment before the header
            long long value = 0;
            if (word != "n" || !(is >> value) || value < 0)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": expected header 'n <int>'");
            std::string tail;
            if (is >> tail)
                throw parse_error("line " + std::to_string(line_no) + ": trailing '" + tail +
                                  "' after header");
            n = static_cast<int>(value);
            continue;
        }
        std::vector<int> verts = parse_int_line(body, line_no);
        if (!verts.empty()) facets.push_back(std::move(verts));
    }
    if (n < 0) throw parse_error("missing 'n <int>' header");
    if (facets.empty()) facets.push_back({});  // the complex {∅}
    try {
        return SimplicialComplex::from_facets(n, facets);
    } catch (const vertex_out_of_range& e) {
        throw parse_error(std::string("bad facet: ") + e.what());
    }
}

void write_complex_text(std::ostream& out, const SimplicialComplex& dc) {
    out << "n " << dc.ground_set_size() << "\n";
    for (const auto& facet : sorted_vertex_lists(dc.facets())) {
        for (std::size_t i = 0; i < facet.size(); ++i)
            out << (i ? " " : "") << facet[i];
        if (!facet.empty()) out << "\n";
    }
}

nlohmann::json complex_to_json(const SimplicialComplex& dc) {
    return {{"n", dc.ground_set_size()},
            {"facets", nlohmann::json(sorted_vertex_lists(dc.facets()))}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    auto facets = j.at("facets").get<std::vector<std::vector<int>>>();
    return SimplicialComplex::from_facets(n, facets);
}

SquarefreeMonomialIdeal read_ideal_text(std::istream& in, int n_vars) {
    std::string line;
    int line_no = 0;
    std::vector<std::vector<int>> gens;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<int> verts = parse_int_line(strip_comment(line), line_no);
        if (!verts.empty()) gens.push_back(std::move(verts));
    }
    return SquarefreeMonomialIdeal::from_generators(n_vars, gens);
}

void write_ideal_text(std::ostream& out, const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_unit()) throw unit_ideal("the unit ideal has no text form");
    for (const auto& g : sorted_vertex_lists(ideal.gens)) {
        for (std::size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << g[i];
        out << "\n";
    }
}

nlohmann::json ideal_to_json(const SquarefreeMonomialIdeal& ideal) {
    return {{"n", ideal.n}, {"gens", nlohmann::json(sorted_vertex_lists(ideal.gens))}};
}

SquarefreeMonomialIdeal ideal_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    auto gens = j.at("gens").get<std::vector<std::vector<int>>>();
    return SquarefreeMonomialIdeal::from_generators(n, gens);
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw parse_error("bad JSON in '" + path + "': " + e.what());
        }
        return complex_from_json(j);
    }
    return read_complex_text(in);
}

}  // namespace glicci

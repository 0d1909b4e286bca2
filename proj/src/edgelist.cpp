#include "tdc/edgelist.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tdc {

Graph parse_edge_list(std::istream& in, bool one_indexed) {
    std::vector<std::pair<int, int>> edges;
    int declared_order = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "order") {
            if (!(ls >> declared_order) || declared_order < 0)
                throw std::invalid_argument("bad order header at line " +
                                            std::to_string(lineno));
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad vertex token at line " +
                                        std::to_string(lineno));
        }
        if (!(ls >> v))
            throw std::invalid_argument("missing edge endpoint at line " +
                                        std::to_string(lineno));
        if (one_indexed) {
            --u;
            --v;
        }
        if (u < 0 || v < 0)
            throw std::invalid_argument("negative vertex at line " +
                                        std::to_string(lineno));
        if (declared_order >= 0 && (u >= declared_order || v >= declared_order))
            throw std::invalid_argument("vertex exceeds declared order at line " +
                                        std::to_string(lineno));
        edges.emplace_back(u, v);
    }

    int order = declared_order;
    for (auto [u, v] : edges) order = std::max({order, u + 1, v + 1});
    if (order < 0) order = 0;

    GraphBuilder b(order);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph parse_edge_list_file(const std::string& path, bool one_indexed) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in, one_indexed);
}

void write_edge_list(std::ostream& out, const Graph& g, bool one_indexed) {
    int shift = one_indexed ? 1 : 0;
    out << "order " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u + shift << " " << v + shift << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g,
                          bool one_indexed) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_edge_list(out, g, one_indexed);
}

} // namespace tdc

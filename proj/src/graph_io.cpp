#include "nbhd/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "nbhd/errors.hpp"

namespace nbhd {

std::string graph_to_json(const Graph & g)
{
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        nlohmann::ordered_json labels = nlohmann::ordered_json::object();
        for (const auto & [v, name] : g.labels())
            labels[std::to_string(v)] = name;
        j["labels"] = std::move(labels);
    }
    return j.dump();
}

Graph graph_from_json(const std::string & text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error & e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("graph JSON: missing integer field \"n\"");
    long long n = j["n"].get<long long>();
    if (n < 0 || n > 1 << 20)
        throw ParseError("graph JSON: vertex count out of range");
    Graph g(static_cast<int>(n));
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw ParseError("graph JSON: \"edges\" must be an array");
        for (const auto & e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError("graph JSON: each edge must be a pair of integers");
            long long u = e[0].get<long long>(), v = e[1].get<long long>();
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError("graph JSON: bad edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_object())
            throw ParseError("graph JSON: \"labels\" must be an object");
        for (const auto & [key, value] : j["labels"].items()) {
            int v = -1;
            try {
                std::size_t used = 0;
                v = std::stoi(key, &used);
                if (used != key.size())
                    v = -1;
            } catch (const std::exception &) {
            }
            if (v < 0 || v >= n || !value.is_string())
                throw ParseError("graph JSON: bad label entry \"" + key + "\"");
            g.set_label(v, value.get<std::string>());
        }
    }
    return g;
}

std::string graph_to_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_edge_list(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag))
            continue;
        std::string extra;
        if (tag == "n") {
            long long n;
            if (g)
                throw ParseError("duplicate vertex-count line", line_no);
            if (!(fields >> n) || (fields >> extra) || n < 0 || n > 1 << 20)
                throw ParseError("expected \"n <count>\"", line_no);
            g.emplace(static_cast<int>(n));
        } else if (tag == "e") {
            long long u, v;
            if (!g)
                throw ParseError("edge before the \"n <count>\" line", line_no);
            if (!(fields >> u >> v) || (fields >> extra))
                throw ParseError("expected \"e <u> <v>\"", line_no);
            if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
                throw ParseError("edge endpoint out of range", line_no);
            if (u == v)
                throw ParseError("self-loop", line_no);
            g->add_edge(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw ParseError("unknown record \"" + tag + "\"", line_no);
        }
    }
    if (!g)
        throw ParseError("missing \"n <count>\" line");
    return *g;
}

Graph parse_graph(const std::string & text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(text);
    return graph_from_edge_list(text);
}

std::string read_text_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph read_graph_file(const std::string & path)
{
    return parse_graph(read_text_file(path));
}

} // namespace nbhd

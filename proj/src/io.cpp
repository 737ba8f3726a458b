#include "rainbow/io.hpp"

#include <fstream>
#include <iterator>

namespace rainbow::io {

json read_json(std::istream& in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return read_json(in);
}

namespace {

    template <typename T>
    T field(const json& j, const char* name)
    {
        if (!j.is_object() || !j.contains(name))
            throw InputError(std::string("missing field '") + name + "'");
        try {
            return j.at(name).get<T>();
        }
        catch (const json::exception& e) {
            throw InputError(std::string("bad field '") + name + "': " + e.what());
        }
    }

    std::vector<Vertex> vertex_list(const json& j)
    {
        if (!j.is_array())
            throw InputError("expected an array of vertex ids");
        std::vector<Vertex> out;
        for (const auto& v : j) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw InputError("vertex ids must be non-negative integers");
            out.push_back(v.get<Vertex>());
        }
        return out;
    }

    std::vector<Edge> edge_list(const json& j, bool normalize)
    {
        if (!j.is_array())
            throw InputError("'edges' must be an array");
        std::vector<Edge> out;
        out.reserve(j.size());
        for (const auto& e : j)
            out.push_back(edge_from_json(e, normalize));
        return out;
    }

} // namespace

json to_json(const Edge& e) { return json(std::vector<Vertex>(e.begin(), e.end())); }

Edge edge_from_json(const json& j, bool normalize)
{
    auto v = vertex_list(j);
    return normalize ? Edge::from_unsorted(v) : Edge::from_sorted(v);
}

json to_json(const Hypergraph& h)
{
    json edges = json::array();
    for (const auto& e : h.edges())
        edges.push_back(to_json(e));
    return json{{"k", h.k()}, {"n", h.n()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const json& j, bool normalize)
{
    auto k = field<std::size_t>(j, "k");
    auto n = field<std::size_t>(j, "n");
    if (!j.contains("edges"))
        throw InputError("missing field 'edges'");
    return Hypergraph(k, n, edge_list(j.at("edges"), normalize), normalize);
}

json to_json(const HypergraphFamily& f)
{
    json members = json::array();
    for (const auto& m : f.members())
        members.push_back(to_json(m));
    return json{{"n", f.n()}, {"members", std::move(members)}};
}

HypergraphFamily family_from_json(const json& j, bool normalize)
{
    auto n = field<std::size_t>(j, "n");
    if (!j.contains("members") || !j.at("members").is_array())
        throw InputError("missing array field 'members'");
    std::vector<Hypergraph> members;
    for (const auto& m : j.at("members"))
        members.push_back(hypergraph_from_json(m, normalize));
    return HypergraphFamily(n, std::move(members));
}

json to_json(const PartiteHypergraph& h)
{
    json out = to_json(h.graph());
    out["q"] = h.q_size();
    out["p"] = h.p_size();
    return out;
}

PartiteHypergraph partite_from_json(const json& j, bool normalize)
{
    auto q = field<std::size_t>(j, "q");
    auto p = field<std::size_t>(j, "p");
    auto g = hypergraph_from_json(j, normalize);
    if (g.k() != 4)
        throw InputError("partite graph must have k = 4");
    return PartiteHypergraph(q, p, std::move(g));
}

json to_json(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

VertexSet vertex_set_from_json(const json& j)
{
    if (j.is_object() && j.contains("vertices"))
        return VertexSet(vertex_list(j.at("vertices")));
    return VertexSet(vertex_list(j));
}

json to_json(const Matching& m)
{
    json out = json::array();
    for (const auto& e : m.edges)
        out.push_back(to_json(e));
    return out;
}

json to_json(const RainbowMatching& m)
{
    json out = json::array();
    for (const auto& pair : m.pairs)
        out.push_back(to_json(pair.edge));
    return out;
}

json to_json(const DegreeSumStats& s)
{
    auto opt = [](const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); };
    return json{{"sigma2", opt(s.sigma2)}, {"sigma2_prime", opt(s.sigma2_prime)},
                {"sigma2_dprime", opt(s.sigma2_dprime)}};
}

json to_json(const FractionalMatching& q)
{
    json out = json::array();
    for (const auto& [edge, w] : q.weights)
        out.push_back(json{{"edge", to_json(edge)}, {"weight", to_string(w)}});
    return out;
}

json to_json(const FractionalCover& p)
{
    json out = json::array();
    for (const auto& w : p.weights)
        out.push_back(to_string(w));
    return out;
}

json to_json(const ShiftTrace& t)
{
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back(json{{"ranks", {s.q_rank, s.j_rank, s.k_rank}},
                             {"u", s.u},
                             {"v", {s.v_j, s.v_k}},
                             {"removed", s.removed}});
    return steps;
}

json to_json(const AbsorberGadget& g)
{
    return json{{"target", to_json(g.target.all())},
                {"body", to_json(g.body.all())},
                {"pm_t", to_json(g.pm_t)},
                {"pm_at", to_json(g.pm_at)}};
}

} // namespace rainbow::io

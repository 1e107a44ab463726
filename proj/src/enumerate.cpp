#include <ngc/enumerate.hpp>

#include <iterator>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace ngc {

namespace {

struct Search {
    const TypedGraph& pattern;
    const TypedGraph& host;
    GraphPtr pattern_ptr;
    GraphPtr host_ptr;
    std::vector<std::string> pattern_nodes; // sorted
    std::vector<std::string> pattern_edges; // sorted
    std::map<std::string, std::string> node_img;
    std::map<std::string, std::string> edge_img;
    std::set<std::string> used_nodes;
    std::set<std::string> used_edges;
    std::vector<GraphMorphism> out;

    void emit() {
        GraphMorphism f;
        f.domain = pattern_ptr;
        f.codomain = host_ptr;
        f.node_map = node_img;
        f.edge_map = edge_img;
        out.push_back(std::move(f));
    }

    void assign_edges(std::size_t k) {
        if (k == pattern_edges.size()) {
            emit();
            return;
        }
        const auto& id = pattern_edges[k];
        const Edge& e = pattern.edges.at(id);
        auto pre = edge_img.find(id);
        if (pre != edge_img.end()) {
            // Forced: the image must connect the mapped endpoints.
            const Edge& img = host.edges.at(pre->second);
            if (img.type == e.type && img.src == node_img.at(e.src) && img.tar == node_img.at(e.tar))
                assign_edges(k + 1);
            return;
        }
        const std::string& src = node_img.at(e.src);
        const std::string& tar = node_img.at(e.tar);
        for (const auto& [hid, he] : host.edges) {
            if (he.type != e.type || he.src != src || he.tar != tar)
                continue;
            if (used_edges.count(hid))
                continue;
            edge_img[id] = hid;
            used_edges.insert(hid);
            assign_edges(k + 1);
            used_edges.erase(hid);
            edge_img.erase(id);
        }
    }

    void assign_nodes(std::size_t k) {
        if (k == pattern_nodes.size()) {
            assign_edges(0);
            return;
        }
        const auto& id = pattern_nodes[k];
        if (node_img.count(id)) {
            assign_nodes(k + 1);
            return;
        }
        const std::string& type = pattern.nodes.at(id);
        for (const auto& [hid, htype] : host.nodes) {
            if (htype != type || used_nodes.count(hid))
                continue;
            node_img[id] = hid;
            used_nodes.insert(hid);
            assign_nodes(k + 1);
            used_nodes.erase(hid);
            node_img.erase(id);
        }
    }
};

// Seeds the search with the forced assignment; nullopt means nothing can
// extend it (wrong types, duplicate images, or inconsistent endpoints).
std::optional<Search> prepare(const GraphPtr& pattern, const GraphPtr& host,
                              const ForcedAssignment& forced) {
    if (!pattern || !host)
        throw std::invalid_argument("enumerate_injective_morphisms: missing pattern or host");
    if (!type_graph_equal(pattern->type_graph, host->type_graph))
        throw std::invalid_argument("enumerate_injective_morphisms: pattern and host use different type graphs");

    Search s{*pattern, *host, pattern, host, {}, {}, {}, {}, {}, {}, {}};
    for (const auto& [id, type] : pattern->nodes) {
        (void)type;
        s.pattern_nodes.push_back(id);
    }
    for (const auto& [id, e] : pattern->edges) {
        (void)e;
        s.pattern_edges.push_back(id);
    }

    std::map<std::string, std::string> node_forced = forced.node_map;
    for (const auto& [id, img] : forced.edge_map) {
        auto de = pattern->edges.find(id);
        if (de == pattern->edges.end())
            throw std::invalid_argument("enumerate_injective_morphisms: unknown forced edge '" + id + "'");
        auto he = host->edges.find(img);
        if (he == host->edges.end())
            throw std::invalid_argument("enumerate_injective_morphisms: unknown forced edge image '" + img + "'");
        if (he->second.type != de->second.type)
            return std::nullopt;
        // An edge image pins down both endpoint images.
        for (auto [dn, hn] : {std::pair{de->second.src, he->second.src},
                              std::pair{de->second.tar, he->second.tar}}) {
            auto ins = node_forced.emplace(dn, hn);
            if (!ins.second && ins.first->second != hn)
                return std::nullopt;
        }
        if (!s.edge_img.emplace(id, img).second)
            return std::nullopt;
        if (!s.used_edges.insert(img).second)
            return std::nullopt;
    }
    for (const auto& [id, img] : node_forced) {
        auto dn = pattern->nodes.find(id);
        if (dn == pattern->nodes.end())
            throw std::invalid_argument("enumerate_injective_morphisms: unknown forced node '" + id + "'");
        auto hn = host->nodes.find(img);
        if (hn == host->nodes.end())
            throw std::invalid_argument("enumerate_injective_morphisms: unknown forced node image '" + img + "'");
        if (hn->second != dn->second)
            return std::nullopt;
        s.node_img.emplace(id, img);
        if (!s.used_nodes.insert(img).second)
            return std::nullopt;
    }
    return s;
}

} // namespace

std::vector<GraphMorphism> enumerate_injective_morphisms_serial(const GraphPtr& pattern,
                                                                const GraphPtr& host,
                                                                const ForcedAssignment& forced) {
    auto search = prepare(pattern, host, forced);
    if (!search)
        return {};
    search->assign_nodes(0);
    return std::move(search->out);
}

std::vector<GraphMorphism> enumerate_injective_morphisms(const GraphPtr& pattern,
                                                         const GraphPtr& host,
                                                         const ForcedAssignment& forced) {
#if defined(_OPENMP)
    auto search = prepare(pattern, host, forced);
    if (!search)
        return {};

    // Split on the first unassigned pattern node; only worth it when the host
    // offers real work per branch.
    const std::string* split = nullptr;
    for (const auto& id : search->pattern_nodes) {
        if (!search->node_img.count(id)) {
            split = &id;
            break;
        }
    }
    constexpr std::size_t min_host_size = 24;
    constexpr std::size_t min_candidates = 2;
    if (split == nullptr || graph_size(*host) < min_host_size)
        return enumerate_injective_morphisms_serial(pattern, host, forced);

    const std::string& type = pattern->nodes.at(*split);
    std::vector<std::string> candidates;
    for (const auto& [hid, htype] : host->nodes) {
        if (htype == type && !search->used_nodes.count(hid))
            candidates.push_back(hid);
    }
    if (candidates.size() < min_candidates)
        return enumerate_injective_morphisms_serial(pattern, host, forced);

    std::vector<std::vector<GraphMorphism>> chunks(candidates.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        ForcedAssignment sub = forced;
        sub.node_map[*split] = candidates[i];
        chunks[i] = enumerate_injective_morphisms_serial(pattern, host, sub);
    }

    // Candidates ascend, so in-order concatenation equals the serial order.
    std::vector<GraphMorphism> out;
    for (auto& chunk : chunks)
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    return out;
#else
    return enumerate_injective_morphisms_serial(pattern, host, forced);
#endif
}

} // namespace ngc

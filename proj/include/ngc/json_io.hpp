// JSON reading and writing for graphs, subgraphs, conditions, normal forms,
// and assignment instances.
//
// Parsers are structural: they build values from well-shaped JSON and leave
// semantic checking to the validate functions, so a broken file can still be
// loaded and reported on. Printers emit canonical output: sorted IDs,
// explicit morphism maps, and alphabetical object keys.

#pragma once

#include <string>

#include <json.hpp>

#include <ngc/cra.hpp>
#include <ngc/flatten.hpp>

namespace ngc {

using Json = nlohmann::json;

Json to_json(const TypeGraph& tg);
TypeGraph type_graph_from_json(const Json& j);

// Standalone graph files embed their type graph; graphs nested inside
// condition files reuse the enclosing one.
Json to_json(const TypedGraph& g);
TypedGraph graph_from_json(const Json& j);
TypedGraph graph_from_json(const Json& j, TypeGraphPtr tg);

Json to_json(const SubgraphRef& s);
SubgraphRef subgraph_from_json(const Json& j, GraphPtr container);

Json to_json(const GraphCondition& c);
GraphCondition graph_condition_from_json(const Json& j);

Json to_json(const SubCondition& c);
SubCondition sub_condition_from_json(const Json& j, GraphPtr container);

Json to_json(const NormalizeResult& r);

Json to_json(const CraInstance& instance);
CraInstance instance_from_json(const Json& j);

// dump with two-space indent plus a trailing newline.
std::string pretty(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace ngc

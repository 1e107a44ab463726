// Command-line surface: validation, evaluation, flattening, normalization,
// instantiation, enumeration, and the assignment-model corpus generator.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ngc/instantiate.hpp>
#include <ngc/json_io.hpp>
#include <ngc/satisfaction.hpp>

namespace {

using namespace ngc;

// Exit codes: 0 ok, 1 property violated, 2 input error, 3 route disagreement.
constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;
constexpr int kDisagreement = 3;

GraphPtr load_container(const std::string& path) {
    auto g = std::make_shared<const TypedGraph>(graph_from_json(load_json_file(path)));
    auto report = validate_typed_graph(*g);
    if (!report.ok())
        throw std::invalid_argument("container '" + path + "': " + report.violations.front());
    return g;
}

enum class FileKind { TypeGraph, Graph, Subgraph, TgCondition, SubCondition, Instance };

FileKind sniff(const Json& j) {
    if (j.contains("category"))
        return j.at("category").get<std::string>() == "sub" ? FileKind::SubCondition
                                                            : FileKind::TgCondition;
    if (j.contains("methods") || j.contains("attributes") || j.contains("dataDeps"))
        return FileKind::Instance;
    if (j.contains("typegraph"))
        return FileKind::Graph;
    if (j.contains("nodeTypes") || j.contains("edgeTypes"))
        return FileKind::TypeGraph;
    return FileKind::Subgraph;
}

GraphPtr require_container(const std::string& path, const char* why) {
    if (path.empty())
        throw std::invalid_argument(std::string("--container is required ") + why);
    return load_container(path);
}

std::string id_set(const std::vector<std::string>& nodes, const std::vector<std::string>& edges) {
    std::string out = "{";
    bool first = true;
    for (const auto& id : nodes) {
        out += (first ? "" : ", ") + id;
        first = false;
    }
    if (!edges.empty()) {
        out += "; ";
        first = true;
        for (const auto& id : edges) {
            out += (first ? "" : ", ") + id;
            first = false;
        }
    }
    return out + "}";
}

std::string subgraph_ids(const SubgraphRef& s) {
    return id_set(s.node_ids, s.edge_ids);
}

std::string morphism_image_ids(const GraphMorphism& q) {
    std::vector<std::string> nodes, edges;
    for (const auto& [id, img] : q.node_map) {
        (void)id;
        nodes.push_back(img);
    }
    for (const auto& [id, img] : q.edge_map) {
        (void)id;
        edges.push_back(img);
    }
    std::sort(nodes.begin(), nodes.end());
    std::sort(edges.begin(), edges.end());
    return id_set(nodes, edges);
}

// Decisive-path trace: one line per step explaining the verdict.
void trace_tg(const GraphMorphism& g, const GraphCondition& c, std::string indent,
              std::vector<std::string>& lines);

void trace_tg_quantifier(const GraphMorphism& g, const GraphCondition& c, std::string indent,
                         std::vector<std::string>& lines) {
    const GraphMorphism& a = *c.morphism;
    ForcedAssignment forced;
    for (const auto& [x, img] : a.node_map)
        forced.node_map[img] = g.node_map.at(x);
    for (const auto& [x, img] : a.edge_map)
        forced.edge_map[img] = g.edge_map.at(x);
    auto witnesses = enumerate_injective_morphisms(a.codomain, g.codomain, forced);
    bool universal = c.op == CondOp::Forall;
    for (const auto& q : witnesses) {
        bool sat = satisfies(q, c.children.front());
        if (!universal && sat) {
            lines.push_back(indent + "witness " + morphism_image_ids(q));
            trace_tg(q, c.children.front(), indent + "  ", lines);
            return;
        }
        if (universal && !sat) {
            lines.push_back(indent + "counter-witness " + morphism_image_ids(q));
            trace_tg(q, c.children.front(), indent + "  ", lines);
            return;
        }
    }
    if (!universal)
        lines.push_back(indent + (witnesses.empty() ? "no occurrence extends the context"
                                                    : "no occurrence satisfies the body"));
    else
        lines.push_back(indent + "all " + std::to_string(witnesses.size()) + " occurrences satisfy the body");
}

void trace_tg(const GraphMorphism& g, const GraphCondition& c, std::string indent,
              std::vector<std::string>& lines) {
    switch (c.op) {
    case CondOp::True:
    case CondOp::False:
        return;
    case CondOp::Not:
        return trace_tg(g, c.children.front(), indent, lines);
    case CondOp::And:
    case CondOp::Or: {
        bool conjunction = c.op == CondOp::And;
        for (std::size_t i = 0; i < c.children.size(); ++i) {
            bool sat = satisfies(g, c.children[i]);
            if (sat != conjunction) {
                lines.push_back(indent + (conjunction ? "conjunct " : "disjunct ") +
                                std::to_string(i) + (sat ? " holds" : " fails"));
                return trace_tg(g, c.children[i], indent + "  ", lines);
            }
        }
        lines.push_back(indent + (conjunction ? "all conjuncts hold" : "no disjunct holds"));
        return;
    }
    case CondOp::Implies: {
        bool premise = satisfies(g, c.children.front());
        lines.push_back(indent + (premise ? "premise holds" : "premise fails"));
        if (premise)
            return trace_tg(g, c.children.back(), indent + "  ", lines);
        return;
    }
    case CondOp::Exists:
    case CondOp::Forall:
        return trace_tg_quantifier(g, c, indent, lines);
    }
}

void trace_sub(const Inclusion& g, const SubCondition& c, std::string indent,
               std::vector<std::string>& lines) {
    switch (c.op) {
    case CondOp::True:
    case CondOp::False:
        return;
    case CondOp::Not:
        return trace_sub(g, c.children.front(), indent, lines);
    case CondOp::And:
    case CondOp::Or: {
        bool conjunction = c.op == CondOp::And;
        for (std::size_t i = 0; i < c.children.size(); ++i) {
            bool sat = satisfies_sub(g, c.children[i]);
            if (sat != conjunction) {
                lines.push_back(indent + (conjunction ? "conjunct " : "disjunct ") +
                                std::to_string(i) + (sat ? " holds" : " fails"));
                return trace_sub(g, c.children[i], indent + "  ", lines);
            }
        }
        lines.push_back(indent + (conjunction ? "all conjuncts hold" : "no disjunct holds"));
        return;
    }
    case CondOp::Implies: {
        bool premise = satisfies_sub(g, c.children.front());
        lines.push_back(indent + (premise ? "premise holds" : "premise fails"));
        if (premise)
            return trace_sub(g, c.children.back(), indent + "  ", lines);
        return;
    }
    case CondOp::Exists:
    case CondOp::Forall: {
        const SubgraphRef& b1 = morphism_codomain(*c.morphism);
        if (!is_subgraph(b1, g.codomain)) {
            lines.push_back(indent + "codomain " + subgraph_ids(b1) + " is absent");
            return;
        }
        lines.push_back(indent + "codomain " + subgraph_ids(b1) + " is present");
        return trace_sub(Inclusion{b1, g.codomain}, c.children.front(), indent + "  ", lines);
    }
    }
}

struct Options {
    std::string file;
    std::string second_file;
    std::string container_path;
    std::string category;
    std::string form = "cnf";
    std::string out_dir = ".";
    bool no_simplify = false;
    bool then_normalize = false;
    bool with_attribute_lower_bound = false;
};

int run_validate(const Options& opt) {
    Json j = load_json_file(opt.file);
    ValidationReport report;
    switch (sniff(j)) {
    case FileKind::TypeGraph:
        report = validate_type_graph(type_graph_from_json(j));
        break;
    case FileKind::Graph:
        report = validate_typed_graph(graph_from_json(j));
        break;
    case FileKind::Subgraph: {
        auto container = require_container(opt.container_path, "to validate a subgraph");
        report = validate_subgraph(subgraph_from_json(j, container));
        break;
    }
    case FileKind::TgCondition:
        report = validate_condition(graph_condition_from_json(j));
        break;
    case FileKind::SubCondition: {
        auto container = require_container(opt.container_path, "to validate a subgraph condition");
        report = validate_condition(sub_condition_from_json(j, container));
        break;
    }
    case FileKind::Instance:
        report = validate_instance(instance_from_json(j));
        break;
    }
    if (report.ok()) {
        std::cout << "ok\n";
        return kOk;
    }
    for (const auto& v : report.violations)
        std::cout << v << "\n";
    return kViolated;
}

int run_nl(const Options& opt) {
    Json j = load_json_file(opt.file);
    std::size_t level = 0;
    if (sniff(j) == FileKind::SubCondition) {
        auto container = require_container(opt.container_path, "for a subgraph condition");
        level = nesting_level(sub_condition_from_json(j, container));
    } else {
        level = nesting_level(graph_condition_from_json(j));
    }
    std::cout << level << "\n";
    return kOk;
}

void require_valid_condition(const ValidationReport& report) {
    if (!report.ok())
        throw std::invalid_argument("condition does not validate: " + report.violations.front());
}

int run_satisfy(const Options& opt) {
    Json cj = load_json_file(opt.second_file);
    auto kind = sniff(cj);
    if (!opt.category.empty()) {
        FileKind forced = opt.category == "sub" ? FileKind::SubCondition : FileKind::TgCondition;
        if (forced != kind)
            throw std::invalid_argument("condition file category does not match --category");
    }
    bool sat = false;
    std::vector<std::string> lines;
    if (kind == FileKind::TgCondition) {
        GraphCondition c = graph_condition_from_json(cj);
        require_valid_condition(validate_condition(c));
        Json gj = load_json_file(opt.file);
        GraphPtr g;
        if (sniff(gj) == FileKind::Subgraph) {
            // A subgraph file works here too: evaluate on its materialization.
            auto container = require_container(opt.container_path, "to evaluate a subgraph file");
            g = materialize_ptr(subgraph_from_json(gj, container));
        } else {
            g = std::make_shared<const TypedGraph>(graph_from_json(gj));
        }
        auto greport = validate_typed_graph(*g);
        if (!greport.ok())
            throw std::invalid_argument("graph does not validate: " + greport.violations.front());
        sat = satisfies_constraint(g, c);
        GraphMorphism initial;
        initial.domain = c.root;
        initial.codomain = g;
        trace_tg(initial, c, "  ", lines);
    } else if (kind == FileKind::SubCondition) {
        auto container = require_container(opt.container_path, "for a subgraph condition");
        SubCondition c = sub_condition_from_json(cj, container);
        require_valid_condition(validate_condition(c));
        SubgraphRef s = subgraph_from_json(load_json_file(opt.file), container);
        auto sreport = validate_subgraph(s);
        if (!sreport.ok())
            throw std::invalid_argument("subgraph does not validate: " + sreport.violations.front());
        if (!is_subgraph(c.root, s))
            throw std::invalid_argument("the condition's root is not contained in the given subgraph");
        Inclusion g{c.root, s};
        sat = satisfies_sub(g, c);
        trace_sub(g, c, "  ", lines);
    } else {
        throw std::invalid_argument("second argument must be a condition file");
    }
    std::cout << (sat ? "true" : "false") << "\n";
    for (const auto& line : lines)
        std::cout << line << "\n";
    return sat ? kOk : kViolated;
}

int run_flatten(const Options& opt) {
    Json j = load_json_file(opt.file);
    if (sniff(j) != FileKind::SubCondition)
        throw std::invalid_argument("flatten expects a subgraph condition (category 'sub')");
    auto container = require_container(opt.container_path, "to flatten");
    SubCondition c = sub_condition_from_json(j, container);
    require_valid_condition(validate_condition(c));
    SubCondition flat = flatten(identity_inclusion(c.root), desugar(c));
    if (!opt.no_simplify)
        flat = simplify(flat);
    std::cout << pretty(to_json(flat));
    return kOk;
}

int run_normalize(const Options& opt) {
    Json j = load_json_file(opt.file);
    if (sniff(j) != FileKind::SubCondition)
        throw std::invalid_argument("normalize expects a subgraph condition (category 'sub')");
    auto container = require_container(opt.container_path, "to normalize");
    SubCondition c = sub_condition_from_json(j, container);
    NormalForm form = opt.form == "dnf" ? NormalForm::Dnf : NormalForm::Cnf;
    std::cout << pretty(to_json(normalize(c, form)));
    return kOk;
}

int run_instantiate(const Options& opt) {
    Json j = load_json_file(opt.file);
    if (sniff(j) != FileKind::TgCondition)
        throw std::invalid_argument("instantiate expects a typed-graph condition (category 'tg')");
    GraphCondition c = graph_condition_from_json(j);
    require_valid_condition(validate_condition(c));
    auto container = require_container(opt.container_path, "to instantiate");
    SubCondition inst = instantiate_constraint(c, container);
    if (opt.then_normalize)
        std::cout << pretty(to_json(normalize(inst)));
    else
        std::cout << pretty(to_json(inst));
    return kOk;
}

int run_enumerate(const Options& opt) {
    auto pattern = std::make_shared<const TypedGraph>(graph_from_json(load_json_file(opt.file)));
    auto host = std::make_shared<const TypedGraph>(graph_from_json(load_json_file(opt.second_file)));
    for (const auto* g : {pattern.get(), host.get()}) {
        auto report = validate_typed_graph(*g);
        if (!report.ok())
            throw std::invalid_argument("graph does not validate: " + report.violations.front());
    }
    auto morphisms = enumerate_injective_morphisms(pattern, host);
    std::cout << morphisms.size() << " morphisms\n";
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
        std::cout << i << ":";
        for (const auto& [x, y] : morphisms[i].node_map)
            std::cout << " " << x << "->" << y;
        for (const auto& [x, y] : morphisms[i].edge_map)
            std::cout << " " << x << "->" << y;
        std::cout << "\n";
    }
    return kOk;
}

int run_cra_gen(const Options& opt) {
    CraInstance instance = instance_from_json(load_json_file(opt.file));
    CraContainer corpus = build_cra_container(instance);
    std::string dir = opt.out_dir;
    if (!dir.empty())
        std::filesystem::create_directories(dir);
    if (!dir.empty() && dir.back() != '/')
        dir += '/';
    auto emit = [&](const std::string& name, const Json& j) {
        write_text_file(dir + name, pretty(j));
        std::cout << dir + name << "\n";
    };
    emit("container.json", to_json(*corpus.container));
    emit("problem-part.json", to_json(corpus.problem_part));
    for (const auto& [name, condition] : builtin_constraints(opt.with_attribute_lower_bound))
        emit("constraint-" + name + ".json", to_json(condition));
    return kOk;
}

int run_check(const Options& opt) {
    CraInstance instance = instance_from_json(load_json_file(opt.second_file));
    CraContainer corpus = build_cra_container(instance);
    SubgraphRef solution = subgraph_from_json(load_json_file(opt.file), corpus.container);
    auto sreport = validate_subgraph(solution);
    if (!sreport.ok())
        throw std::invalid_argument("solution does not validate: " + sreport.violations.front());

    auto constraints = builtin_constraints(opt.with_attribute_lower_bound);
    GraphPtr solution_graph = materialize_ptr(solution);
    Inclusion initial{empty_subgraph(corpus.container), solution};

    struct Row {
        bool direct = false;
        bool instantiated = false;
    };
    std::vector<Row> rows(constraints.size());
    // The two routes per constraint are independent.
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const GraphCondition& c = constraints[i].condition;
        rows[i].direct = satisfies_constraint(solution_graph, c);
        NormalizeResult nres = normalize(instantiate_constraint(c, corpus.container));
        rows[i].instantiated = satisfies_sub(initial, to_condition(nres.nf));
    }

    bool all_pass = true;
    bool agree = true;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        bool row_agrees = rows[i].direct == rows[i].instantiated;
        std::cout << constraints[i].name << ": direct=" << (rows[i].direct ? "pass" : "fail")
                  << " instantiated=" << (rows[i].instantiated ? "pass" : "fail")
                  << (row_agrees ? "" : " DISAGREEMENT") << "\n";
        all_pass = all_pass && rows[i].direct && rows[i].instantiated;
        agree = agree && row_agrees;
    }
    if (!agree) {
        std::cerr << "error: evaluation routes disagree\n";
        return kDisagreement;
    }
    return all_pass ? kOk : kViolated;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nested graph conditions over typed graphs and subgraph lattices"};
    app.require_subcommand(1);
    Options opt;

    auto* validate = app.add_subcommand("validate", "validate a graph, subgraph, condition, or instance file");
    validate->add_option("file", opt.file)->required();
    validate->add_option("--container", opt.container_path, "container graph file");

    auto* nl = app.add_subcommand("nl", "print the nesting level of a condition");
    nl->add_option("file", opt.file)->required();
    nl->add_option("--container", opt.container_path);

    auto* satisfy = app.add_subcommand("satisfy", "evaluate a condition against a graph or subgraph");
    satisfy->add_option("graph", opt.file)->required();
    satisfy->add_option("condition", opt.second_file)->required();
    satisfy->add_option("--category", opt.category)->check(CLI::IsMember({"tg", "sub"}));
    satisfy->add_option("--container", opt.container_path);

    auto* flatten_cmd = app.add_subcommand("flatten", "flatten a subgraph condition to nesting level one");
    flatten_cmd->add_option("file", opt.file)->required();
    flatten_cmd->add_option("--container", opt.container_path);
    flatten_cmd->add_flag("--no-simplify", opt.no_simplify);

    auto* normalize_cmd = app.add_subcommand("normalize", "flatten and convert to a classified normal form");
    normalize_cmd->add_option("file", opt.file)->required();
    normalize_cmd->add_option("--container", opt.container_path);
    normalize_cmd->add_option("--form", opt.form)->check(CLI::IsMember({"cnf", "dnf"}));

    auto* instantiate_cmd = app.add_subcommand("instantiate", "translate a typed-graph constraint into the subgraph lattice");
    instantiate_cmd->add_option("file", opt.file)->required();
    instantiate_cmd->add_option("--container", opt.container_path);
    instantiate_cmd->add_flag("--then-normalize", opt.then_normalize);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list all injective morphisms pattern -> host");
    enumerate_cmd->add_option("pattern", opt.file)->required();
    enumerate_cmd->add_option("host", opt.second_file)->required();

    auto* cra_gen = app.add_subcommand("cra-gen", "generate the assignment corpus from an instance file");
    cra_gen->add_option("file", opt.file)->required();
    cra_gen->add_option("--out", opt.out_dir, "output directory");
    cra_gen->add_flag("--with-attribute-lower-bound", opt.with_attribute_lower_bound);

    auto* check = app.add_subcommand("check", "evaluate the built-in constraints on a solution via both routes");
    check->add_option("solution", opt.file)->required();
    check->add_option("instance", opt.second_file)->required();
    check->add_flag("--with-attribute-lower-bound", opt.with_attribute_lower_bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (app.got_subcommand(validate))
            return run_validate(opt);
        if (app.got_subcommand(nl))
            return run_nl(opt);
        if (app.got_subcommand(satisfy))
            return run_satisfy(opt);
        if (app.got_subcommand(flatten_cmd))
            return run_flatten(opt);
        if (app.got_subcommand(normalize_cmd))
            return run_normalize(opt);
        if (app.got_subcommand(instantiate_cmd))
            return run_instantiate(opt);
        if (app.got_subcommand(enumerate_cmd))
            return run_enumerate(opt);
        if (app.got_subcommand(cra_gen))
            return run_cra_gen(opt);
        if (app.got_subcommand(check))
            return run_check(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

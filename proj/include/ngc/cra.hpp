// The class-responsibility-assignment model: feature instances, the candidate
// container holding every expressible assignment, and the built-in
// assignment constraints.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <ngc/condition.hpp>

namespace ngc {

// Methods and attributes with their dependencies. classCount 0 means one
// class per feature, the largest count an assignment can ever use.
struct CraInstance {
    std::vector<std::string> methods;
    std::vector<std::string> attributes;
    std::vector<std::pair<std::string, std::string>> functional_deps; // method -> method
    std::vector<std::pair<std::string, std::string>> data_deps;       // method -> attribute
    std::size_t class_count = 0;
};

std::size_t resolved_class_count(const CraInstance& instance);

// Feature IDs must be unique, free of ',', '(', ')' (they appear inside
// generated edge IDs), and distinct from the generated class names; dep
// endpoints must exist.
ValidationReport validate_instance(const CraInstance& instance);

// Node types Class, Method, Attribute; edge types encapsulatesMethod,
// encapsulatesAttribute, functionalDep, dataDep. One shared immutable value.
TypeGraphPtr cra_type_graph();

struct CraContainer {
    // The features, their dependencies, the classes C1..Ck, and one
    // encapsulates edge from every class to every feature.
    GraphPtr container;
    // The dependency-closed feature part every solution must keep.
    SubgraphRef problem_part;
};

// Throws std::invalid_argument when the instance does not validate.
CraContainer build_cra_container(const CraInstance& instance);

struct NamedConstraint {
    std::string name;
    GraphCondition condition;
};

// method-lower-bound (every method sits in some class), method-upper-bound
// (no method sits in two classes), and private-attribute-usage (a method
// using an attribute shares a class with it); attribute-lower-bound is the
// optional symmetric bound for attributes.
std::vector<NamedConstraint> builtin_constraints(bool with_attribute_lower_bound = false);

} // namespace ngc

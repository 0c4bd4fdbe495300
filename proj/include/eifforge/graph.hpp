#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eifforge/expr.hpp"

namespace eifforge {

enum class ColumnKind { Numeric, Binary };

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::Numeric;

    bool operator==(const ColumnSpec&) const = default;
};

struct Schema {
    std::vector<ColumnSpec> columns;

    bool has_column(const std::string& name) const;
    const ColumnSpec* find(const std::string& name) const;

    bool operator==(const Schema&) const = default;
};

// Ambient space of a node's output: a real scalar, a function of the full
// record z, or a function of a coarsening x determined by a column set.
struct SpaceTag {
    enum class Kind { Scalar, FnOfZ, FnOfX };

    Kind kind = Kind::Scalar;
    std::vector<std::string> vars; // FnOfX only; kept sorted, compared as a set

    static SpaceTag scalar() { return {Kind::Scalar, {}}; }
    static SpaceTag fn_of_z() { return {Kind::FnOfZ, {}}; }
    static SpaceTag fn_of_x(std::vector<std::string> vars);

    bool operator==(const SpaceTag&) const = default;
    std::string describe() const;
};

enum class NodeKind {
    CondMean,
    CondVariance,
    CondCovariance,
    Density,
    Pointwise,
    ScalarFn,
    Constant,
    Lift,
    FixBinary,
    Mean,
};

const char* node_kind_name(NodeKind k);

struct NodeSpec {
    int id = 0;
    NodeKind kind = NodeKind::Constant;
    std::vector<int> parents;

    // kind-specific parameters
    std::vector<std::string> given;              // conditioning columns
    std::vector<std::string> dependent_columns;  // column dependents (no-parent cond_mean/mean/variance, density targets)
    std::optional<std::string> fixed;            // binary column constrained to 1
    ExprPtr expr;                                // pointwise / scalar_fn / constant
    std::optional<double> literal;               // scalar constant

    bool operator==(const NodeSpec& other) const;
};

// Directed acyclic composition of primitives. Node list order is execution
// order; for parsed graphs ids are 1..k in list order and every parent id is
// smaller than its consumer's id.
struct ParameterGraph {
    Schema schema;
    std::vector<NodeSpec> nodes;
    int output_id = 0;

    const NodeSpec* node_by_id(int id) const;
    int size() const { return static_cast<int>(nodes.size()); }

    bool operator==(const ParameterGraph& other) const;
};

struct Finding {
    int node_id = 0; // 0 = graph-level
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool ok() const { return findings.empty(); }
    std::string describe() const;
};

// Parses the JSON interchange format. Hard errors (throw data_error): JSON
// syntax (with byte position), unknown kind, duplicate id, forward reference.
ParameterGraph parse_graph(const std::string& text);

std::string serialize_graph(const ParameterGraph& g);

// Structural validation; all findings are carried in the report.
ValidationReport validate(const ParameterGraph& g);

// Ids in execution order. Throws data_error if a parent does not precede its
// consumer.
std::vector<int> topo_order(const ParameterGraph& g);

// Output spaces per node, in node list order. Throws data_error on any
// inconsistency; run validate first for a full report.
std::vector<SpaceTag> infer_spaces(const ParameterGraph& g);

// Rewrites every cond_mean carrying a fixed constraint into cond_mean over
// given+{A} followed by a fix_binary node. Synthetic nodes take ids k+1,... and
// are spliced directly after their source so list order stays executable;
// consumers and the output are re-pointed.
ParameterGraph desugar(const ParameterGraph& g);

// Convenience construction for scenarios and tests.
class GraphBuilder {
public:
    explicit GraphBuilder(Schema schema);

    int constant_expr(const std::string& expr);
    int constant_literal(double v);
    int cond_mean(int parent, std::vector<std::string> given,
                  std::optional<std::string> fixed = std::nullopt);
    int cond_mean_col(const std::string& column, std::vector<std::string> given,
                      std::optional<std::string> fixed = std::nullopt);
    int cond_variance(int parent, std::vector<std::string> given);
    int cond_variance_col(const std::string& column, std::vector<std::string> given);
    int cond_covariance(int parent1, int parent2, std::vector<std::string> given);
    int density(std::vector<std::string> target, std::vector<std::string> given = {});
    int pointwise(const std::string& expr, std::vector<int> parents);
    int scalar_fn(const std::string& expr, std::vector<int> parents);
    int lift(int parent);
    int fix_binary(int parent, const std::string& column);
    int mean(int parent);
    int mean_col(const std::string& column);

    ParameterGraph finish(int output_id);

private:
    NodeSpec& push(NodeKind kind, std::vector<int> parents);

    ParameterGraph g_;
    int next_id_ = 1;
};

} // namespace eifforge

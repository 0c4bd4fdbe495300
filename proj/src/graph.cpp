#include "eifforge/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

#include "eifforge/errors.hpp"

namespace eifforge {

using nlohmann::json;

bool Schema::has_column(const std::string& name) const { return find(name) != nullptr; }

const ColumnSpec* Schema::find(const std::string& name) const {
    for (const auto& c : columns) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

SpaceTag SpaceTag::fn_of_x(std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return {Kind::FnOfX, std::move(vars)};
}

std::string SpaceTag::describe() const {
    switch (kind) {
    case Kind::Scalar: return "Scalar";
    case Kind::FnOfZ: return "FnOfZ";
    case Kind::FnOfX: {
        std::string s = "FnOfX(";
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i) s += ",";
            s += vars[i];
        }
        return s + ")";
    }
    }
    return "?";
}

const char* node_kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::CondMean: return "cond_mean";
    case NodeKind::CondVariance: return "cond_variance";
    case NodeKind::CondCovariance: return "cond_covariance";
    case NodeKind::Density: return "density";
    case NodeKind::Pointwise: return "pointwise";
    case NodeKind::ScalarFn: return "scalar_fn";
    case NodeKind::Constant: return "constant";
    case NodeKind::Lift: return "lift";
    case NodeKind::FixBinary: return "fix_binary";
    case NodeKind::Mean: return "mean";
    }
    return "?";
}

namespace {

std::optional<NodeKind> node_kind_from_name(const std::string& s) {
    static const std::map<std::string, NodeKind> table = {
        {"cond_mean", NodeKind::CondMean},       {"cond_variance", NodeKind::CondVariance},
        {"cond_covariance", NodeKind::CondCovariance}, {"density", NodeKind::Density},
        {"pointwise", NodeKind::Pointwise},      {"scalar_fn", NodeKind::ScalarFn},
        {"constant", NodeKind::Constant},        {"lift", NodeKind::Lift},
        {"fix_binary", NodeKind::FixBinary},     {"mean", NodeKind::Mean},
    };
    auto it = table.find(s);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

} // namespace

bool NodeSpec::operator==(const NodeSpec& other) const {
    return id == other.id && kind == other.kind && parents == other.parents &&
           given == other.given && dependent_columns == other.dependent_columns &&
           fixed == other.fixed && literal == other.literal && expr_equal(expr, other.expr);
}

const NodeSpec* ParameterGraph::node_by_id(int id) const {
    for (const auto& n : nodes) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

bool ParameterGraph::operator==(const ParameterGraph& other) const {
    return schema == other.schema && nodes == other.nodes && output_id == other.output_id;
}

std::string ValidationReport::describe() const {
    std::string s;
    for (const auto& f : findings) {
        if (!s.empty()) s += "; ";
        if (f.node_id > 0) s += "node " + std::to_string(f.node_id) + ": ";
        s += f.message;
    }
    return s;
}

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------

ParameterGraph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw data_error("graph JSON syntax error at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    try {
        ParameterGraph g;
        if (!doc.is_object() || !doc.contains("schema") || !doc.contains("nodes") ||
            !doc.contains("output")) {
            throw data_error("graph JSON must contain 'schema', 'nodes' and 'output'");
        }
        for (const auto& col : doc.at("schema")) {
            ColumnSpec c;
            c.name = col.at("name").get<std::string>();
            std::string kind = col.at("kind").get<std::string>();
            if (kind == "numeric") {
                c.kind = ColumnKind::Numeric;
            } else if (kind == "binary") {
                c.kind = ColumnKind::Binary;
            } else {
                throw data_error("unknown column kind '" + kind + "'");
            }
            g.schema.columns.push_back(std::move(c));
        }
        std::set<int> seen_ids;
        for (const auto& jn : doc.at("nodes")) {
            NodeSpec n;
            n.id = jn.at("id").get<int>();
            if (!seen_ids.insert(n.id).second) {
                throw data_error("duplicate node id " + std::to_string(n.id));
            }
            std::string kind = jn.at("kind").get<std::string>();
            auto k = node_kind_from_name(kind);
            if (!k) throw data_error("unknown kind '" + kind + "'");
            n.kind = *k;
            if (jn.contains("parents")) {
                for (const auto& p : jn.at("parents")) n.parents.push_back(p.get<int>());
            }
            const json params = jn.contains("params") ? jn.at("params") : json::object();
            if (params.contains("given") && !params.at("given").is_null()) {
                for (const auto& c : params.at("given")) n.given.push_back(c.get<std::string>());
            }
            if (params.contains("dependent") && !params.at("dependent").is_null()) {
                const auto& dep = params.at("dependent");
                if (dep.is_string()) {
                    n.dependent_columns.push_back(dep.get<std::string>());
                } else {
                    for (const auto& c : dep) n.dependent_columns.push_back(c.get<std::string>());
                }
            }
            if (params.contains("fixed") && !params.at("fixed").is_null()) {
                const auto& fx = params.at("fixed");
                if (!fx.is_object() || fx.size() != 1) {
                    throw data_error("node " + std::to_string(n.id) +
                                     ": 'fixed' must be null or {\"column\": 1}");
                }
                auto it = fx.begin();
                if (!it.value().is_number() || it.value().get<double>() != 1.0) {
                    throw data_error("node " + std::to_string(n.id) +
                                     ": fixed constraints support value 1 only");
                }
                n.fixed = it.key();
            }
            if (params.contains("expr") && !params.at("expr").is_null()) {
                n.expr = parse_expr(params.at("expr").get<std::string>());
            }
            if (params.contains("literal") && !params.at("literal").is_null()) {
                n.literal = params.at("literal").get<double>();
            }
            g.nodes.push_back(std::move(n));
        }
        g.output_id = doc.at("output").get<int>();

        std::sort(g.nodes.begin(), g.nodes.end(),
                  [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
        for (const auto& n : g.nodes) {
            for (int p : n.parents) {
                if (p >= n.id) {
                    throw data_error("node " + std::to_string(n.id) +
                                     ": forward reference to node " + std::to_string(p));
                }
            }
        }
        return g;
    } catch (const json::exception& e) {
        throw data_error(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string serialize_graph(const ParameterGraph& g) {
    json doc;
    doc["schema"] = json::array();
    for (const auto& c : g.schema.columns) {
        doc["schema"].push_back(
            {{"name", c.name}, {"kind", c.kind == ColumnKind::Binary ? "binary" : "numeric"}});
    }
    doc["nodes"] = json::array();
    for (const auto& n : g.nodes) {
        json jn;
        jn["id"] = n.id;
        jn["kind"] = node_kind_name(n.kind);
        if (!n.parents.empty()) jn["parents"] = n.parents;
        json params = json::object();
        switch (n.kind) {
        case NodeKind::CondMean:
            params["given"] = n.given;
            params["fixed"] = nullptr;
            if (n.fixed) params["fixed"] = json{{*n.fixed, 1}};
            if (!n.dependent_columns.empty()) params["dependent"] = n.dependent_columns.front();
            break;
        case NodeKind::CondVariance:
        case NodeKind::CondCovariance:
            params["given"] = n.given;
            if (!n.dependent_columns.empty()) params["dependent"] = n.dependent_columns.front();
            break;
        case NodeKind::Mean:
            if (!n.dependent_columns.empty()) params["dependent"] = n.dependent_columns.front();
            break;
        case NodeKind::Density:
            params["dependent"] = n.dependent_columns;
            params["given"] = n.given;
            break;
        case NodeKind::Pointwise:
        case NodeKind::ScalarFn:
            params["expr"] = print_expr(n.expr);
            break;
        case NodeKind::Constant:
            if (n.literal) {
                params["literal"] = *n.literal;
            } else {
                params["expr"] = print_expr(n.expr);
            }
            break;
        case NodeKind::FixBinary:
            params["fixed"] = json{{*n.fixed, 1}};
            break;
        case NodeKind::Lift:
            break;
        }
        if (!params.empty()) jn["params"] = params;
        doc["nodes"].push_back(std::move(jn));
    }
    doc["output"] = g.output_id;
    return doc.dump();
}

// ---------------------------------------------------------------------------
// Validation and space inference
// ---------------------------------------------------------------------------

namespace {

// Walks the node list computing output spaces. Problems are either collected
// into `out` or thrown when out == nullptr.
std::vector<SpaceTag> space_walk(const ParameterGraph& g, std::vector<Finding>* out) {
    std::map<int, SpaceTag> spaces;
    std::vector<SpaceTag> result;
    auto report = [&](int node_id, const std::string& msg) {
        if (out) {
            out->push_back({node_id, msg});
        } else {
            throw data_error("node " + std::to_string(node_id) + ": " + msg);
        }
    };

    for (const auto& n : g.nodes) {
        SpaceTag space = SpaceTag::scalar();
        auto parent_space = [&](int pid) -> const SpaceTag* {
            auto it = spaces.find(pid);
            if (it == spaces.end()) {
                report(n.id, "parent " + std::to_string(pid) + " is not declared earlier");
                return nullptr;
            }
            return &it->second;
        };
        auto check_given = [&]() {
            std::set<std::string> seen;
            for (const auto& c : n.given) {
                if (!g.schema.has_column(c)) report(n.id, "conditioning column '" + c + "' missing from schema");
                if (!seen.insert(c).second) report(n.id, "duplicate conditioning column '" + c + "'");
            }
        };
        auto check_dependent = [&](size_t max_parents) {
            if (n.parents.size() > max_parents) {
                report(n.id, std::string(node_kind_name(n.kind)) + " takes at most " +
                                 std::to_string(max_parents) + " parent(s)");
            }
            for (int pid : n.parents) {
                const SpaceTag* ps = parent_space(pid);
                if (ps && ps->kind != SpaceTag::Kind::FnOfZ) {
                    report(n.id, "dependent parent " + std::to_string(pid) +
                                     " must be FnOfZ, got " + ps->describe());
                }
            }
            if (n.parents.empty()) {
                if (n.dependent_columns.size() != 1) {
                    report(n.id, "needs exactly one dependent column or one parent");
                } else if (!g.schema.has_column(n.dependent_columns.front())) {
                    report(n.id, "dependent column '" + n.dependent_columns.front() +
                                     "' missing from schema");
                }
            } else if (!n.dependent_columns.empty()) {
                report(n.id, "cannot give both a parent and a dependent column");
            }
        };

        switch (n.kind) {
        case NodeKind::Constant:
            if (n.literal && n.expr) {
                report(n.id, "constant takes either a literal or an expression, not both");
            }
            if (!n.literal && !n.expr) {
                report(n.id, "constant needs a literal or an expression");
            }
            if (!n.parents.empty()) report(n.id, "constant takes no parents");
            if (n.expr) {
                std::set<std::string> cols;
                std::set<int> prefs;
                collect_expr_refs(n.expr, cols, prefs);
                if (!prefs.empty()) report(n.id, "constant expression cannot reference parents");
                for (const auto& c : cols) {
                    if (!g.schema.has_column(c)) {
                        report(n.id, "expression references unknown column '" + c + "'");
                    }
                }
                space = SpaceTag::fn_of_z();
            } else {
                space = SpaceTag::scalar();
            }
            break;
        case NodeKind::Mean:
            if (!n.given.empty()) report(n.id, "mean takes no conditioning columns; use cond_mean");
            check_dependent(1);
            space = SpaceTag::scalar();
            break;
        case NodeKind::CondMean:
        case NodeKind::CondVariance: {
            check_given();
            check_dependent(1);
            if (n.fixed) {
                if (n.kind != NodeKind::CondMean) {
                    report(n.id, "fixed constraints are supported on cond_mean only");
                } else {
                    const ColumnSpec* c = g.schema.find(*n.fixed);
                    if (!c) {
                        report(n.id, "fixed column '" + *n.fixed + "' missing from schema");
                    } else if (c->kind != ColumnKind::Binary) {
                        report(n.id, "fixed column '" + *n.fixed + "' must be binary");
                    }
                    if (std::find(n.given.begin(), n.given.end(), *n.fixed) != n.given.end()) {
                        report(n.id, "fixed column '" + *n.fixed + "' also appears in given");
                    }
                    // the desugared composition conditions on given + {fixed}
                    // and then restricts, landing in FnOfX(given)
                }
            }
            space = n.given.empty() ? SpaceTag::scalar() : SpaceTag::fn_of_x(n.given);
            break;
        }
        case NodeKind::CondCovariance: {
            check_given();
            if (n.parents.size() != 2) {
                report(n.id, "cond_covariance needs exactly 2 function-valued parents");
            }
            for (int pid : n.parents) {
                const SpaceTag* ps = parent_space(pid);
                if (ps && ps->kind != SpaceTag::Kind::FnOfZ) {
                    report(n.id, "dependent parent " + std::to_string(pid) +
                                     " must be FnOfZ, got " + ps->describe());
                }
            }
            space = n.given.empty() ? SpaceTag::scalar() : SpaceTag::fn_of_x(n.given);
            break;
        }
        case NodeKind::Density: {
            check_given();
            if (!n.parents.empty()) report(n.id, "density takes no parents");
            if (n.dependent_columns.empty()) report(n.id, "density needs target columns");
            for (const auto& c : n.dependent_columns) {
                if (!g.schema.has_column(c)) {
                    report(n.id, "target column '" + c + "' missing from schema");
                }
                if (std::find(n.given.begin(), n.given.end(), c) != n.given.end()) {
                    report(n.id, "column '" + c + "' is both target and conditioning");
                }
            }
            space = SpaceTag::fn_of_z();
            break;
        }
        case NodeKind::Pointwise: {
            if (!n.expr) report(n.id, "pointwise needs an expression");
            if (n.parents.empty()) report(n.id, "pointwise needs at least one parent; use constant");
            for (int pid : n.parents) {
                const SpaceTag* ps = parent_space(pid);
                if (ps && ps->kind != SpaceTag::Kind::FnOfZ) {
                    report(n.id, "pointwise parent " + std::to_string(pid) +
                                     " must be FnOfZ, got " + ps->describe());
                }
            }
            if (n.expr) {
                std::set<std::string> cols;
                std::set<int> prefs;
                collect_expr_refs(n.expr, cols, prefs);
                for (int p : prefs) {
                    if (std::find(n.parents.begin(), n.parents.end(), p) == n.parents.end()) {
                        report(n.id, "expression references undeclared parent $" + std::to_string(p));
                    }
                }
                for (const auto& c : cols) {
                    if (!g.schema.has_column(c)) {
                        report(n.id, "expression references unknown column '" + c + "'");
                    }
                }
            }
            space = SpaceTag::fn_of_z();
            break;
        }
        case NodeKind::ScalarFn: {
            if (!n.expr) report(n.id, "scalar_fn needs an expression");
            if (n.parents.empty()) report(n.id, "scalar_fn needs at least one parent");
            for (int pid : n.parents) {
                const SpaceTag* ps = parent_space(pid);
                if (ps && ps->kind != SpaceTag::Kind::Scalar) {
                    report(n.id, "scalar_fn parent " + std::to_string(pid) +
                                     " must be Scalar, got " + ps->describe());
                }
            }
            if (n.expr) {
                std::set<std::string> cols;
                std::set<int> prefs;
                collect_expr_refs(n.expr, cols, prefs);
                if (!cols.empty()) {
                    report(n.id, "scalar_fn expression cannot reference data columns");
                }
                for (int p : prefs) {
                    if (std::find(n.parents.begin(), n.parents.end(), p) == n.parents.end()) {
                        report(n.id, "expression references undeclared parent $" + std::to_string(p));
                    }
                }
            }
            space = SpaceTag::scalar();
            break;
        }
        case NodeKind::Lift: {
            if (n.parents.size() != 1) {
                report(n.id, "lift needs exactly one parent");
            } else {
                const SpaceTag* ps = parent_space(n.parents.front());
                if (ps && ps->kind != SpaceTag::Kind::FnOfX) {
                    report(n.id, "lift parent must be FnOfX, got " + ps->describe());
                }
            }
            space = SpaceTag::fn_of_z();
            break;
        }
        case NodeKind::FixBinary: {
            if (!n.fixed) report(n.id, "fix_binary needs a fixed column");
            if (n.parents.size() != 1) {
                report(n.id, "fix_binary needs exactly one parent");
                space = SpaceTag::fn_of_z();
                break;
            }
            const SpaceTag* ps = parent_space(n.parents.front());
            if (!ps || ps->kind != SpaceTag::Kind::FnOfX) {
                report(n.id, "fix_binary parent must be FnOfX" +
                                 (ps ? ", got " + ps->describe() : std::string()));
                space = SpaceTag::fn_of_z();
                break;
            }
            std::vector<std::string> rest = ps->vars;
            if (n.fixed) {
                const ColumnSpec* c = g.schema.find(*n.fixed);
                if (!c) {
                    report(n.id, "fixed column '" + *n.fixed + "' missing from schema");
                } else if (c->kind != ColumnKind::Binary) {
                    report(n.id, "fixed column '" + *n.fixed + "' must be binary");
                }
                auto it = std::find(rest.begin(), rest.end(), *n.fixed);
                if (it == rest.end()) {
                    report(n.id, "fixed column '" + *n.fixed + "' is not a parent variable");
                } else {
                    rest.erase(it);
                }
            }
            if (rest.empty()) {
                report(n.id, "fix_binary would leave no conditioning variables");
                space = SpaceTag::fn_of_z();
            } else {
                space = SpaceTag::fn_of_x(rest);
            }
            break;
        }
        }
        spaces[n.id] = space;
        result.push_back(std::move(space));
    }
    return result;
}

} // namespace

ValidationReport validate(const ParameterGraph& g) {
    ValidationReport rep;
    std::set<std::string> col_names;
    for (const auto& c : g.schema.columns) {
        if (c.name.empty()) rep.findings.push_back({0, "schema column with empty name"});
        if (!col_names.insert(c.name).second) {
            rep.findings.push_back({0, "duplicate schema column '" + c.name + "'"});
        }
    }
    if (g.nodes.empty()) {
        rep.findings.push_back({0, "graph has no nodes"});
        return rep;
    }
    for (int i = 0; i < g.size(); ++i) {
        const NodeSpec& n = g.nodes[static_cast<size_t>(i)];
        if (n.id != i + 1) {
            rep.findings.push_back(
                {n.id, "node ids must be 1..k in order; expected " + std::to_string(i + 1)});
        }
        for (int p : n.parents) {
            if (p >= n.id || p < 1) {
                rep.findings.push_back({n.id, "parent " + std::to_string(p) + " is not < own id"});
            }
        }
    }
    if (g.output_id != g.nodes.back().id) {
        rep.findings.push_back({0, "output must be the final node " +
                                       std::to_string(g.nodes.back().id)});
    }

    std::vector<SpaceTag> spaces = space_walk(g, &rep.findings);
    if (!spaces.empty() && spaces.back().kind != SpaceTag::Kind::Scalar &&
        g.output_id == g.nodes.back().id) {
        rep.findings.push_back(
            {g.output_id, "output space must be Scalar, got " + spaces.back().describe()});
    }
    return rep;
}

std::vector<int> topo_order(const ParameterGraph& g) {
    std::set<int> seen;
    std::vector<int> order;
    for (const auto& n : g.nodes) {
        for (int p : n.parents) {
            if (!seen.count(p)) {
                throw data_error("node " + std::to_string(n.id) + ": parent " +
                                 std::to_string(p) + " does not precede it");
            }
        }
        seen.insert(n.id);
        order.push_back(n.id);
    }
    return order;
}

std::vector<SpaceTag> infer_spaces(const ParameterGraph& g) { return space_walk(g, nullptr); }

ParameterGraph desugar(const ParameterGraph& g) {
    ParameterGraph out;
    out.schema = g.schema;
    out.output_id = g.output_id;
    int next_synthetic = 0;
    for (const auto& n : g.nodes) next_synthetic = std::max(next_synthetic, n.id);
    ++next_synthetic;

    std::map<int, int> repoint; // original id -> id consumers should use
    for (const auto& n : g.nodes) {
        NodeSpec copy = n;
        for (int& p : copy.parents) {
            auto it = repoint.find(p);
            if (it != repoint.end()) p = it->second;
        }
        if (copy.kind == NodeKind::CondMean && copy.fixed) {
            std::string fixed_col = *copy.fixed;
            copy.fixed.reset();
            copy.given.push_back(fixed_col);
            out.nodes.push_back(copy);

            NodeSpec fix;
            fix.id = next_synthetic++;
            fix.kind = NodeKind::FixBinary;
            fix.parents = {copy.id};
            fix.fixed = fixed_col;
            repoint[copy.id] = fix.id;
            if (out.output_id == copy.id) out.output_id = fix.id;
            out.nodes.push_back(std::move(fix));
        } else {
            out.nodes.push_back(std::move(copy));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------------

GraphBuilder::GraphBuilder(Schema schema) { g_.schema = std::move(schema); }

NodeSpec& GraphBuilder::push(NodeKind kind, std::vector<int> parents) {
    NodeSpec n;
    n.id = next_id_++;
    n.kind = kind;
    n.parents = std::move(parents);
    g_.nodes.push_back(std::move(n));
    return g_.nodes.back();
}

int GraphBuilder::constant_expr(const std::string& expr) {
    NodeSpec& n = push(NodeKind::Constant, {});
    n.expr = parse_expr(expr);
    return n.id;
}

int GraphBuilder::constant_literal(double v) {
    NodeSpec& n = push(NodeKind::Constant, {});
    n.literal = v;
    return n.id;
}

int GraphBuilder::cond_mean(int parent, std::vector<std::string> given,
                            std::optional<std::string> fixed) {
    NodeSpec& n = push(NodeKind::CondMean, {parent});
    n.given = std::move(given);
    n.fixed = std::move(fixed);
    return n.id;
}

int GraphBuilder::cond_mean_col(const std::string& column, std::vector<std::string> given,
                                std::optional<std::string> fixed) {
    NodeSpec& n = push(NodeKind::CondMean, {});
    n.dependent_columns = {column};
    n.given = std::move(given);
    n.fixed = std::move(fixed);
    return n.id;
}

int GraphBuilder::cond_variance(int parent, std::vector<std::string> given) {
    NodeSpec& n = push(NodeKind::CondVariance, {parent});
    n.given = std::move(given);
    return n.id;
}

int GraphBuilder::cond_variance_col(const std::string& column, std::vector<std::string> given) {
    NodeSpec& n = push(NodeKind::CondVariance, {});
    n.dependent_columns = {column};
    n.given = std::move(given);
    return n.id;
}

int GraphBuilder::cond_covariance(int parent1, int parent2, std::vector<std::string> given) {
    NodeSpec& n = push(NodeKind::CondCovariance, {parent1, parent2});
    n.given = std::move(given);
    return n.id;
}

int GraphBuilder::density(std::vector<std::string> target, std::vector<std::string> given) {
    NodeSpec& n = push(NodeKind::Density, {});
    n.dependent_columns = std::move(target);
    n.given = std::move(given);
    return n.id;
}

int GraphBuilder::pointwise(const std::string& expr, std::vector<int> parents) {
    NodeSpec& n = push(NodeKind::Pointwise, std::move(parents));
    n.expr = parse_expr(expr);
    return n.id;
}

int GraphBuilder::scalar_fn(const std::string& expr, std::vector<int> parents) {
    NodeSpec& n = push(NodeKind::ScalarFn, std::move(parents));
    n.expr = parse_expr(expr);
    return n.id;
}

int GraphBuilder::lift(int parent) { return push(NodeKind::Lift, {parent}).id; }

int GraphBuilder::fix_binary(int parent, const std::string& column) {
    NodeSpec& n = push(NodeKind::FixBinary, {parent});
    n.fixed = column;
    return n.id;
}

int GraphBuilder::mean(int parent) { return push(NodeKind::Mean, {parent}).id; }

int GraphBuilder::mean_col(const std::string& column) {
    NodeSpec& n = push(NodeKind::Mean, {});
    n.dependent_columns = {column};
    return n.id;
}

ParameterGraph GraphBuilder::finish(int output_id) {
    g_.output_id = output_id;
    return std::move(g_);
}

} // namespace eifforge

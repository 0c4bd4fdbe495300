#include "eifforge/hilbert.hpp"

#include <cmath>

#include "eifforge/errors.hpp"

namespace eifforge {

namespace {
thread_local uint64_t g_eval_steps = 0;
}

RecordLayout::RecordLayout(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
        index_.emplace(names_[i], static_cast<int>(i));
    }
}

int RecordLayout::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

double DataRecord::get(const std::string& name) const {
    int idx = layout ? layout->index_of(name) : -1;
    if (idx < 0) throw data_error("missing column '" + name + "' in record");
    return values[static_cast<size_t>(idx)];
}

bool DataRecord::has(const std::string& name) const {
    return layout && layout->index_of(name) >= 0;
}

void DataRecord::set(const std::string& name, double v) {
    int idx = layout ? layout->index_of(name) : -1;
    if (idx < 0) throw data_error("missing column '" + name + "' in record");
    values[static_cast<size_t>(idx)] = v;
}

DataRecord DataRecord::with(const std::string& name, double v) const {
    DataRecord out = *this;
    out.set(name, v);
    return out;
}

DataRecord make_record(std::initializer_list<std::pair<std::string, double>> cols) {
    std::vector<std::string> names;
    std::vector<double> values;
    names.reserve(cols.size());
    values.reserve(cols.size());
    for (const auto& [name, v] : cols) {
        names.push_back(name);
        values.push_back(v);
    }
    DataRecord r;
    r.layout = std::make_shared<RecordLayout>(std::move(names));
    r.values = std::move(values);
    return r;
}

HilbertElement make_scalar(double v, int origin) {
    HilbertElement e;
    e.space = SpaceTag::scalar();
    e.scalar = v;
    e.origin_node = origin;
    return e;
}

HilbertElement make_fn(SpaceTag space, std::function<double(const DataRecord&)> fn, int origin) {
    HilbertElement e;
    e.space = std::move(space);
    e.fn = std::move(fn);
    e.origin_node = origin;
    return e;
}

HilbertElement zero_element(const SpaceTag& space) {
    HilbertElement e;
    e.space = space;
    e.is_zero = true;
    if (space.kind != SpaceTag::Kind::Scalar) {
        e.fn = [](const DataRecord&) { return 0.0; };
    }
    return e;
}

double eval_element(const HilbertElement& e, const DataRecord& r) {
    ++g_eval_steps;
    if (e.is_scalar()) {
        throw data_error("eval_element called on a scalar element");
    }
    if (e.is_zero) return 0.0;
    double v = e.fn(r);
    if (!std::isfinite(v)) {
        std::string who = e.origin_node > 0 ? " (node " + std::to_string(e.origin_node) + ")" : "";
        throw numeric_error("non-finite evaluation" + who);
    }
    return v;
}

double scalar_value(const HilbertElement& e) {
    if (!e.is_scalar()) throw data_error("scalar_value called on a function element");
    return e.is_zero ? 0.0 : e.scalar;
}

HilbertElement add_elements(const HilbertElement& a, const HilbertElement& b) {
    if (!(a.space == b.space)) {
        throw data_error("space mismatch in addition: " + a.space.describe() + " vs " +
                         b.space.describe());
    }
    if (a.is_zero) return b;
    if (b.is_zero) return a;
    if (a.is_scalar()) return make_scalar(a.scalar + b.scalar);
    HilbertElement out;
    out.space = a.space;
    out.fn = [a, b](const DataRecord& r) { return eval_element(a, r) + eval_element(b, r); };
    return out;
}

HilbertElement scale_element(const HilbertElement& e, double c) {
    if (e.is_zero) return e;
    if (e.is_scalar()) return make_scalar(c * e.scalar, e.origin_node);
    HilbertElement out;
    out.space = e.space;
    out.origin_node = e.origin_node;
    out.fn = [e, c](const DataRecord& r) { return c * eval_element(e, r); };
    return out;
}

void accumulate(AdjointAccumulators& acc, int node_id, const AdjointBundle& b) {
    acc.f0_acc = add_elements(acc.f0_acc, b.f0);
    for (const auto& [pid, msg] : b.parent_msgs) {
        auto it = acc.node_acc.find(pid);
        if (it == acc.node_acc.end()) {
            throw data_error("bundle from node " + std::to_string(node_id) +
                             " targets unknown node " + std::to_string(pid));
        }
        it->second = add_elements(it->second, msg);
    }
}

uint64_t eval_step_count() { return g_eval_steps; }
void reset_eval_step_count() { g_eval_steps = 0; }

} // namespace eifforge

#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eifforge/graph.hpp"

namespace eifforge {

// Column name -> slot mapping shared across the records of one table.
class RecordLayout {
public:
    explicit RecordLayout(std::vector<std::string> names);

    int index_of(const std::string& name) const; // -1 when absent
    const std::vector<std::string>& names() const { return names_; }
    size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

struct DataRecord {
    std::shared_ptr<const RecordLayout> layout;
    std::vector<double> values;

    double get(const std::string& name) const; // throws data_error when missing
    bool has(const std::string& name) const;
    void set(const std::string& name, double v);
    DataRecord with(const std::string& name, double v) const;
};

DataRecord make_record(std::initializer_list<std::pair<std::string, double>> cols);

// A value in R, L2(P) or L2(P_X): a scalar, or a pure evaluator over records.
struct HilbertElement {
    SpaceTag space;
    double scalar = 0.0;
    std::function<double(const DataRecord&)> fn; // FnOfZ / FnOfX only
    bool is_zero = false;   // additive identity marker
    int origin_node = 0;    // diagnostics; 0 = unattributed

    bool is_scalar() const { return space.kind == SpaceTag::Kind::Scalar; }
};

HilbertElement make_scalar(double v, int origin = 0);
HilbertElement make_fn(SpaceTag space, std::function<double(const DataRecord&)> fn, int origin = 0);

// The 0 element of a space: scalar 0 or the constant-zero function.
HilbertElement zero_element(const SpaceTag& space);

// Evaluates a function-space element at a record. Throws numeric_error on a
// non-finite result (naming the producing node) and data_error on a missing
// column. Bumps the per-thread step counter.
double eval_element(const HilbertElement& e, const DataRecord& r);

// Scalar value of a Scalar element.
double scalar_value(const HilbertElement& e);

// Pointwise (or scalar) sum; exact evaluator composition, no discretization.
HilbertElement add_elements(const HilbertElement& a, const HilbertElement& b);

HilbertElement scale_element(const HilbertElement& e, double c);

// One backward-step output: the mean-zero score contribution plus per-parent
// messages in the parents' spaces.
struct AdjointBundle {
    HilbertElement f0;                        // FnOfZ
    std::map<int, HilbertElement> parent_msgs;
};

struct AdjointAccumulators {
    HilbertElement f0_acc;                    // FnOfZ
    std::map<int, HilbertElement> node_acc;   // one slot per node, in its space
};

// f0_acc += b.f0; each parent slot += its message. Throws data_error on space
// mismatch or an undeclared slot.
void accumulate(AdjointAccumulators& acc, int node_id, const AdjointBundle& b);

// Per-thread evaluator invocation counter (cost accounting in tests).
uint64_t eval_step_count();
void reset_eval_step_count();

} // namespace eifforge

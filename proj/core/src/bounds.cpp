#include "tinv/bounds.hpp"

#include <limits>

#include "tinv/error.hpp"
#include "tinv/hclosure.hpp"

namespace tinv {
namespace {

// Longest witness we are willing to spell out for an unbounded violation.
constexpr std::uint64_t kPumpLimit = 100'000;

void require_total(const FiniteRelation& r, const StateFunction& f) {
    for (State x : r.domain()) {
        if (!f.table.count(x)) fail(ErrorKind::PartialFunction, "no value for state " + std::to_string(x));
    }
}

}  // namespace

StateFunction StateFunction::from(const FiniteRelation& r, const std::function<std::uint64_t(State)>& fn,
                                  Provenance p) {
    StateFunction f;
    f.provenance = p;
    for (State x : r.domain()) f.table.emplace(x, fn(x));
    return f;
}

StateFunction StateFunction::constant(const FiniteRelation& r, std::uint64_t value) {
    return from(r, [value](State) { return value; }, Provenance::UserSupplied);
}

std::uint64_t StateFunction::operator()(State x) const {
    auto it = table.find(x);
    if (it == table.end()) fail(ErrorKind::PartialFunction, "no value for state " + std::to_string(x));
    return it->second;
}

WeightVerdict is_weight_function(const FiniteRelation& r, const StateFunction& f) {
    require_total(r, f);
    for (const Edge& e : r.edges()) {
        if (!weight_step_ok(f(e.first), f(e.second))) return {false, e};
    }
    return {};
}

BoundVerdict is_bound(const FiniteRelation& r, const StateFunction& f) {
    require_total(r, f);
    auto heights = path_heights(r);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const State x = r.state(i);
        const std::uint64_t fx = f(x);
        if (!heights[i]) {
            // Every state whose height is undefined has a successor of the same
            // kind, so the walk below never gets stuck.
            BoundVerdict v{false, {}, true};
            const std::uint64_t want = fx < kPumpLimit ? fx + 1 : kPumpLimit;
            std::size_t cur = i;
            v.witness.push_back(x);
            while (v.witness.size() < want) {
                for (std::uint32_t s : r.successors(cur))
                    if (!heights[s]) {
                        cur = s;
                        break;
                    }
                v.witness.push_back(r.state(cur));
            }
            return v;
        }
        if (*heights[i] + 1 > fx) {
            return {false, longest_decreasing_sequence(r, x).items, false};
        }
    }
    return {};
}

BoundVerdict is_h_bound(const FiniteRelation& r, const StateFunction& f, const Caps& caps) {
    require_total(r, f);
    if (auto h = is_h_well_founded(r); !h.h_well_founded) {
        // x, x, x, ... is transitive once (x, x) is an edge.
        const State x = *h.reflexive_witness;
        const std::uint64_t fx = f(x);
        BoundVerdict v{false, {}, true};
        v.witness.assign(fx < kPumpLimit ? fx + 1 : kPumpLimit, x);
        return v;
    }
    for (State x : r.domain()) {
        auto w = longest_h_sequence(r, x, caps);
        if (w.length > f(x)) return {false, std::move(w.items), false};
    }
    return {};
}

StateFunction weight_from_bound(const FiniteRelation& r, const StateFunction& f) {
    if (auto v = is_bound(r, f); !v.ok) {
        fail(ErrorKind::NotABound, "f is exceeded by a sequence starting at " + std::to_string(v.witness.front()));
    }
    auto heights = path_heights(r);
    StateFunction g;
    g.provenance = StateFunction::Provenance::Derived;
    for (std::size_t i = 0; i < r.size(); ++i) g.table.emplace(r.state(i), *heights[i]);
    if (!is_weight_function(r, g).ok) fail(ErrorKind::InternalInconsistency, "derived weight is not a weight");
    for (auto [x, h] : g.table)
        if (h + 1 > f(x)) fail(ErrorKind::InternalInconsistency, "derived weight exceeds the bound");
    return g;
}

HeightVerdict has_height_omega(const FiniteRelation& r) {
    auto wf = is_well_founded(r);
    HeightVerdict out;
    if (!wf.well_founded) {
        out.cycle = std::move(wf.cycle);
        return out;
    }
    out.height_omega = true;
    StateFunction g;
    g.provenance = StateFunction::Provenance::Derived;
    for (std::size_t i = 0; i < r.size(); ++i) g.table.emplace(r.state(i), wf.ranking[i]);
    out.weight = std::move(g);
    return out;
}

}  // namespace tinv

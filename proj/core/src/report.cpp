#include "tinv/report.hpp"

#include <algorithm>

namespace tinv {
namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.first) + " " + std::to_string(e.second); }

void add_bound(Report& r, std::string_view section, const std::string& key, const BoundVerdict& v) {
    r.add(section, key, v.ok ? "ok" : "violated");
    if (!v.ok) {
        r.add(section, key + ".witness", join(v.witness));
        if (v.unbounded) r.add(section, key + ".unbounded", "yes");
    }
}

void add_depth(Report& r, const DepthWitness& w, const std::string& path) {
    const std::string key = "node" + path;
    r.add("CERTIFICATES", key + ".depth", w.depth);
    r.add("CERTIFICATES", key + ".holds", w.holds ? "yes" : "no");
    r.add("CERTIFICATES", key + ".edges", w.relation.edge_count());
    if (w.base) add_bound(r, "CERTIFICATES", key + ".base", *w.base);
    if (!w.failing_set.empty()) r.add("CERTIFICATES", key + ".failing_set", join(w.failing_set));
    for (std::size_t i = 0; i < w.splits.size(); ++i) {
        const auto& s = w.splits[i];
        const std::string sp = path + "." + std::to_string(i);
        r.add("CERTIFICATES", "set" + sp, join(s.set));
        for (std::size_t p = 0; p < s.parts.size(); ++p) add_depth(r, s.parts[p], sp + "." + std::to_string(p));
    }
}

}  // namespace

void Report::add(std::string_view section, std::string key, std::string value) {
    auto it = std::find_if(sections_.begin(), sections_.end(), [&](const Section& s) { return s.title == section; });
    if (it == sections_.end()) {
        sections_.push_back({std::string(section), {}});
        it = sections_.end() - 1;
    }
    it->entries.push_back({std::move(key), std::move(value)});
}

void Report::add(std::string_view section, std::string key, std::uint64_t value) {
    add(section, std::move(key), std::to_string(value));
}

std::string Report::value(std::string_view key) const {
    for (const auto& s : sections_)
        for (const auto& e : s.entries)
            if (e.key == key) return e.value;
    return {};
}

std::string Report::render(bool records) const {
    std::string out;
    for (std::size_t i = 0; i < sections_.size(); ++i) {
        const auto& s = sections_[i];
        if (!records) out += (i ? "\n" : "") + s.title + "\n";
        for (const auto& e : s.entries) {
            if (records)
                out += e.key + (e.value.empty() ? "" : " " + e.value) + "\n";
            else
                out += "  " + e.key + ": " + e.value + "\n";
        }
    }
    return out;
}

std::string join(std::span<const State> items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(items[i]);
    }
    return out;
}

Report invariant_report(const InvariantVerdict& v, std::string_view encoding) {
    Report r;
    r.add("VERDICT", "conclusion", std::string(to_string(v.conclusion)));
    r.add("VERDICT", "accessible", v.accessible.size());
    if (!v.cycle.empty()) r.add("VERDICT", "cycle", join(v.cycle));
    if (!encoding.empty()) r.add("VERDICT", "encoding", std::string(encoding));
    r.add("COVERING", "covering", v.covering_ok ? "ok" : "failed");
    if (v.uncovered) r.add("COVERING", "uncovered", edge_text(*v.uncovered));
    for (std::size_t i = 0; i < v.disjuncts.size(); ++i) {
        const auto& d = v.disjuncts[i];
        const std::string key = "part." + std::to_string(i);
        r.add("DISJUNCTS", key, d.well_founded ? "well-founded" : "cyclic");
        if (!d.cycle.empty()) r.add("DISJUNCTS", key + ".cycle", join(d.cycle));
    }
    if (v.conclusion == Conclusion::Terminating) {
        std::uint64_t longest = 0;
        for (std::size_t i = 0; i < v.longest.size(); ++i) {
            r.add("CERTIFICATES", "longest." + std::to_string(v.accessible[i]), v.longest[i]);
            longest = std::max(longest, v.longest[i]);
        }
        r.add("CERTIFICATES", "longest.max", longest);
    }
    return r;
}

Report decomposition_report(const Decomposition& d, bool h_variant) {
    Report r;
    const bool valid = d.covers && std::all_of(d.part_checks.begin(), d.part_checks.end(),
                                               [](const BoundVerdict& b) { return b.ok; });
    r.add("VERDICT", "variant", h_variant ? "h-bounded" : "bounded");
    r.add("VERDICT", "valid", valid ? "yes" : "no");
    r.add("VERDICT", "parts", d.parts.size() + 1);
    r.add("COVERING", "closure.edges", d.closure.edge_count());
    r.add("COVERING", "covering", d.covers ? "ok" : "failed");
    for (const Edge& e : d.unassigned) r.add("COVERING", "unassigned", edge_text(e));
    r.add("DISJUNCTS", "part.desc.edges", d.descending.edge_count());
    add_bound(r, "DISJUNCTS", "part.desc.f0", d.part_checks.at(0));
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const std::string key = "part." + std::to_string(i);
        r.add("DISJUNCTS", key + ".edges", d.parts[i].edge_count());
        add_bound(r, "DISJUNCTS", key + (h_variant ? ".f0h" : ".f0"), d.part_checks.at(i + 1));
    }
    if (d.ranks) {
        const auto& t = *d.ranks;
        for (std::size_t i = 0; i < t.rank.size(); ++i) {
            std::string row;
            for (std::size_t p = 0; p < t.states.size(); ++p)
                row += (p ? " " : "") + std::to_string(t.states[p]) + ":" + std::to_string(t.rank[i][p]);
            r.add("CERTIFICATES", "rank." + std::to_string(i), row);
        }
        for (const auto& [x, y, dist] : t.distance)
            r.add("CERTIFICATES", "distance", std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(dist));
        if (!t.cap_binding.empty()) r.add("CERTIFICATES", "rank.cap_binding", join(t.cap_binding));
    }
    return r;
}

Report depth_report(const DepthWitness& w, bool h_variant) {
    Report r;
    r.add("VERDICT", "variant", h_variant ? "homogeneous" : "linear");
    r.add("VERDICT", "depth", w.depth);
    r.add("VERDICT", "holds", w.holds ? "yes" : "no");
    add_depth(r, w, "");
    return r;
}

}  // namespace tinv

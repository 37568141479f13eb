#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tinv/invariant.hpp"
#include "tinv/relation.hpp"

namespace tinv {

/// Ordered sections of `key value` entries. One renderer produces both the
/// human layout and the line records, so the two cannot drift apart.
class Report {
public:
    struct Entry {
        std::string key;
        std::string value;
    };
    struct Section {
        std::string title;
        std::vector<Entry> entries;
    };

    void add(std::string_view section, std::string key, std::string value);
    void add(std::string_view section, std::string key, std::uint64_t value);

    const std::vector<Section>& sections() const noexcept { return sections_; }
    /// First value stored under `key`, or empty.
    std::string value(std::string_view key) const;

    /// Human: section titles with indented entries. Records: `key value` lines.
    std::string render(bool records) const;

private:
    std::vector<Section> sections_;
};

std::string join(std::span<const State> items, std::string_view sep = " ");

Report invariant_report(const InvariantVerdict& v, std::string_view encoding = {});
Report decomposition_report(const Decomposition& d, bool h_variant);
Report depth_report(const DepthWitness& w, bool h_variant);

}  // namespace tinv

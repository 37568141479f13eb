#include "tinv/hclosure.hpp"

#include <bit>

#include "tinv/error.hpp"

namespace tinv {
namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
    std::size_t n = 0;
    for (std::uint64_t w : b) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

class HSearch {
public:
    HSearch(const FiniteRelation& r, const Caps& caps) : r_(r), caps_(caps), words_((r.size() + 63) / 64) {
        succ_.assign(r.size(), Bits(words_, 0));
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::uint32_t j : r.successors(i)) succ_[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }

    void run_from(std::size_t first) {
        prefix_.assign(1, first);
        if (best_.empty()) best_ = prefix_;
        extend(succ_[first]);
    }

    const std::vector<std::size_t>& best() const { return best_; }

private:
    void extend(const Bits& cand) {
        if (++nodes_ > caps_.max_search_nodes) {
            fail(ErrorKind::InstanceCapExceeded,
                 "transitive-sequence search exceeded " + std::to_string(caps_.max_search_nodes) + " nodes");
        }
        if (prefix_.size() > best_.size()) best_ = prefix_;
        if (prefix_.size() + popcount(cand) <= best_.size()) return;
        Bits child(words_);
        for (std::size_t k = 0; k < words_; ++k) {
            std::uint64_t bits = cand[k];
            while (bits) {
                std::size_t y = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                for (std::size_t w = 0; w < words_; ++w) child[w] = cand[w] & succ_[y][w];
                if (prefix_.size() + 1 + popcount(child) <= best_.size() &&
                    prefix_.size() + 1 <= best_.size()) {
                    continue;
                }
                prefix_.push_back(y);
                extend(child);
                prefix_.pop_back();
            }
        }
    }

    const FiniteRelation& r_;
    const Caps& caps_;
    std::size_t words_;
    std::vector<Bits> succ_;
    std::vector<std::size_t> prefix_;
    std::vector<std::size_t> best_;
    std::size_t nodes_ = 0;
};

}  // namespace

bool is_h_member(const FiniteRelation& r, std::span<const State> items) {
    for (State x : items) (void)r.index(x);
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j)
            if (!r.contains(items[i], items[j])) return false;
    return true;
}

SequenceWitness longest_h_sequence(const FiniteRelation& r, std::optional<State> start, const Caps& caps) {
    if (auto v = is_h_well_founded(r); !v.h_well_founded) {
        fail(ErrorKind::NotHWellFounded,
             "state " + std::to_string(*v.reflexive_witness) + " is related to itself");
    }
    HSearch search(r, caps);
    if (start) {
        search.run_from(r.index(*start));
    } else {
        for (std::size_t i = 0; i < r.size(); ++i) search.run_from(i);
    }
    SequenceWitness w;
    for (std::size_t i : search.best()) w.items.push_back(r.state(i));
    w.length = w.items.size();
    return w;
}

HWellFoundedVerdict is_h_well_founded(const FiniteRelation& r) {
    for (const Edge& e : r.edges()) {
        if (e.first == e.second) return {false, e.first};
    }
    return {true, std::nullopt};
}

}  // namespace tinv

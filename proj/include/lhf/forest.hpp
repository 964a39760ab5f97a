#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace lhf {

/// Dense identifier of one unique immutable property set within one forest
/// instance. Index 0 always denotes the empty set.
using Index = std::uint64_t;
inline constexpr Index kEmptySetIndex = 0;

enum class OpKind : int {
    Union = 0,
    Intersection = 1,
    Difference = 2,
    InsertElement = 3,
    RemoveElement = 4,
};
inline constexpr int kOpKindCount = 5;

inline const char *to_string(OpKind k) {
    switch (k) {
    case OpKind::Union: return "union";
    case OpKind::Intersection: return "intersection";
    case OpKind::Difference: return "difference";
    case OpKind::InsertElement: return "insert";
    case OpKind::RemoveElement: return "remove";
    }
    return "?";
}

/// Cache-style counters for one operation kind. Exactly one counter is
/// incremented per invocation, so their sum equals the invocation count.
struct OpStats {
    std::uint64_t hits = 0;         // operation found in the operation map
    std::uint64_t equal_hits = 0;   // operands equal (or the op is a no-op)
    std::uint64_t subset_hits = 0;  // answered from a recorded subset relation
    std::uint64_t empty_hits = 0;   // an empty operand made the result trivial
    std::uint64_t cold_misses = 0;  // computed, result content was new
    std::uint64_t edge_misses = 0;  // computed, result content already existed

    std::uint64_t invocations() const {
        return hits + equal_hits + subset_hits + empty_hits + cold_misses + edge_misses;
    }
};

struct StatsTable {
    std::array<OpStats, kOpKindCount> by_kind{};

    OpStats &operator[](OpKind k) { return by_kind[static_cast<int>(k)]; }
    const OpStats &operator[](OpKind k) const { return by_kind[static_cast<int>(k)]; }

    std::uint64_t total_invocations() const {
        std::uint64_t n = 0;
        for (const auto &s : by_kind)
            n += s.invocations();
        return n;
    }
};

/// Abstract interface over one forest instance (scalar or nested), used where
/// forests are wired together at runtime: nested child dispatch, construction
/// binding, and the workload engines.
class Forest {
public:
    virtual ~Forest() = default;

    virtual bool is_nested() const = 0;

    /// Memoized binary set operation (Union / Intersection / Difference).
    virtual Index apply(OpKind kind, Index a, Index b) = 0;

    /// Content digest of the set, independent of identifier assignment and of
    /// the storage engine. Cached per index.
    virtual std::uint64_t content_digest(Index a) = 0;

    virtual bool is_subset(Index a, Index b) = 0;
    virtual std::size_t set_size(Index a) = 0;

    /// Number of registered sets, including the empty set and evicted indices.
    virtual std::size_t set_count() const = 0;

    /// Logical storage proxy: total element slots currently materialized.
    virtual std::uint64_t stored_element_count() const = 0;
    virtual std::size_t memo_entry_count() const = 0;
    virtual std::size_t subset_entry_count() const = 0;

    virtual const StatsTable &stats() const = 0;

    virtual void evict(Index a) = 0;

    /// Checks every recorded subset pair and memo edge against the
    /// materialized contents. Returns false and fills `msg` on the first
    /// violation. Intended for tests and audits, not hot paths.
    virtual bool audit(std::string *msg) = 0;

    Index set_union(Index a, Index b) { return apply(OpKind::Union, a, b); }
    Index set_intersection(Index a, Index b) { return apply(OpKind::Intersection, a, b); }
    Index set_difference(Index a, Index b) { return apply(OpKind::Difference, a, b); }

    /// Identifier equality is content equality; this is the O(1) comparison
    /// the whole design exists to enable.
    static bool equal(Index a, Index b) { return a == b; }
};

} // namespace lhf

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lhf/errors.hpp"

namespace lhf {

/// Deduplicating store mapping unique immutable values to dense integer
/// identifiers and back.
///
/// Identifiers are assigned in insertion order starting at 0. A value, once
/// stored, never moves: storage holds one heap allocation per value, so the
/// reverse map can key by pointer into storage instead of holding a second
/// copy of the payload.
///
/// Single-writer. Concurrent read-only resolution of already-interned values
/// is fine; interleaving intern() with reads from other threads is not.
template <typename V, typename Hash = std::hash<V>, typename Eq = std::equal_to<V>>
class Interner {
public:
    using Id = std::uint64_t;

    Interner() = default;
    Interner(const Interner &) = delete;
    Interner &operator=(const Interner &) = delete;
    Interner(Interner &&) = default;
    Interner &operator=(Interner &&) = default;

    /// Returns (identifier, true) for a fresh value, (identifier, false) if a
    /// content-equal value is already present. The value is copied/moved only
    /// on a fresh insertion.
    template <typename U>
    std::pair<Id, bool> intern(U &&value) {
        auto it = ids_.find(&value);
        if (it != ids_.end())
            return {it->second, false};
        Id id = storage_.size();
        storage_.push_back(std::make_unique<V>(std::forward<U>(value)));
        ids_.emplace(storage_.back().get(), id);
        return {id, true};
    }

    /// Identifier of a content-equal value, if one is present.
    std::optional<Id> lookup(const V &value) const {
        auto it = ids_.find(&value);
        if (it == ids_.end())
            return std::nullopt;
        return it->second;
    }

    /// Read-only view of the stored value. Valid for the interner's lifetime.
    const V &resolve(Id id) const {
        check_range(id);
        if (!storage_[id])
            throw IndexError("identifier " + std::to_string(id) + " has no materialized value");
        return *storage_[id];
    }

    bool contains_id(Id id) const { return id < storage_.size(); }

    /// False after drop(id), true otherwise.
    bool is_materialized(Id id) const {
        check_range(id);
        return static_cast<bool>(storage_[id]);
    }

    /// Number of identifiers handed out, including dropped ones.
    std::size_t count() const { return storage_.size(); }

    /// Frees the stored value and removes its reverse-map entry. The
    /// identifier stays reserved; re-interning equal content later yields a
    /// new identifier. Identity semantics across drops are the caller's
    /// responsibility.
    void drop(Id id) {
        const V &v = resolve(id);
        auto it = ids_.find(&v);
        if (it != ids_.end() && it->second == id)
            ids_.erase(it);
        storage_[id].reset();
    }

    /// Re-attaches content to a dropped identifier. If equal content has been
    /// interned elsewhere in the meantime, that reverse mapping is kept.
    void reinstate(Id id, V value) {
        check_range(id);
        if (storage_[id])
            throw IndexError("identifier " + std::to_string(id) + " is already materialized");
        storage_[id] = std::make_unique<V>(std::move(value));
        ids_.emplace(storage_[id].get(), id); // no-op if an equal key exists
    }

private:
    struct DerefHash {
        Hash h;
        std::size_t operator()(const V *p) const { return h(*p); }
    };
    struct DerefEq {
        Eq eq;
        bool operator()(const V *a, const V *b) const { return eq(*a, *b); }
    };

    void check_range(Id id) const {
        if (id >= storage_.size())
            throw IndexError("identifier " + std::to_string(id) + " out of range (count " +
                             std::to_string(storage_.size()) + ")");
    }

    std::vector<std::unique_ptr<V>> storage_;
    std::unordered_map<const V *, Id, DerefHash, DerefEq> ids_;
};

} // namespace lhf

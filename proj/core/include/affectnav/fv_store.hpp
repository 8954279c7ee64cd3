/*
 * Copyright 2026 The affectnav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Favorite Value lexicon: like/dislike degrees in [-1, 1] for terms, with a
// shared default layer and per-persona personal layers.
//
// File format (UTF-8, one record per line, '#' starts a comment line):
//
//     <layer> TAB <term> TAB <value>
//
// where <layer> is "default" or a persona id.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace affectnav {

inline constexpr std::string_view kDefaultLayer = "default";

enum class Provenance { kPersonal, kDefault, kUnknown };

[[nodiscard]] std::string_view provenance_name(Provenance p) noexcept;

struct FvLookup {
    double value = 0.0;
    Provenance provenance = Provenance::kUnknown;

    friend bool operator==(const FvLookup&, const FvLookup&) = default;
};

class FvDatabase {
public:
    using Layer = std::map<std::string, double, std::less<>>;

    // Personal layer first when a persona is given, then the default layer,
    // then (0.0, unknown).
    [[nodiscard]] FvLookup lookup(std::string_view term, std::optional<std::string_view> persona = std::nullopt) const;

    // layer is kDefaultLayer or a persona id. Throws RangeError for |value| > 1
    // and std::invalid_argument for malformed terms or layer names.
    void upsert(std::string_view term, double value, std::string_view layer = kDefaultLayer);

    [[nodiscard]] const Layer& default_layer() const noexcept { return default_; }
    [[nodiscard]] const std::map<std::string, Layer, std::less<>>& personal_layers() const noexcept {
        return personal_;
    }
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return size() == 0; }

    // Visits every record, default layer first, then personas in id order.
    void for_each(const std::function<void(std::string_view layer, std::string_view term, double value)>& fn) const;

    friend bool operator==(const FvDatabase&, const FvDatabase&) = default;

private:
    Layer default_;
    std::map<std::string, Layer, std::less<>> personal_;
};

// Throws FormatError (with line number) on malformed lines, duplicate terms
// within a layer, or out-of-range values.
[[nodiscard]] FvDatabase parse_fv(std::istream& in);
[[nodiscard]] FvDatabase load_fv_file(const std::filesystem::path& path);
void write_fv(const FvDatabase& db, std::ostream& out);
// Writes to a sibling temp file and renames it over path.
void save_fv_file(const FvDatabase& db, const std::filesystem::path& path);

// Thread-safe, optionally file-backed store. Readers take immutable
// snapshots; writers are serialized and persist before publishing.
class FvStore {
public:
    FvStore() : db_(std::make_shared<const FvDatabase>()) {}
    explicit FvStore(FvDatabase db, std::filesystem::path backing_file = {});

    // Loads path if it exists; an absent file starts an empty store.
    [[nodiscard]] static std::shared_ptr<FvStore> open(const std::filesystem::path& path);

    [[nodiscard]] std::shared_ptr<const FvDatabase> snapshot() const;
    [[nodiscard]] FvLookup lookup(std::string_view term, std::optional<std::string_view> persona = std::nullopt) const;

    void upsert(std::string_view term, double value, std::string_view layer = kDefaultLayer);
    // Merges every record of other into the store in one persisted write.
    void merge(const FvDatabase& other);

    [[nodiscard]] const std::filesystem::path& backing_file() const noexcept { return path_; }

private:
    void publish(FvDatabase next);

    mutable std::shared_mutex mutex_;
    std::mutex write_mutex_;
    std::shared_ptr<const FvDatabase> db_;
    std::filesystem::path path_;
};

} // namespace affectnav

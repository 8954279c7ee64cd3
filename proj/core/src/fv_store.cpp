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

#include "affectnav/fv_store.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "affectnav/errors.hpp"

namespace affectnav {
namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s) {
        if (c == '\t' || c == '\n' || c == '\r') return false;
    }
    return true;
}

bool in_range(double v) { return std::isfinite(v) && v >= -1.0 && v <= 1.0; }

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    return out;
}

std::string format_value(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string_view provenance_name(Provenance p) noexcept {
    switch (p) {
    case Provenance::kPersonal: return "personal";
    case Provenance::kDefault: return "default";
    case Provenance::kUnknown: break;
    }
    return "unknown";
}

FvLookup FvDatabase::lookup(std::string_view term, std::optional<std::string_view> persona) const {
    if (persona) {
        if (const auto layer = personal_.find(*persona); layer != personal_.end()) {
            if (const auto it = layer->second.find(term); it != layer->second.end()) {
                return {it->second, Provenance::kPersonal};
            }
        }
    }
    if (const auto it = default_.find(term); it != default_.end()) return {it->second, Provenance::kDefault};
    return {0.0, Provenance::kUnknown};
}

void FvDatabase::upsert(std::string_view term, double value, std::string_view layer) {
    if (!in_range(value)) {
        throw RangeError("favorite value " + format_value(value) + " for '" + std::string(term) +
                         "' is outside [-1, 1]");
    }
    if (!valid_name(term)) throw std::invalid_argument("invalid term '" + std::string(term) + "'");
    if (!valid_name(layer)) throw std::invalid_argument("invalid layer '" + std::string(layer) + "'");
    Layer& target = layer == kDefaultLayer ? default_ : personal_[std::string(layer)];
    target.insert_or_assign(std::string(term), value);
}

std::size_t FvDatabase::size() const noexcept {
    std::size_t n = default_.size();
    for (const auto& [_, layer] : personal_) n += layer.size();
    return n;
}

void FvDatabase::for_each(
    const std::function<void(std::string_view layer, std::string_view term, double value)>& fn) const {
    for (const auto& [term, value] : default_) fn(kDefaultLayer, term, value);
    for (const auto& [persona, layer] : personal_) {
        for (const auto& [term, value] : layer) fn(persona, term, value);
    }
}

FvDatabase parse_fv(std::istream& in) {
    FvDatabase db;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        const auto fields = split_tabs(line);
        if (fields.size() != 3) {
            throw FormatError("expected 3 tab-separated fields, got " + std::to_string(fields.size()), line_no);
        }
        const auto layer = fields[0];
        const auto term = fields[1];
        if (layer.empty() || term.empty()) throw FormatError("empty layer or term", line_no);

        double value = 0.0;
        const auto* first = fields[2].data();
        const auto* last = first + fields[2].size();
        const auto res = std::from_chars(first, last, value);
        if (res.ec != std::errc{} || res.ptr != last) {
            throw FormatError("invalid value '" + std::string(fields[2]) + "'", line_no);
        }
        if (!in_range(value)) throw FormatError("value " + std::string(fields[2]) + " outside [-1, 1]", line_no);

        bool duplicate = false;
        if (layer == kDefaultLayer) {
            duplicate = db.default_layer().contains(term);
        } else if (const auto it = db.personal_layers().find(layer); it != db.personal_layers().end()) {
            duplicate = it->second.contains(term);
        }
        if (duplicate) {
            throw FormatError("duplicate term '" + std::string(term) + "' in layer '" + std::string(layer) + "'",
                              line_no);
        }
        db.upsert(term, value, layer);
    }
    return db;
}

FvDatabase load_fv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string(), 0);
    return parse_fv(in);
}

void write_fv(const FvDatabase& db, std::ostream& out) {
    db.for_each([&](std::string_view layer, std::string_view term, double value) {
        out << layer << '\t' << term << '\t' << format_value(value) << '\n';
    });
}

void save_fv_file(const FvDatabase& db, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << "# layer\tterm\tvalue\n";
        write_fv(db, out);
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

FvStore::FvStore(FvDatabase db, std::filesystem::path backing_file)
    : db_(std::make_shared<const FvDatabase>(std::move(db))), path_(std::move(backing_file)) {}

std::shared_ptr<FvStore> FvStore::open(const std::filesystem::path& path) {
    FvDatabase db;
    if (std::filesystem::exists(path)) db = load_fv_file(path);
    return std::make_shared<FvStore>(std::move(db), path);
}

std::shared_ptr<const FvDatabase> FvStore::snapshot() const {
    std::shared_lock lock(mutex_);
    return db_;
}

FvLookup FvStore::lookup(std::string_view term, std::optional<std::string_view> persona) const {
    return snapshot()->lookup(term, persona);
}

void FvStore::upsert(std::string_view term, double value, std::string_view layer) {
    std::lock_guard writer(write_mutex_);
    FvDatabase next = *snapshot();
    next.upsert(term, value, layer);
    publish(std::move(next));
}

void FvStore::merge(const FvDatabase& other) {
    std::lock_guard writer(write_mutex_);
    FvDatabase next = *snapshot();
    other.for_each([&](std::string_view layer, std::string_view term, double value) { next.upsert(term, value, layer); });
    publish(std::move(next));
}

void FvStore::publish(FvDatabase next) {
    if (!path_.empty()) save_fv_file(next, path_);
    auto fresh = std::make_shared<const FvDatabase>(std::move(next));
    std::unique_lock lock(mutex_);
    db_ = std::move(fresh);
}

} // namespace affectnav

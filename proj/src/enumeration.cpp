#include "gtwist/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gtwist/io.hpp"
#include "gtwist/recognizer.hpp"

namespace gtwist {

namespace {

void require_all_t5(const RotationSystem& rs, const char* who) {
    const int n = rs.n();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d)
                    for (Vertex e = d + 1; e < n; ++e)
                        if (!is_t5_subset(rs, {a, b, c, d, e}))
                            throw PreconditionError(
                                std::string(who) +
                                ": base has a five-vertex subsystem that is not T5");
}

// Backtracking extension of a base system by one vertex u=n.  The rotation
// of u is grown one vertex at a time (anchored at 0 to fix the cyclic
// representative); placing a vertex also fixes the gap where u enters its
// rotation.  Each five-subset {u,a,b,c,w} is checked the moment its last
// vertex w is placed.
class Extender {
public:
    explicit Extender(const RotationSystem& base)
        : base_(base), n_(base.n()), ext_(static_cast<size_t>(n_)), placed_(n_, 0) {}

    std::map<CanonicalKey, RotationSystem> run() {
        prefix_.reserve(static_cast<size_t>(n_));
        place(0);
        return std::move(found_);
    }

private:
    void place(Vertex w) {
        prefix_.push_back(w);
        placed_[w] = 1;
        const auto& row = base_.rotation(w);
        for (int gap = 0; gap < n_ - 1; ++gap) {
            auto& ext = ext_[w];
            ext.clear();
            ext.reserve(static_cast<size_t>(n_));
            ext.insert(ext.end(), row.begin(), row.begin() + gap + 1);
            ext.push_back(n_);
            ext.insert(ext.end(), row.begin() + gap + 1, row.end());
            if (new_subsets_ok(w)) descend();
        }
        placed_[w] = 0;
        prefix_.pop_back();
    }

    void descend() {
        if (static_cast<int>(prefix_.size()) == n_) {
            emit();
            return;
        }
        for (Vertex w = 0; w < n_; ++w)
            if (!placed_[w]) place(w);
    }

    bool new_subsets_ok(Vertex w) const {
        const int placed_before = static_cast<int>(prefix_.size()) - 1;
        if (placed_before < 3) return true;
        // All 3-subsets of the previously placed vertices, combined with w.
        for (int i = 0; i < placed_before; ++i)
            for (int j = i + 1; j < placed_before; ++j)
                for (int k = j + 1; k < placed_before; ++k)
                    if (!five_ok(prefix_[i], prefix_[j], prefix_[k], w)) return false;
        return true;
    }

    bool five_ok(Vertex a, Vertex b, Vertex c, Vertex d) const {
        std::array<Vertex, 4> old = {a, b, c, d};
        std::sort(old.begin(), old.end());
        int dense[/*label*/ 16];  // n_ <= 9, label range 0..n_
        std::array<Vertex, 5> members{};
        for (int i = 0; i < 4; ++i) {
            dense[old[i]] = i;
            members[i] = old[i];
        }
        members[4] = n_;
        std::array<std::array<Vertex, 4>, 5> rows{};
        for (int i = 0; i < 4; ++i) {
            int k = 0;
            for (Vertex entry : ext_[old[i]]) {
                if (entry == n_)
                    rows[i][k++] = 4;
                else if (entry == old[0] || entry == old[1] || entry == old[2] ||
                         entry == old[3]) {
                    if (entry != old[i]) rows[i][k++] = dense[entry];
                }
            }
        }
        int k = 0;
        for (Vertex entry : prefix_)
            if (entry == old[0] || entry == old[1] || entry == old[2] || entry == old[3])
                rows[4][k++] = dense[entry];
        return is_t5_rows(rows);
    }

    void emit() {
        std::vector<std::vector<Vertex>> rows;
        rows.reserve(static_cast<size_t>(n_) + 1);
        for (Vertex v = 0; v < n_; ++v) rows.push_back(ext_[v]);
        rows.push_back(prefix_);
        RotationSystem rs = RotationSystem::from_rows(std::move(rows));
        CanonicalKey key = canonical_key(rs);
        found_.emplace(std::move(key), std::move(rs));
    }

    const RotationSystem& base_;
    int n_;
    std::vector<std::vector<Vertex>> ext_;
    std::vector<char> placed_;
    std::vector<Vertex> prefix_;
    std::map<CanonicalKey, RotationSystem> found_;
};

}  // namespace

std::vector<RotationSystem> extend_all(const RotationSystem& base) {
    if (base.n() < 5) throw PreconditionError("extend_all: base must have at least 5 vertices");
    if (base.n() + 1 > kCanonicalKeyMaxN)
        throw PreconditionError("extend_all: extension would exceed the canonical-key bound");
    require_all_t5(base, "extend_all");
    auto found = Extender(base).run();
    std::vector<RotationSystem> out;
    out.reserve(found.size());
    for (auto& [key, rs] : found) out.push_back(std::move(rs));
    return out;
}

int Catalog::gt_count() const {
    int count = 0;
    for (const auto& e : entries)
        if (e.gt) ++count;
    return count;
}

std::vector<Catalog> build_catalogs(int n_max) {
    if (n_max < 5 || n_max > kEnumerationHardMaxN)
        throw PreconditionError("build_catalogs: n_max must lie in [5, " +
                                std::to_string(kEnumerationHardMaxN) + "]");
    std::vector<Catalog> catalogs;
    {
        Catalog c5;
        c5.n = 5;
        const RotationSystem& t5 = t5_rotation_system();
        c5.entries.push_back({canonical_key(t5), t5, true});
        catalogs.push_back(std::move(c5));
    }
    for (int n = 6; n <= n_max; ++n) {
        std::map<CanonicalKey, RotationSystem> pool;
        for (const CatalogEntry& entry : catalogs.back().entries)
            for (RotationSystem& ext : extend_all(entry.representative))
                pool.emplace(canonical_key(ext), std::move(ext));
        Catalog catalog;
        catalog.n = n;
        for (auto& [key, rs] : pool) {
            const bool gt_abstract = recognize_abstract(rs).gt;
            const bool gt_realizable = recognize_realizable(rs).gt;
            if (gt_abstract != gt_realizable)
                throw std::logic_error("build_catalogs: recognizers disagree at n=" +
                                       std::to_string(n));
            catalog.entries.push_back({key, std::move(rs), gt_abstract});
        }
        catalogs.push_back(std::move(catalog));
    }
    return catalogs;
}

RotationSystem derive_exceptional_k6() {
    std::vector<RotationSystem> exceptional;
    for (const RotationSystem& ext : extend_all(t5_rotation_system()))
        if (!recognize_abstract(ext).gt) exceptional.push_back(ext);
    if (exceptional.size() != 1)
        throw std::logic_error("derive_exceptional_k6: expected exactly one non-GT class, got " +
                               std::to_string(exceptional.size()));
    return exceptional.front();
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& dir,
                  const std::string& run_id) {
    const std::filesystem::path sub = dir / ("n" + std::to_string(catalog.n));
    std::filesystem::create_directories(sub);
    std::ostringstream reps;
    std::ostringstream index;
    reps << "# catalog n=" << catalog.n << ": " << catalog.entries.size() << " classes, "
         << catalog.gt_count() << " generalized twisted\n";
    for (size_t i = 0; i < catalog.entries.size(); ++i) {
        const CatalogEntry& e = catalog.entries[i];
        reps << "# entry " << i << " key=" << e.key.to_hex() << " gt=" << (e.gt ? 1 : 0)
             << "\n";
        reps << serialize(e.representative);
    }
    for (const CatalogEntry& e : catalog.entries)
        index << e.key.to_hex() << "\t" << (e.gt ? "gt" : "not-gt") << "\t" << run_id << "\n";
    write_text_file((sub / "representatives.rs.txt").string(), reps.str());
    write_text_file((sub / "index.tsv").string(), index.str());
}

Catalog load_catalog(const std::filesystem::path& dir, int n) {
    const std::filesystem::path sub = dir / ("n" + std::to_string(n));
    std::ifstream reps(sub / "representatives.rs.txt");
    if (!reps) throw ParseError("cannot open " + (sub / "representatives.rs.txt").string(), 0);

    // Blocks are delimited by "# entry" marker lines.
    std::vector<std::string> blocks;
    std::string line, current;
    bool in_block = false;
    while (std::getline(reps, line)) {
        if (line.rfind("# entry", 0) == 0) {
            if (in_block) blocks.push_back(current);
            current.clear();
            in_block = true;
            continue;
        }
        if (in_block) current += line + "\n";
    }
    if (in_block) blocks.push_back(current);

    std::ifstream index(sub / "index.tsv");
    if (!index) throw ParseError("cannot open " + (sub / "index.tsv").string(), 0);
    std::vector<std::pair<std::string, bool>> rows;
    while (std::getline(index, line)) {
        if (line.empty()) continue;
        std::istringstream iss(line);
        std::string key_hex, verdict;
        std::getline(iss, key_hex, '\t');
        std::getline(iss, verdict, '\t');
        rows.emplace_back(key_hex, verdict == "gt");
    }
    if (rows.size() != blocks.size())
        throw ParseError("catalog index and representatives disagree in length", 0);

    Catalog catalog;
    catalog.n = n;
    for (size_t i = 0; i < blocks.size(); ++i) {
        ParsedRotationSystem parsed = parse_rotation_system(blocks[i]);
        if (parsed.rs.n() != n) throw ParseError("catalog entry has wrong vertex count", 0);
        CanonicalKey key = canonical_key(parsed.rs);
        if (key.to_hex() != rows[i].first)
            throw ParseError("catalog entry key mismatch (corrupted catalog?)", 0);
        catalog.entries.push_back({std::move(key), std::move(parsed.rs), rows[i].second});
    }
    return catalog;
}

}  // namespace gtwist

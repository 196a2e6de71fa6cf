#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gtwist/canonical.hpp"
#include "gtwist/rotation_system.hpp"

namespace gtwist {

inline constexpr int kEnumerationDefaultMaxN = 8;
inline constexpr int kEnumerationHardMaxN = 9;

// All rotation systems on n+1 vertices, up to relabeling and inversion, that
// restrict to `base` on the old vertices and whose five-vertex subsystems are
// all T5.  Backtracking over the new vertex's rotation and its insertion gap
// in every old rotation, pruning as soon as a completed five-subset is not
// T5.  Pre: every five-vertex subsystem of base is T5 (checked).
std::vector<RotationSystem> extend_all(const RotationSystem& base);

struct CatalogEntry {
    CanonicalKey key;
    RotationSystem representative;
    bool gt;
};

// All weak-isomorphism classes with every five-vertex subsystem equal to T5,
// one representative each, sorted by canonical key.
struct Catalog {
    int n = 0;
    std::vector<CatalogEntry> entries;

    int gt_count() const;
};

// Catalogs for n = 5..n_max, grown by iterated extension from T5.
std::vector<Catalog> build_catalogs(int n_max);

// The unique six-vertex class whose five-vertex subsystems are all T5 but
// which is not generalized twisted.  Throws std::logic_error if the
// enumeration does not produce exactly one such class.
RotationSystem derive_exceptional_k6();

// Persists to dir/n{N}/representatives.rs.txt and dir/n{N}/index.tsv
// (key, verdict, run id).  Deterministic output for a fixed catalog.
void save_catalog(const Catalog& catalog, const std::filesystem::path& dir,
                  const std::string& run_id);
Catalog load_catalog(const std::filesystem::path& dir, int n);

}  // namespace gtwist

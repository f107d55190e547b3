#pragma once
#include <cstdint>
#include <map>
#include <vector>

#include "pdim/graph.hpp"

namespace pdim {

// A tuple assignment vertex -> N^l. Valid for a graph when it is injective,
// adjacent vertices disagree in every coordinate, and non-adjacent vertices
// agree somewhere (and, by injectivity, not everywhere).
class Encoding {
 public:
  Encoding() = default;
  Encoding(std::vector<int> ids, int length);  // zero-filled; length >= 1

  int length() const { return len_; }
  int n() const { return static_cast<int>(ids_.size()); }
  const std::vector<int>& ids() const { return ids_; }
  int id_at(int idx) const { return ids_[idx]; }
  bool contains(int id) const;
  int index_of(int id) const;  // throws UnknownVertex

  std::int32_t get(int id, int coord) const { return row(index_of(id))[coord]; }
  void set(int id, int coord, std::int32_t v) { row(index_of(id))[coord] = v; }
  const std::int32_t* row(int idx) const { return codes_.data() + static_cast<size_t>(idx) * len_; }
  std::int32_t* row(int idx) { return codes_.data() + static_cast<size_t>(idx) * len_; }

  std::int32_t max_symbol() const;  // -1 when empty

  bool operator==(const Encoding& o) const = default;

 private:
  std::vector<int> ids_;  // sorted ascending
  int len_ = 0;
  std::vector<std::int32_t> codes_;
};

enum class ViolationKind { NotInjective, EdgeAgrees, NonEdgeDisagreesEverywhere };

struct Violation {
  ViolationKind kind;
  int u, v;   // vertex ids, u < v
  int coord;  // agreeing coordinate for EdgeAgrees, else -1
};

struct VerifyReport {
  bool valid = true;
  std::vector<Violation> violations;     // capped
  long long violation_count = 0;         // total, beyond the cap
  long long pairs_scanned = 0;
};

// Scans every pair for the verdict; records violations up to cap.
// Throws DomainMismatch when e's domain differs from g's vertex set.
VerifyReport verify_encoding(const Graph& g, const Encoding& e, std::size_t cap = 100);

// Extend to q coordinates by replicating the last one (q >= length).
Encoding pad_encoding(const Encoding& e, int q);

// Injective rename of one coordinate's symbols. Symbols absent from the
// mapping stay put; the induced total map must be injective on the symbols
// that occur (throws NonInjectiveMapping).
Encoding rename_coordinate(const Encoding& e, int coord,
                           const std::map<std::int32_t, std::int32_t>& mapping);

// Per-coordinate injective rename sending each target vertex's symbol to its
// prescribed value (so each target's row becomes a constant tuple) and every
// other symbol out of the prescribed range by offsetting it with
// n + max prescribed value. Throws TargetsClashInCoordinate when two targets
// share a symbol in some coordinate.
Encoding align_on_subset(const Encoding& e, const std::map<int, std::int32_t>& targets);

// First coordinate uses only colors {0..chi-1}.
bool is_well_begun(const Graph& g, const Encoding& e, int chi);

}  // namespace pdim

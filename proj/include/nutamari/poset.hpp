#ifndef NUTAMARI_POSET_HPP_
#define NUTAMARI_POSET_HPP_

// Finite posets given by their Hasse diagram. Every guise of the nu-Tamari
// lattice is turned into one of these so that lattice properties and
// isomorphisms can be checked by brute force on the same footing.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace nutamari {

using Relation = std::pair<std::size_t, std::size_t>;  // (lower, upper)

class FinitePoset {
 public:
  // The poset generated by `relations` under reflexive-transitive closure.
  // Labels must be distinct. Throws std::invalid_argument on a cycle, an
  // out-of-range index or a duplicate label.
  FinitePoset(std::vector<std::string> labels, std::span<const Relation> relations);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  // Transitive reduction of the order, sorted.
  const std::vector<Relation>& covers() const { return covers_; }
  bool is_cover(std::size_t lower, std::size_t upper) const;
  std::vector<std::size_t> upper_covers(std::size_t i) const;
  std::vector<std::size_t> lower_covers(std::size_t i) const;

  bool less_equal(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  const boost::dynamic_bitset<>& up_set(std::size_t i) const { return up_[i]; }
  const boost::dynamic_bitset<>& down_set(std::size_t i) const { return down_[i]; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Relation> covers_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<boost::dynamic_bitset<>> down_;
};

enum class BoundStatus {
  kUnique,     // exactly one greatest lower (least upper) bound
  kNone,       // no common lower (upper) bound at all
  kAmbiguous,  // common bounds exist but several are maximal (minimal)
};

struct Bound {
  BoundStatus status = BoundStatus::kNone;
  std::size_t element = 0;  // meaningful only when status == kUnique

  explicit operator bool() const { return status == BoundStatus::kUnique; }
};

Bound meet(const FinitePoset& poset, std::size_t a, std::size_t b);
Bound join(const FinitePoset& poset, std::size_t a, std::size_t b);

// Non-empty and every pair has a unique meet and a unique join.
bool is_lattice(const FinitePoset& poset);

FinitePoset dual(const FinitePoset& poset);

// True if `map` (indexed by elements of `from`) is a bijection onto `to` that
// sends covers to covers and non-covers to non-covers.
bool isomorphic_via(const FinitePoset& from, const FinitePoset& to,
                    std::span<const std::size_t> map);

// Same, with the map given on labels.
bool isomorphic_via_labels(const FinitePoset& from, const FinitePoset& to,
                           const std::vector<std::string>& image_labels);

// Graphviz digraph, one node per element and one edge per cover, drawn
// bottom to top.
std::string hasse_dot(const FinitePoset& poset);

}  // namespace nutamari

#endif  // NUTAMARI_POSET_HPP_

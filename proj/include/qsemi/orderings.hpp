#pragma once

// Weak orderings on [k], the projection/max tables they generate, and the
// recovery of an ordering from preimage counts.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "qsemi/table.hpp"

namespace qsemi {

  //! An ordered partition of [k]: blocks listed from least to greatest, each
  //! block sorted ascending. Two weak orderings are equal iff they have the
  //! same canonical form.
  class WeakOrdering {
   public:
    WeakOrdering() = default;  // the unique ordering on the empty set

    //! Throws InvalidOrdering unless the blocks partition [k].
    static WeakOrdering from_blocks(std::size_t                       k,
                                    std::vector<std::vector<Element>> blocks);
    //! level[x] is the block index of x; the levels used must be 0..b-1.
    static WeakOrdering from_levels(std::span<std::size_t const> level);
    //! order[0] is the least element.
    static WeakOrdering total(std::span<Element const> order);

    [[nodiscard]] std::size_t carrier_size() const noexcept {
      return _level.size();
    }
    [[nodiscard]] std::size_t block_count() const noexcept {
      return _blocks.size();
    }
    [[nodiscard]] std::vector<std::vector<Element>> const&
    blocks() const noexcept {
      return _blocks;
    }
    [[nodiscard]] std::size_t level(Element x) const noexcept {
      return _level[x];
    }
    [[nodiscard]] bool less_equal(Element x, Element y) const noexcept {
      return _level[x] <= _level[y];
    }
    [[nodiscard]] bool is_total() const noexcept {
      return _blocks.size() == _level.size();
    }
    //! All elements, least block first.
    [[nodiscard]] std::vector<Element> elements_in_order() const;

    bool operator==(WeakOrdering const&) const = default;

   private:
    std::vector<std::vector<Element>> _blocks;
    std::vector<std::size_t>          _level;
  };

  inline bool is_total(WeakOrdering const& w) noexcept {
    return w.is_total();
  }

  //! Streams every weak ordering of [k] exactly once: by number of blocks,
  //! then by the level vector (level of 1, ..., level of k) in lexicographic
  //! order. Restartable via reset().
  class WeakOrderingGenerator {
   public:
    explicit WeakOrderingGenerator(std::size_t k);

    std::optional<WeakOrdering> next();
    void                        reset();

   private:
    bool advance();

    std::size_t              _k;
    std::size_t              _blocks;
    std::vector<std::size_t> _level;
    bool                     _started;
    bool                     _done;
  };

  std::vector<WeakOrdering> all_weak_orderings(std::size_t k);

  //! max^n for w. Throws PartialOperation naming the first tuple (1-based)
  //! whose maximal elements are not unique.
  OperationTable max_n(WeakOrdering const& w, std::size_t n);

  enum class Projection { first, second };

  //! A weak ordering and a projection per block. Selectors of singleton
  //! blocks are normalised to first.
  class KimuraSpec {
   public:
    //! Throws InvalidSpec if choices.size() != w.block_count().
    KimuraSpec(WeakOrdering w, std::vector<Projection> choices);

    [[nodiscard]] WeakOrdering const& ordering() const noexcept {
      return _ordering;
    }
    [[nodiscard]] std::vector<Projection> const& choices() const noexcept {
      return _choices;
    }

    bool operator==(KimuraSpec const&) const = default;

   private:
    WeakOrdering            _ordering;
    std::vector<Projection> _choices;
  };

  //! Every spec over w: 2^(number of non-singleton blocks) of them, with the
  //! choice vectors in binary counting order (first < second, last block
  //! fastest).
  std::vector<KimuraSpec> kimura_specs(WeakOrdering const& w);

  //! The binary table acting as the chosen projection inside each block and
  //! as the max across blocks.
  OperationTable build_kimura(KimuraSpec const& spec);

  //! The per-block selectors if g has the projection/max form for w.
  std::optional<std::vector<Projection>> matches_kimura(OperationTable const& g,
                                                        WeakOrdering const& w);

  //! matches_kimura against the ordering recovered from g's preimages.
  std::optional<KimuraSpec> match_kimura(OperationTable const& g);

  //! Groups elements by preimage count; blocks by increasing count.
  WeakOrdering ordering_from_preimages(OperationTable const& table);

}  // namespace qsemi

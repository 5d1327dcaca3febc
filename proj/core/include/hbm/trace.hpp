#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hbm/hypergraph.hpp"
#include "hbm/signature.hpp"

namespace hbm::trace {

struct AugmentBegin {
  VertexId root;
};
struct IterationBegin {
  std::uint64_t iteration;
  std::size_t layers;
};
struct Signature {
  std::uint64_t iteration;
  SignatureVector value;
};
struct LayerBuilt {
  std::uint64_t iteration;
  std::size_t layer;
  std::size_t x;
  std::size_t y;
  std::size_t y_below;  // |Y_{<=l}| including the root
  bool growth_ok;
};
struct Collapse {
  std::uint64_t iteration;
  std::size_t layer;
  std::size_t swaps;
  bool root_matched;
};
struct SuperposedBuild {
  std::uint64_t iteration;
  std::size_t layer;
  std::size_t x_before;
  std::size_t x_after;
  bool committed;
};
struct IterationEnd {
  std::uint64_t iteration;
  std::size_t layers;
};
struct Witness {
  std::uint64_t iteration;
  std::size_t s_size;
  std::size_t hitting_set_size;
};
struct AugmentEnd {
  VertexId root;
  bool matched;
  std::uint64_t iterations;
};

using Event = std::variant<AugmentBegin, IterationBegin, Signature, LayerBuilt, Collapse,
                           SuperposedBuild, IterationEnd, Witness, AugmentEnd>;

/// Receives events in the order they happen.
class Sink {
 public:
  virtual ~Sink() = default;
  virtual void emit(const Event& event) = 0;
};

/// Keeps every event; handy in tests.
class Recorder final : public Sink {
 public:
  void emit(const Event& event) override { events.push_back(event); }
  std::vector<Event> events;
};

}  // namespace hbm::trace

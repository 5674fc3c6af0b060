// Deliberate, selectable defects for exercising the checker. Test hook
// only: production callers leave Mutation::None in place.
#pragma once

namespace dcsort {

enum class Mutation {
  None,
  CombineSkip,          // recursive merge sort: combine phase does nothing
  FpReturnsLeft,        // partition-point search always answers the left edge
  MergeIterNoDrain,     // two-pointer merge stops when either input runs out
  MergePairNoCopyBack,  // pair merge computes the merge but never writes it back
  PartitionNoExchange,  // quicksort partition reports m = l without moving data
};

inline const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::CombineSkip: return "combine-skip";
    case Mutation::FpReturnsLeft: return "fp-returns-left";
    case Mutation::MergeIterNoDrain: return "merge-iter-no-drain";
    case Mutation::MergePairNoCopyBack: return "merge-pair-no-copy-back";
    case Mutation::PartitionNoExchange: return "partition-no-exchange";
  }
  return "unknown";
}

}  // namespace dcsort

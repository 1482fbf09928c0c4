#pragma once

namespace fcperm {

// Explosion guards for the enumerating operations. Exceeding one raises
// LimitExceeded; nothing is ever silently truncated.
struct Limits {
  int max_word_length = 12;   // all_reduced_words / commutation_classes
  int max_heap_size = 16;     // labeled_linear_extensions
  int max_degree = 9;         // build_fc_poset / uncrowded_frontier / enumerate
  int max_ideal_length = 36;  // principal_ideal (36 = longest element of S_9)
};

}  // namespace fcperm

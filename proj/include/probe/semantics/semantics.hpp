#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "probe/parametric/weight_table.hpp"
#include "probe/semantics/configuration.hpp"

namespace probe::semantics {

using parametric::WeightId;

enum class Action : uint8_t { None, Left, Right };

struct Successor {
  WeightId weight;
  Configuration target;
};

struct Branch {
  Action action = Action::None;
  std::vector<Successor> successors;
};

/// Enabled actions of a configuration with their distributions. A
/// nondeterministic choice yields exactly {Left, Right}; everything else
/// yields a single None branch.
using StepResult = std::vector<Branch>;

/// One-step successor function of the operational semantics. The program
/// must be validated. Weights are interned into the shared table.
class Semantics {
 public:
  Semantics(std::shared_ptr<const frontend::Program> program,
            std::shared_ptr<parametric::WeightTable> weights = nullptr);

  const frontend::Program& program() const { return *program_; }
  const std::shared_ptr<const frontend::Program>& program_ptr() const { return program_; }
  parametric::WeightTable& weights() const { return *weights_; }
  const std::shared_ptr<parametric::WeightTable>& weights_ptr() const { return weights_; }

  Configuration initial() const { return initial_configuration(*program_); }

  /// Throws ModelError for an empty unif range or integer overflow.
  StepResult step(const Configuration& config) const;

 private:
  WeightId uniform_weight(uint64_t n) const;

  std::shared_ptr<const frontend::Program> program_;
  std::shared_ptr<parametric::WeightTable> weights_;
  struct ChoiceWeights {
    WeightId left = parametric::WeightTable::kOne;   // g
    WeightId right = parametric::WeightTable::kOne;  // 1 - g
    bool left_zero = false;
    bool right_zero = false;
  };

  /// Indexed by statement id; only probabilistic choices are filled in.
  std::vector<ChoiceWeights> choice_weights_;
  mutable std::mutex uniform_mutex_;
  mutable std::unordered_map<uint64_t, WeightId> uniform_weights_;
};

std::string to_string(Action action);

}  // namespace probe::semantics

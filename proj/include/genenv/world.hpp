#ifndef GENENV_WORLD_HPP
#define GENENV_WORLD_HPP

#include <string>
#include <vector>

#include "genenv/config.hpp"
#include "genenv/rng.hpp"

namespace genenv {

struct AgentPolicy; // agent.hpp

enum class EvalSpec { ExactSequence, TokenOverlap };

// The synthetic task universe. A task of difficulty d asks the agent to emit
// the correct action for each of d contexts; the per-run truth map is frozen
// at world creation.
struct WorldSpec {
    int num_contexts = 16;
    int alphabet_size = 8;
    int max_difficulty = 12;
    double structured_fraction = 1.0;
    std::vector<int> truth_map; // context id -> correct action id
};

WorldSpec make_world(const CurriculumConfig& cfg, RngStream& rng);

struct TaskInstance {
    std::string task_id;
    int difficulty = 1;
    std::vector<int> step_contexts;
    std::vector<int> target_action;
    bool structured = true;
    EvalSpec eval_spec = EvalSpec::ExactSequence;
};

// Fresh task: d contexts drawn uniformly, targets from the truth map.
TaskInstance make_task(const WorldSpec& world, int difficulty, const std::string& task_id,
                       RngStream& rng);

struct TaskBatch {
    std::string batch_id;
    TaskInstance seed_task;
    std::vector<TaskInstance> variations; // all share the seed's difficulty
};

// Normalized token F1 over the multiset intersection. Symmetric, in [0,1],
// 1 exactly on equal token multisets. Throws on empty ref.
double similarity(const std::vector<std::string>& pred, const std::vector<std::string>& ref);

// Structured: exact-sequence indicator (arity mismatch scores 0).
// Unstructured: token F1 of the stringified action ids.
double agent_reward(const std::vector<int>& prediction, const TaskInstance& task);

// Closed-form success probability: product over steps of the policy's
// probability of the correct action. Only defined for structured tasks.
double true_success_prob(const TaskInstance& task, const AgentPolicy& policy);

} // namespace genenv

#endif

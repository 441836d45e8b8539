#ifndef GENENV_AGENT_HPP
#define GENENV_AGENT_HPP

#include <string>
#include <vector>

#include "genenv/rng.hpp"
#include "genenv/world.hpp"

namespace genenv {

// Player 1: per-context softmax policy over the action alphabet.
struct AgentPolicy {
    int num_contexts = 0;
    int alphabet_size = 0;
    std::vector<double> logits; // row-major, num_contexts x alphabet_size
    long update_count = 0;

    double& logit(int context, int action) {
        return logits[static_cast<size_t>(context) * static_cast<size_t>(alphabet_size) +
                      static_cast<size_t>(action)];
    }
    double logit(int context, int action) const {
        return logits[static_cast<size_t>(context) * static_cast<size_t>(alphabet_size) +
                      static_cast<size_t>(action)];
    }
    std::vector<double> action_probs(int context) const; // softmax of the row
};

AgentPolicy make_agent(int num_contexts, int alphabet_size); // uniform start

struct TraceStep {
    int context = 0;
    int action = 0;
    double log_prob = 0.0;
};

// One rollout record; the unit stored in the agent training pool.
struct Trace {
    std::string task_ref;
    std::vector<TraceStep> trajectory;
    std::vector<int> prediction;
    double reward = 0.0;
    bool valid = true;
};

struct GroupRollout {
    std::string task_ref; // batch-level reference
    std::vector<Trace> traces;
    std::vector<double> rewards;
    std::vector<double> advantages;
};

// Samples one action per step, records log-probabilities, scores the result.
Trace rollout(const AgentPolicy& policy, const TaskInstance& task, RngStream& rng);

// Group-relative advantages (r - mean)/(std + eps); all zeros when std == 0.
std::vector<double> group_advantages(const std::vector<double>& rewards, double epsilon);

// Score-function ascent on the groups, in sorted task_ref order. Each group's
// accumulated gradient is normalized by its trace count before the lr step.
void agent_update(AgentPolicy& policy, const std::vector<GroupRollout>& groups, double lr);

// Reward-weighted imitation of replayed traces: gradient weighted by each
// trace's stored reward, no advantage recomputation against the current policy.
void replay_update(AgentPolicy& policy, const std::vector<Trace>& traces, double lr);

// Mean reward over reps rollouts per task.
double evaluate(const AgentPolicy& policy, const std::vector<TaskInstance>& eval_set,
                RngStream& rng, int reps);

void save_agent(const AgentPolicy& policy, const std::string& path);
AgentPolicy load_agent(const std::string& path);

} // namespace genenv

#endif

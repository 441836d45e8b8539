#include "genenv/world.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "genenv/agent.hpp"

namespace genenv {

WorldSpec make_world(const CurriculumConfig& cfg, RngStream& rng) {
    WorldSpec w;
    w.num_contexts = cfg.num_contexts;
    w.alphabet_size = cfg.alphabet_size;
    w.max_difficulty = cfg.max_difficulty;
    w.structured_fraction = cfg.structured_fraction;
    w.truth_map.resize(static_cast<size_t>(w.num_contexts));
    for (auto& a : w.truth_map)
        a = static_cast<int>(rng.next_below(static_cast<uint64_t>(w.alphabet_size)));
    return w;
}

TaskInstance make_task(const WorldSpec& world, int difficulty, const std::string& task_id,
                       RngStream& rng) {
    if (difficulty < 1 || difficulty > world.max_difficulty)
        throw std::invalid_argument("make_task: difficulty " + std::to_string(difficulty) +
                                    " outside [1," + std::to_string(world.max_difficulty) + "]");
    TaskInstance t;
    t.task_id = task_id;
    t.difficulty = difficulty;
    t.step_contexts.reserve(static_cast<size_t>(difficulty));
    t.target_action.reserve(static_cast<size_t>(difficulty));
    for (int s = 0; s < difficulty; ++s) {
        int c = static_cast<int>(rng.next_below(static_cast<uint64_t>(world.num_contexts)));
        t.step_contexts.push_back(c);
        t.target_action.push_back(world.truth_map[static_cast<size_t>(c)]);
    }
    t.structured = world.structured_fraction >= 1.0 ? true
                                                    : rng.next_bernoulli(world.structured_fraction);
    t.eval_spec = t.structured ? EvalSpec::ExactSequence : EvalSpec::TokenOverlap;
    return t;
}

double similarity(const std::vector<std::string>& pred, const std::vector<std::string>& ref) {
    if (ref.empty()) throw std::invalid_argument("similarity: empty reference, recall undefined");
    if (pred.empty()) return 0.0;
    std::map<std::string, int> counts;
    for (const auto& tok : ref) ++counts[tok];
    int overlap = 0;
    for (const auto& tok : pred) {
        auto it = counts.find(tok);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++overlap;
        }
    }
    if (overlap == 0) return 0.0;
    double precision = static_cast<double>(overlap) / static_cast<double>(pred.size());
    double recall = static_cast<double>(overlap) / static_cast<double>(ref.size());
    return 2.0 * precision * recall / (precision + recall);
}

double agent_reward(const std::vector<int>& prediction, const TaskInstance& task) {
    if (task.structured) {
        if (prediction.size() != task.target_action.size()) return 0.0;
        return prediction == task.target_action ? 1.0 : 0.0;
    }
    auto stringify = [](const std::vector<int>& xs) {
        std::vector<std::string> out;
        out.reserve(xs.size());
        for (int x : xs) out.push_back(std::to_string(x));
        return out;
    };
    return similarity(stringify(prediction), stringify(task.target_action));
}

double true_success_prob(const TaskInstance& task, const AgentPolicy& policy) {
    if (!task.structured)
        throw std::invalid_argument("true_success_prob: oracle defined for structured tasks only");
    if (task.difficulty < 1 || task.step_contexts.empty())
        throw std::invalid_argument("true_success_prob: difficulty must be >= 1");
    double p = 1.0;
    for (size_t s = 0; s < task.step_contexts.size(); ++s) {
        int c = task.step_contexts[s];
        std::vector<double> probs = policy.action_probs(c);
        p *= probs[static_cast<size_t>(task.target_action[s])];
    }
    return p;
}

} // namespace genenv

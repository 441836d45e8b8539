#ifndef GENENV_CONFIG_HPP
#define GENENV_CONFIG_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace genenv {

// Run configuration. Documented defaults; every field is overridable from the
// flat JSON config file (see README for the schema).
struct CurriculumConfig {
    // curriculum reward and filter
    double alpha = 0.5;   // target success rate
    double beta = 4.0;    // bell sharpness, reward at p_hat=0 is e^-1
    double k_min = 0.1;   // difficulty filter half-width
    double lambda = 1.0;  // RWR temperature

    // optimization
    double agent_lr = 0.275;
    double env_lr_or_mix = 1.0;  // RWR mix fraction toward the fitted target
    int epochs = 10;
    int batch_size = 64;   // task batches per epoch
    int group_size = 8;    // variations per batch = rollouts per GRPO group
    uint64_t seed = 42;
    double kl_weight = 0.02;  // pull toward the initial simulator
    double kl_cap = 1.0;      // max KL(new||old) per environment update, nats

    // task world
    int num_contexts = 16;
    int alphabet_size = 8;
    int max_difficulty = 12;
    double structured_fraction = 1.0;

    // environment exploration
    double init_difficulty_decay = 3.0;  // phi0[d] = -decay*(d-1)
    double env_explore_up = 0.48;        // neighbor-kernel mass toward harder tasks
    double env_explore_down = 0.05;      // and toward easier tasks

    // agent pool replay
    double replay_fraction = 0.0;

    // held-out evaluation
    int eval_tasks_per_difficulty = 6;
    int eval_reps = 6;
};

// Throws std::invalid_argument naming the violated bound.
void validate_config(const CurriculumConfig& cfg);

CurriculumConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const CurriculumConfig& cfg);

// Parses and validates a JSON config file. Missing keys take the defaults
// above; unknown keys are rejected with the offending key path.
CurriculumConfig load_config(const std::string& path);
void save_config(const CurriculumConfig& cfg, const std::string& path);

// FNV-1a digest of the canonical (sorted-key) serialization.
std::string config_digest(const CurriculumConfig& cfg);

} // namespace genenv

#endif

#include "genenv/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "genenv/rng.hpp"

namespace genenv {

namespace {

[[noreturn]] void reject(const std::string& what) {
    throw std::invalid_argument("config: " + what);
}

} // namespace

void validate_config(const CurriculumConfig& c) {
    if (!(c.alpha > 0.0 && c.alpha < 1.0)) reject("alpha must lie in (0,1)");
    if (!(c.beta > 0.0)) reject("beta must be positive");
    if (!(c.k_min >= 0.0 && c.k_min < 1.0)) reject("k_min must lie in [0,1)");
    double band = std::min(c.alpha, 1.0 - c.alpha);
    if (!(c.k_min < band)) reject("k_min must be < min(alpha, 1-alpha), band is degenerate");
    if (!(c.lambda > 0.0)) reject("lambda must be positive");
    if (!(c.agent_lr > 0.0)) reject("agent_lr must be positive");
    if (!(c.env_lr_or_mix > 0.0 && c.env_lr_or_mix <= 1.0)) reject("env_lr_or_mix must lie in (0,1]");
    if (c.epochs < 1) reject("epochs must be >= 1");
    if (c.batch_size < 1) reject("batch_size must be >= 1");
    if (c.group_size < 2) reject("group_size must be >= 2, group statistics need two samples");
    if (!(c.kl_weight >= 0.0)) reject("kl_weight must be non-negative");
    if (!(c.kl_cap > 0.0)) reject("kl_cap must be positive");
    if (c.num_contexts < 1) reject("num_contexts must be >= 1");
    if (c.alphabet_size < 2) reject("alphabet_size must be >= 2");
    if (c.max_difficulty < 1) reject("max_difficulty must be >= 1");
    if (!(c.structured_fraction >= 0.0 && c.structured_fraction <= 1.0))
        reject("structured_fraction must lie in [0,1]");
    if (!(c.init_difficulty_decay >= 0.0)) reject("init_difficulty_decay must be non-negative");
    if (!(c.env_explore_up >= 0.0 && c.env_explore_down >= 0.0))
        reject("env_explore_up/down must be non-negative");
    if (!(c.env_explore_up * 4.0 / 3.0 + c.env_explore_down <= 1.0))
        reject("exploration kernel mass exceeds 1: need 4/3*env_explore_up + env_explore_down <= 1");
    if (!(c.replay_fraction >= 0.0 && c.replay_fraction <= 1.0))
        reject("replay_fraction must lie in [0,1]");
    if (c.eval_tasks_per_difficulty < 1) reject("eval_tasks_per_difficulty must be >= 1");
    if (c.eval_reps < 1) reject("eval_reps must be >= 1");
}

CurriculumConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) reject("top level must be a JSON object");

    static const std::set<std::string> known = {
        "alpha", "beta", "k_min", "lambda", "agent_lr", "env_lr_or_mix",
        "epochs", "batch_size", "group_size", "seed", "kl_weight", "kl_cap",
        "num_contexts", "alphabet_size", "max_difficulty", "structured_fraction",
        "init_difficulty_decay", "env_explore_up", "env_explore_down",
        "replay_fraction", "eval_tasks_per_difficulty", "eval_reps",
    };
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) reject("unknown key '" + it.key() + "'");

    CurriculumConfig c;
    auto num = [&](const char* key, double& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number()) reject(std::string("key '") + key + "' must be a number");
        out = j[key].get<double>();
    };
    auto integer = [&](const char* key, int& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer()) reject(std::string("key '") + key + "' must be an integer");
        out = j[key].get<int>();
    };
    num("alpha", c.alpha);
    num("beta", c.beta);
    num("k_min", c.k_min);
    num("lambda", c.lambda);
    num("agent_lr", c.agent_lr);
    num("env_lr_or_mix", c.env_lr_or_mix);
    integer("epochs", c.epochs);
    integer("batch_size", c.batch_size);
    integer("group_size", c.group_size);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            reject("key 'seed' must be a non-negative integer");
        c.seed = j["seed"].get<uint64_t>();
    }
    num("kl_weight", c.kl_weight);
    num("kl_cap", c.kl_cap);
    integer("num_contexts", c.num_contexts);
    integer("alphabet_size", c.alphabet_size);
    integer("max_difficulty", c.max_difficulty);
    num("structured_fraction", c.structured_fraction);
    num("init_difficulty_decay", c.init_difficulty_decay);
    num("env_explore_up", c.env_explore_up);
    num("env_explore_down", c.env_explore_down);
    num("replay_fraction", c.replay_fraction);
    integer("eval_tasks_per_difficulty", c.eval_tasks_per_difficulty);
    integer("eval_reps", c.eval_reps);

    validate_config(c);
    return c;
}

nlohmann::json config_to_json(const CurriculumConfig& c) {
    nlohmann::json j;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["k_min"] = c.k_min;
    j["lambda"] = c.lambda;
    j["agent_lr"] = c.agent_lr;
    j["env_lr_or_mix"] = c.env_lr_or_mix;
    j["epochs"] = c.epochs;
    j["batch_size"] = c.batch_size;
    j["group_size"] = c.group_size;
    j["seed"] = c.seed;
    j["kl_weight"] = c.kl_weight;
    j["kl_cap"] = c.kl_cap;
    j["num_contexts"] = c.num_contexts;
    j["alphabet_size"] = c.alphabet_size;
    j["max_difficulty"] = c.max_difficulty;
    j["structured_fraction"] = c.structured_fraction;
    j["init_difficulty_decay"] = c.init_difficulty_decay;
    j["env_explore_up"] = c.env_explore_up;
    j["env_explore_down"] = c.env_explore_down;
    j["replay_fraction"] = c.replay_fraction;
    j["eval_tasks_per_difficulty"] = c.eval_tasks_per_difficulty;
    j["eval_reps"] = c.eval_reps;
    return j;
}

CurriculumConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("config: parse failure in " + path + ": " + e.what());
    }
    return config_from_json(j);
}

void save_config(const CurriculumConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("config: cannot write " + path);
    out << config_to_json(cfg).dump(2) << "\n";
}

std::string config_digest(const CurriculumConfig& cfg) {
    // nlohmann::json orders object keys, so dump() is canonical
    return to_hex(fnv1a64(config_to_json(cfg).dump()));
}

} // namespace genenv

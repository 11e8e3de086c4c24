#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "dhall/bridgeland.hpp"

namespace dhall {

enum class Status { pass, fail, skipped_budget };
std::string to_string(Status s);

struct SessionConfig {
  Quiver quiver = Quiver::linear(2);
  int q = 2;
  KClass bound{2, 2};
  std::uint64_t budget = kDefaultBudget;
  std::string chi = "chi0";
  std::vector<std::string> checks;

  /// Throws std::invalid_argument on a bad configuration.
  void validate() const;
};

struct CheckReport {
  std::string check;
  Status status = Status::pass;
  std::string anchor;
  nlohmann::json counterexample;  // null unless failed
  nlohmann::json details = nlohmann::json::object();
  long ms = 0;
};

nlohmann::json to_json(const CheckReport& r, bool timing = true);

const std::vector<std::string>& check_ids();
/// One-line statement of what a check asserts; throws for unknown ids.
const std::string& check_anchor(const std::string& id);

/// Runs checks against one session; caches are shared across checks.
class Verifier {
 public:
  explicit Verifier(SessionConfig cfg);
  ~Verifier();

  const SessionConfig& config() const noexcept { return cfg_; }
  const Session& session() const noexcept { return *s_; }
  const HallAlgebra& hall() const noexcept { return *hall_; }
  const BridgelandAlgebra& dh() const noexcept { return *dh_; }

  CheckReport run(const std::string& id) const;
  std::vector<CheckReport> run(const std::vector<std::string>& ids) const;

 private:
  SessionConfig cfg_;
  std::unique_ptr<Session> s_;
  std::unique_ptr<HallAlgebra> hall_;
  std::unique_ptr<BridgelandAlgebra> dh_;
};

/// 0 when every report passed, 1 on any failure, 3 when the rest passed but something was skipped.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace dhall

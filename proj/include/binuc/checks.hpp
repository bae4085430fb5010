#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "binuc/algebra.hpp"
#include "binuc/lattice.hpp"

namespace binuc {

enum class Verdict { pass, fail, skipped };

struct CheckItem {
  std::string name;
  Verdict verdict = Verdict::pass;
  nlohmann::json witness;  // required on fail; informational elsewhere
};

struct CheckReport {
  std::string target;
  std::vector<CheckItem> checks;
  long long elapsed_ms = 0;

  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct CheckInput {
  std::string target;
  std::optional<FinLattice> lattice;
  std::optional<AlgebraSpec> algebra;  // exactly one of the two is set
};

const std::vector<std::string>& suite_names();  // lattice, binuclear, ..., all

/// Runs the named suite. `seed` drives the stability-vector sampling.
CheckReport run_suite(const CheckInput& input, const std::string& suite,
                      std::uint64_t seed = 12001);

}  // namespace binuc

#pragma once

#include <string>
#include <vector>

#include "symgor/betti.hpp"
#include "symgor/verify.hpp"

namespace symgor {

/// Machine-readable report with a fixed key order and "schema": 1. With
/// `stable`, every timing field is omitted so that runs compare byte for
/// byte.
std::string report_json(const VerificationReport& report, bool stable);

/// Check table for terminals.
std::string report_text(const VerificationReport& report, bool stable);

std::string lemmas_json(int n, const std::vector<LemmaResult>& results);
std::string lemmas_text(int n, const std::vector<LemmaResult>& results);

std::string invariants_json(int n, int t, const InvariantReport& inv);
std::string invariants_text(int n, int t, const InvariantReport& inv);

}  // namespace symgor

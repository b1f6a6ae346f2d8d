#pragma once

#include <string>
#include <vector>

#include "nabc/abc.hpp"
#include "nabc/instance.hpp"

namespace nabc {

/// 0 for HOLDS, 2 for HYPOTHESIS_VIOLATED, 1 otherwise.
int exit_code(Verdict v);

Json report_to_json(const AbcReport& r, const std::vector<std::string>& vars = {});
std::string report_text(const AbcReport& r, const std::vector<std::string>& vars = {});

std::string format_set_of(const std::vector<std::size_t>& I);

}  // namespace nabc

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "padicres/experiments.hpp"

namespace padicres {

// Header is the union of columns in first-seen order; missing cells stay empty.
void write_csv(std::ostream& os, const std::vector<SummaryRow>& rows, int decimals = 6);
std::string to_csv(const std::vector<SummaryRow>& rows, int decimals = 6);
std::string csv_escape(const std::string& s);

}  // namespace padicres

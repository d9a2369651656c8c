#pragma once

#include <vector>

#include "hyp321/database.hpp"

namespace hyp321::seeds {

void appendix_b_part1(std::vector<EntrySpec>& out);
void appendix_b_part2(std::vector<EntrySpec>& out);
void appendix_b_part3(std::vector<EntrySpec>& out);
void appendix_b_part4(std::vector<EntrySpec>& out);
void appendix_c(std::vector<EntrySpec>& out);
void equations(std::vector<EntrySpec>& out);

}  // namespace hyp321::seeds

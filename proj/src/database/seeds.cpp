#include "seeds.hpp"

namespace hyp321 {

const std::vector<DbEntry>& seed_db() {
    static const std::vector<DbEntry> db = [] {
        std::vector<EntrySpec> specs;
        seeds::appendix_b_part1(specs);
        seeds::appendix_b_part2(specs);
        seeds::appendix_b_part3(specs);
        seeds::appendix_b_part4(specs);
        seeds::appendix_c(specs);
        seeds::equations(specs);
        std::vector<DbEntry> out;
        out.reserve(specs.size());
        for (auto& s : specs) out.push_back(make_entry(s));
        return out;
    }();
    return db;
}

}  // namespace hyp321
